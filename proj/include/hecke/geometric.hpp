#ifndef HECKE_GEOMETRIC_HPP_
#define HECKE_GEOMETRIC_HPP_

#include <vector>

#include "hecke/coset.hpp"
#include "hecke/hecke_element.hpp"

namespace hecke {

// Curve-count multiplication backend.
//
// curve_count computes the number of curves of Euler characteristic chi
// contributing T_w3 to the product T_w1 * T_w2, by structural recursion
// on kappa from small closed-form base tables:
//
//   kappa = 1: count(id, id, id, chi) = 1 iff chi = 1.
//   kappa = 2: exactly five nonzero cases, all of count 1:
//              (id,id,id,2), (id,s1,s1,2), (s1,id,s1,2),
//              (s1,s1,id,2), (s1,s1,s1,1).
//   w1 fixes kappa: strip the top strand from w2 and w3 via the
//              top-coset normal form; the counts agree at kappa-1 with
//              chi-1 when the stripped chain lengths match, else 0.
//   w1 swaps the top two strands: strip both strands via the
//              double-coset normal form (m, l shared between w2 and w3):
//                w2 in F1 -> w3 must be in F2, recurse with chi-2;
//                w2 in F2 -> w3 in F1 recurses with chi-2,
//                            w3 in F2 recurses with chi-1; else 0.
//
// The recursion covers exactly the left factors that are products of
// disjoint adjacent transpositions; any other w1 raises
// UnsupportedLeftFactor.

// Names the count of curves with ends (T_w1, T_w2, T_w3) and domain
// Euler characteristic chi.
struct ModuliQuery {
  Permutation w1;
  Permutation w2;
  Permutation w3;
  int chi = 0;
};

// Always 0 or 1.  DomainError if the permutations disagree on kappa or
// chi > kappa; UnsupportedLeftFactor if w1 is outside the recursion's
// domain.
long curve_count(const ModuliQuery& q);

struct CountTrace {
  Permutation w3;
  int chi = 0;
  long count = 0;
};

struct GeomProduct {
  HeckeElement result;
  // Nonzero counts behind result, sorted by (w3, chi);
  // coeff(T_w3) = sum over chi of count * hbar^(kappa - chi).
  std::vector<CountTrace> trace;
};

// The m2 product T_w1 * T_w2 assembled from curve counts, each weighted
// by hbar^(kappa - chi).
GeomProduct geometric_product(const Permutation& w1, const Permutation& w2);

// T_i * x extended linearly over the terms of x, computed with
// geometric products (every s_i is a supported left factor).
HeckeElement geometric_left_mul_gen(int i, const HeckeElement& x);

// All products of disjoint adjacent transpositions in S_kappa, in
// lexicographic order.  Their number obeys a(k) = a(k-1) + a(k-2),
// a(0) = a(1) = 1.
std::vector<Permutation> supported_left_factors(int kappa);

}  // namespace hecke

#endif  // HECKE_GEOMETRIC_HPP_
