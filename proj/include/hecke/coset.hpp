#ifndef HECKE_COSET_HPP_
#define HECKE_COSET_HPP_

#include "hecke/permutation.hpp"

namespace hecke {

// chain(kappa, a, b) = s_a s_{a-1} ... s_b; the identity when b > a.
Permutation chain(int kappa, int a, int b);

// Unique expression w = w_prime o s_{kappa-1} s_{kappa-2} ... s_{kappa-m}
// with w_prime fixing kappa.  m = kappa - w^{-1}(kappa) and
// length(w) = length(w_prime) + m.
struct TopCosetDecomp {
  Permutation w_prime;
  int m = 0;
};

TopCosetDecomp top_coset_decompose(const Permutation& w);
Permutation top_coset_compose(const Permutation& w_prime, int m);

// Normal form over the subgroup fixing the top two strands, with two
// descending generator chains parameterized by m > l >= 0:
//   F1:  w = w'' o chain(kappa-2, kappa-m) o chain(kappa-1, kappa-l)
//   F2:  w = w'' o chain(kappa-1, kappa-m) o chain(kappa-1, kappa-l)
// Exactly one (family, w'', m, l) reconstructs each w; verify_coset_cover
// checks this exhaustively.
enum class CosetFamily { F1, F2 };

const char* family_name(CosetFamily family);

struct DoubleCosetDecomp {
  CosetFamily family = CosetFamily::F1;
  Permutation w_double_prime;  // fixes kappa-1 and kappa
  int m = 0;
  int l = 0;
};

Permutation double_coset_compose(CosetFamily family, const Permutation& w_double_prime,
                                 int m, int l);

// Scans the O(kappa^2) candidate (family, m, l) triples in a fixed order
// and accepts the one whose residual factor fixes kappa-1 and kappa.
DoubleCosetDecomp double_coset_decompose(const Permutation& w);

// Letters attached by the family's two chains: F1 has (m-1)+l, F2 has m+l.
int double_coset_chain_length(CosetFamily family, int m, int l);

// True iff w is a product of pairwise disjoint adjacent transpositions:
// scanning from kappa downward, every position is fixed or swapped with
// its immediate lower neighbor.
bool is_simple_involution_product(const Permutation& w);

}  // namespace hecke

#endif  // HECKE_COSET_HPP_
