#include "hecke/geometric.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

// Base table at kappa = 2: the five nonzero counts.
long base_count_k2(const Permutation& w1, const Permutation& w2, const Permutation& w3,
                   int chi) {
  const bool a = w1.is_identity();
  const bool b = w2.is_identity();
  const bool c = w3.is_identity();
  if (a && b && c) return chi == 2 ? 1 : 0;
  if (a && !b && !c) return chi == 2 ? 1 : 0;
  if (!a && b && !c) return chi == 2 ? 1 : 0;
  if (!a && !b && c) return chi == 2 ? 1 : 0;
  if (!a && !b && !c) return chi == 1 ? 1 : 0;
  return 0;
}

// w1 = w1'' o s_{kappa-1}; removing the top swap leaves w1'' on the
// first kappa-2 strands.
Permutation strip_top_swap(const Permutation& w1) {
  const int k = w1.kappa();
  return restrict_to(compose(w1, Permutation::transposition(k, k - 1)), k - 2);
}

long count_rec(const Permutation& w1, const Permutation& w2, const Permutation& w3,
               int chi) {
  const int k = w1.kappa();
  if (k == 1) return (chi == 1 && w2.is_identity() && w3.is_identity()) ? 1 : 0;
  if (k == 2) return base_count_k2(w1, w2, w3, chi);

  if (w1.fixes(k)) {
    TopCosetDecomp d2 = top_coset_decompose(w2);
    TopCosetDecomp d3 = top_coset_decompose(w3);
    if (d3.m != d2.m) return 0;
    return count_rec(restrict_to(w1, k - 1), restrict_to(d2.w_prime, k - 1),
                     restrict_to(d3.w_prime, k - 1), chi - 1);
  }

  // w1 swaps kappa-1 and kappa.
  DoubleCosetDecomp d2 = double_coset_decompose(w2);
  DoubleCosetDecomp d3 = double_coset_decompose(w3);
  if (d3.m != d2.m || d3.l != d2.l) return 0;
  const Permutation w1pp = strip_top_swap(w1);
  const Permutation w2pp = restrict_to(d2.w_double_prime, k - 2);
  const Permutation w3pp = restrict_to(d3.w_double_prime, k - 2);
  if (d2.family == CosetFamily::F1)
    return d3.family == CosetFamily::F2 ? count_rec(w1pp, w2pp, w3pp, chi - 2) : 0;
  return d3.family == CosetFamily::F1 ? count_rec(w1pp, w2pp, w3pp, chi - 2)
                                      : count_rec(w1pp, w2pp, w3pp, chi - 1);
}

void check_query(const Permutation& w1, const Permutation& w2) {
  if (w1.kappa() != w2.kappa()) throw DomainError("curve count: mismatched kappa");
  if (!is_simple_involution_product(w1))
    throw UnsupportedLeftFactor(
        "unsupported left factor [" + w1.to_string() +
        "]: the curve-count recursion needs a product of disjoint adjacent transpositions");
}

// Nonzero terms of T_w1 * T_w2 as a map w3 -> Euler deficit kappa - chi.
// Each surviving w3 arises along exactly one recursion path, so its
// coefficient is a single power of hbar.
std::map<Permutation, int> product_rec(const Permutation& w1, const Permutation& w2) {
  const int k = w1.kappa();
  std::map<Permutation, int> out;
  if (k == 1) {
    out.emplace(w2, 0);
    return out;
  }
  if (k == 2) {
    if (w1.is_identity()) {
      out.emplace(w2, 0);
    } else if (w2.is_identity()) {
      out.emplace(w1, 0);
    } else {
      out.emplace(Permutation::identity(2), 0);
      out.emplace(w2, 1);
    }
    return out;
  }

  if (w1.fixes(k)) {
    TopCosetDecomp d2 = top_coset_decompose(w2);
    auto sub = product_rec(restrict_to(w1, k - 1), restrict_to(d2.w_prime, k - 1));
    for (auto& [w3_sub, deficit] : sub)
      out.emplace(top_coset_compose(embed(w3_sub, k), d2.m), deficit);
    return out;
  }

  DoubleCosetDecomp d2 = double_coset_decompose(w2);
  auto sub = product_rec(strip_top_swap(w1), restrict_to(d2.w_double_prime, k - 2));
  for (auto& [w3_sub, deficit] : sub) {
    const Permutation lifted = embed(w3_sub, k);
    if (d2.family == CosetFamily::F1) {
      out.emplace(double_coset_compose(CosetFamily::F2, lifted, d2.m, d2.l), deficit);
    } else {
      out.emplace(double_coset_compose(CosetFamily::F1, lifted, d2.m, d2.l), deficit);
      out.emplace(double_coset_compose(CosetFamily::F2, lifted, d2.m, d2.l), deficit + 1);
    }
  }
  return out;
}

}  // namespace

long curve_count(const ModuliQuery& q) {
  check_query(q.w1, q.w2);
  if (q.w1.kappa() != q.w3.kappa()) throw DomainError("curve count: mismatched kappa");
  if (q.chi > q.w1.kappa()) throw DomainError("curve count: chi exceeds kappa");
  return count_rec(q.w1, q.w2, q.w3, q.chi);
}

GeomProduct geometric_product(const Permutation& w1, const Permutation& w2) {
  check_query(w1, w2);
  const int k = w1.kappa();
  auto terms = product_rec(w1, w2);
  GeomProduct out{HeckeElement(k), {}};
  for (const auto& [w3, deficit] : terms) {
    out.result.add_term(w3, HbarPoly::monomial(1, deficit));
    out.trace.push_back(CountTrace{w3, k - deficit, 1});
  }
  return out;
}

HeckeElement geometric_left_mul_gen(int i, const HeckeElement& x) {
  const int k = x.kappa();
  if (i < 1 || i > k - 1) throw DomainError("generator index out of range 1..kappa-1");
  const Permutation s_i = Permutation::transposition(k, i);
  HeckeElement out(k);
  for (const auto& [w, c] : x.terms())
    out += geometric_product(s_i, w).result.scaled(c);
  return out;
}

std::vector<Permutation> supported_left_factors(int kappa) {
  if (kappa < 1) throw DomainError("kappa must be positive");
  // Grown from the bottom: position k is either fixed or swapped with
  // k-1, matching is_simple_involution_product.
  std::vector<std::vector<Permutation>> levels(static_cast<std::size_t>(kappa) + 1);
  levels[1] = {Permutation::identity(1)};
  if (kappa >= 2) levels[2] = {Permutation::identity(2), Permutation::transposition(2, 1)};
  for (int k = 3; k <= kappa; ++k) {
    for (const auto& w : levels[static_cast<std::size_t>(k) - 1])
      levels[static_cast<std::size_t>(k)].push_back(embed(w, k));
    for (const auto& w : levels[static_cast<std::size_t>(k) - 2])
      levels[static_cast<std::size_t>(k)].push_back(
          compose(embed(w, k), Permutation::transposition(k, k - 1)));
  }
  auto out = levels[static_cast<std::size_t>(kappa)];
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hecke
