#include "hecke/algebraic.hpp"

#include "hecke/errors.hpp"

namespace hecke {

HeckeElement left_mul_gen(int i, const HeckeElement& x) {
  const int k = x.kappa();
  if (i < 1 || i > k - 1) throw DomainError("generator index out of range 1..kappa-1");
  const Permutation s_i = Permutation::transposition(k, i);
  HeckeElement out(k);
  for (const auto& [w, c] : x.terms()) {
    Permutation sw = compose(s_i, w);
    out.add_term(sw, c);
    if (length(sw) < length(w)) out.add_term(w, c * HbarPoly::hbar());
  }
  return out;
}

HeckeElement mul(const HeckeElement& a, const HeckeElement& b) {
  if (a.kappa() != b.kappa()) throw DomainError("mul: mismatched kappa");
  HeckeElement out(a.kappa());
  for (const auto& [u, c] : a.terms()) {
    HeckeElement acc = b;
    const Word word = reduced_word(u);
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
      acc = left_mul_gen(*it, acc);
    out += acc.scaled(c);
  }
  return out;
}

std::map<Permutation, std::int64_t> specialize_hbar0(const HeckeElement& x) {
  std::map<Permutation, std::int64_t> out;
  for (const auto& [w, c] : x.terms()) {
    std::int64_t v = c.eval_at_zero();
    if (v != 0) out.emplace(w, v);
  }
  return out;
}

}  // namespace hecke
