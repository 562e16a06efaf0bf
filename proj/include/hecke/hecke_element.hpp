#ifndef HECKE_HECKE_ELEMENT_HPP_
#define HECKE_HECKE_ELEMENT_HPP_

#include <map>
#include <string>

#include "hecke/hbar_poly.hpp"
#include "hecke/permutation.hpp"

namespace hecke {

// Finite Z[hbar]-linear combination of standard basis elements T_w, all
// indexed by permutations of one kappa.  Zero polynomials are never
// stored; terms iterate in lexicographic one-line order.
class HeckeElement {
 public:
  explicit HeckeElement(int kappa);

  static HeckeElement zero(int kappa) { return HeckeElement(kappa); }
  // The element 1 * T_w.
  static HeckeElement basis(const Permutation& w);

  int kappa() const { return kappa_; }
  const std::map<Permutation, HbarPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  HbarPoly coeff(const Permutation& w) const;

  // Accumulates c * T_w, pruning the term if it cancels to zero.
  void add_term(const Permutation& w, const HbarPoly& c);

  HeckeElement operator+(const HeckeElement& other) const;
  HeckeElement& operator+=(const HeckeElement& other);
  HeckeElement scaled(const HbarPoly& c) const;

  bool operator==(const HeckeElement& other) const = default;

  // "T_id + hbar*T_[2,1]" style rendering.
  std::string to_string(bool ascii = false) const;

 private:
  int kappa_;
  std::map<Permutation, HbarPoly> terms_;
};

}  // namespace hecke

#endif  // HECKE_HECKE_ELEMENT_HPP_
