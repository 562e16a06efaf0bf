#ifndef HECKE_HBAR_POLY_HPP_
#define HECKE_HBAR_POLY_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace hecke {

// Univariate polynomial in the deformation variable hbar with exact
// integer coefficients: coeffs()[d] is the coefficient of hbar^d.
// Canonical form: no trailing zero coefficient; the zero polynomial is
// the empty sequence.  All arithmetic is overflow-checked and throws
// OverflowError instead of wrapping.
class HbarPoly {
 public:
  HbarPoly() = default;
  explicit HbarPoly(std::vector<std::int64_t> coeffs);

  static HbarPoly zero() { return HbarPoly{}; }
  static HbarPoly one() { return constant(1); }
  static HbarPoly hbar() { return monomial(1, 1); }
  static HbarPoly constant(std::int64_t c);
  // c * hbar^degree; degree < 0 is a DomainError.
  static HbarPoly monomial(std::int64_t c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int d) const;
  std::int64_t eval_at_zero() const { return coeff(0); }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  HbarPoly operator-() const;
  HbarPoly operator+(const HbarPoly& other) const;
  HbarPoly operator-(const HbarPoly& other) const;
  HbarPoly operator*(const HbarPoly& other) const;
  HbarPoly& operator+=(const HbarPoly& other);
  HbarPoly& operator*=(const HbarPoly& other);

  bool operator==(const HbarPoly& other) const = default;

  std::string to_string(bool ascii = false) const;

 private:
  void trim();

  std::vector<std::int64_t> coeffs_;
};

}  // namespace hecke

#endif  // HECKE_HBAR_POLY_HPP_
