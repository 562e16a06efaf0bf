#include "hecke/hbar_poly.hpp"

#include <cstdlib>
#include <utility>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("integer overflow in coefficient addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("integer overflow in coefficient multiplication");
  return r;
}

}  // namespace

HbarPoly::HbarPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

HbarPoly HbarPoly::constant(std::int64_t c) { return monomial(c, 0); }

HbarPoly HbarPoly::monomial(std::int64_t c, int degree) {
  if (degree < 0) throw DomainError("monomial degree must be nonnegative");
  if (c == 0) return HbarPoly{};
  HbarPoly p;
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, 0);
  p.coeffs_.back() = c;
  return p;
}

std::int64_t HbarPoly::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(d)];
}

void HbarPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

HbarPoly HbarPoly::operator-() const {
  HbarPoly r = *this;
  for (auto& c : r.coeffs_) c = checked_mul(c, -1);
  return r;
}

HbarPoly HbarPoly::operator+(const HbarPoly& other) const {
  HbarPoly r = *this;
  r += other;
  return r;
}

HbarPoly& HbarPoly::operator+=(const HbarPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t d = 0; d < other.coeffs_.size(); ++d)
    coeffs_[d] = checked_add(coeffs_[d], other.coeffs_[d]);
  trim();
  return *this;
}

HbarPoly HbarPoly::operator-(const HbarPoly& other) const { return *this + (-other); }

HbarPoly HbarPoly::operator*(const HbarPoly& other) const {
  if (is_zero() || other.is_zero()) return HbarPoly{};
  std::vector<std::int64_t> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      out[i + j] = checked_add(out[i + j], checked_mul(coeffs_[i], other.coeffs_[j]));
  }
  return HbarPoly(std::move(out));
}

HbarPoly& HbarPoly::operator*=(const HbarPoly& other) {
  *this = *this * other;
  return *this;
}

std::string HbarPoly::to_string(bool ascii) const {
  if (is_zero()) return "0";
  const char* h = ascii ? "h" : "ħ";
  const char* dot = ascii ? "*" : "·";
  std::string out;
  for (int d = 0; d <= degree(); ++d) {
    std::int64_t c = coeffs_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::int64_t mag = c < 0 ? -c : c;
    if (d == 0) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + dot;
      out += h;
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

}  // namespace hecke
