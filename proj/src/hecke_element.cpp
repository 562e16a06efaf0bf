#include "hecke/hecke_element.hpp"

#include "hecke/errors.hpp"

namespace hecke {

HeckeElement::HeckeElement(int kappa) : kappa_(kappa) {
  if (kappa < 1) throw DomainError("kappa must be positive");
}

HeckeElement HeckeElement::basis(const Permutation& w) {
  HeckeElement x(w.kappa());
  x.terms_.emplace(w, HbarPoly::one());
  return x;
}

HbarPoly HeckeElement::coeff(const Permutation& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? HbarPoly::zero() : it->second;
}

void HeckeElement::add_term(const Permutation& w, const HbarPoly& c) {
  if (w.kappa() != kappa_) throw DomainError("add_term: mismatched kappa");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement HeckeElement::operator+(const HeckeElement& other) const {
  HeckeElement r = *this;
  r += other;
  return r;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
  if (other.kappa_ != kappa_) throw DomainError("add: mismatched kappa");
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

HeckeElement HeckeElement::scaled(const HbarPoly& c) const {
  HeckeElement r(kappa_);
  if (c.is_zero()) return r;
  for (const auto& [w, coeff] : terms_) r.terms_.emplace(w, coeff * c);
  return r;
}

namespace {

std::string basis_name(const Permutation& w) {
  if (w.is_identity()) return "T_id";
  std::string s = "T_[";
  for (int i = 1; i <= w.kappa(); ++i) {
    if (i > 1) s += ',';
    s += std::to_string(w(i));
  }
  return s + "]";
}

bool single_term(const HbarPoly& c) {
  int nonzero = 0;
  for (auto v : c.coeffs())
    if (v != 0) ++nonzero;
  return nonzero == 1;
}

}  // namespace

std::string HeckeElement::to_string(bool ascii) const {
  if (terms_.empty()) return "0";
  const char* dot = ascii ? "*" : "·";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c == HbarPoly::one()) {
      out += basis_name(w);
    } else if (single_term(c)) {
      out += c.to_string(ascii) + dot + basis_name(w);
    } else {
      out += "(" + c.to_string(ascii) + ")" + dot + basis_name(w);
    }
  }
  return out;
}

}  // namespace hecke
