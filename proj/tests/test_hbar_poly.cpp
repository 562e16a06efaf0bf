#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <limits>
#include <random>

#include "hecke/errors.hpp"
#include "hecke/hbar_poly.hpp"

using hecke::HbarPoly;

namespace {

HbarPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(-1, 6);
  std::uniform_int_distribution<std::int64_t> coeff(-9, 9);
  const int d = deg(rng);
  std::vector<std::int64_t> coeffs;
  for (int i = 0; i <= d; ++i) coeffs.push_back(coeff(rng));
  return HbarPoly(std::move(coeffs));
}

}  // namespace

TEST_CASE("construction canonicalizes trailing zeros") {
  CHECK(HbarPoly({1, 2, 0, 0}) == HbarPoly({1, 2}));
  CHECK(HbarPoly({0, 0}) == HbarPoly::zero());
  CHECK(HbarPoly::zero().is_zero());
  CHECK(HbarPoly::zero().degree() == -1);
  CHECK(HbarPoly({5}).degree() == 0);
}

TEST_CASE("addition") {
  const HbarPoly p({3, -1, 2});
  CHECK(HbarPoly::zero() + p == p);
  CHECK(HbarPoly::hbar() + HbarPoly::hbar() == HbarPoly({0, 2}));
  // cancellation re-canonicalizes: (1 + hbar^2) + (-1) = hbar^2
  CHECK(HbarPoly({1, 0, 1}) + HbarPoly::constant(-1) == HbarPoly::monomial(1, 2));
  CHECK((HbarPoly({1, 1}) - HbarPoly({1, 1})).is_zero());
}

TEST_CASE("multiplication") {
  const HbarPoly p({3, -1, 2});
  CHECK(HbarPoly::one() * p == p);
  CHECK(HbarPoly::hbar() * HbarPoly::hbar() == HbarPoly::monomial(1, 2));
  CHECK(HbarPoly({1, 1}) * HbarPoly({1, 1}) == HbarPoly({1, 2, 1}));
  CHECK((p * HbarPoly::zero()).is_zero());
}

TEST_CASE("monomial") {
  CHECK(HbarPoly::monomial(1, 0) == HbarPoly::one());
  CHECK(HbarPoly::monomial(1, 1) == HbarPoly::hbar());
  CHECK(HbarPoly::monomial(0, 5).is_zero());
  CHECK_THROWS_AS(HbarPoly::monomial(1, -1), hecke::DomainError);
}

TEST_CASE("eval_at_zero") {
  CHECK(HbarPoly::zero().eval_at_zero() == 0);
  CHECK(HbarPoly({1, 1}).eval_at_zero() == 1);
  CHECK(HbarPoly::monomial(1, 2).eval_at_zero() == 0);
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937_64 rng(0);
  for (int trial = 0; trial < 1200; ++trial) {
    const HbarPoly a = random_poly(rng);
    const HbarPoly b = random_poly(rng);
    const HbarPoly c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + HbarPoly::zero() == a);
    CHECK(a * HbarPoly::one() == a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("no operation returns trailing zeros") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    const HbarPoly a = random_poly(rng);
    const HbarPoly b = random_poly(rng);
    for (const HbarPoly& r : {a + b, a - b, a * b}) {
      if (!r.coeffs().empty()) CHECK(r.coeffs().back() != 0);
    }
  }
}

TEST_CASE("overflow is a hard error") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(HbarPoly::constant(big) + HbarPoly::constant(big), hecke::OverflowError);
  CHECK_THROWS_AS(HbarPoly::constant(big) * HbarPoly::constant(2), hecke::OverflowError);
  CHECK_THROWS_AS(-HbarPoly::constant(std::numeric_limits<std::int64_t>::min()),
                  hecke::OverflowError);
}

TEST_CASE("rendering") {
  CHECK(HbarPoly::zero().to_string() == "0");
  CHECK(HbarPoly::one().to_string() == "1");
  CHECK(HbarPoly({1, 2, 1}).to_string(true) == "1 + 2*h + h^2");
  CHECK(HbarPoly({0, -1}).to_string(true) == "-h");
  CHECK(HbarPoly({1, 0, -3}).to_string(true) == "1 - 3*h^2");
}
