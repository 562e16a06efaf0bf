#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "hecke/algebraic.hpp"
#include "hecke/errors.hpp"
#include "hecke/geometric.hpp"

using hecke::HbarPoly;
using hecke::HeckeElement;
using hecke::ModuliQuery;
using hecke::Permutation;

namespace {

long count(const Permutation& w1, const Permutation& w2, const Permutation& w3, int chi) {
  return hecke::curve_count(ModuliQuery{w1, w2, w3, chi});
}

}  // namespace

TEST_CASE("kappa=1 base case") {
  const Permutation id1 = Permutation::identity(1);
  CHECK(count(id1, id1, id1, 1) == 1);
  for (int chi : {-3, -1, 0}) CHECK(count(id1, id1, id1, chi) == 0);
  CHECK_THROWS_AS(count(id1, id1, id1, 2), hecke::DomainError);
}

TEST_CASE("kappa=2 base table") {
  const Permutation id2 = Permutation::identity(2);
  const Permutation s1 = Permutation::transposition(2, 1);
  const std::vector<Permutation> elems{id2, s1};

  for (const Permutation& w1 : elems) {
    for (const Permutation& w2 : elems) {
      for (const Permutation& w3 : elems) {
        for (int chi = -4; chi <= 2; ++chi) {
          long expected = 0;
          if (w1 == id2 && w2 == id2 && w3 == id2 && chi == 2) expected = 1;
          if (w1 == id2 && w2 == s1 && w3 == s1 && chi == 2) expected = 1;
          if (w1 == s1 && w2 == id2 && w3 == s1 && chi == 2) expected = 1;
          if (w1 == s1 && w2 == s1 && w3 == id2 && chi == 2) expected = 1;
          if (w1 == s1 && w2 == s1 && w3 == s1 && chi == 1) expected = 1;
          CHECK(count(w1, w2, w3, chi) == expected);
        }
      }
    }
  }
}

TEST_CASE("query validation") {
  const Permutation id2 = Permutation::identity(2);
  CHECK_THROWS_AS(count(id2, id2, id2, 3), hecke::DomainError);
  CHECK_THROWS_AS(count(id2, id2, Permutation::identity(3), 2), hecke::DomainError);
  CHECK_THROWS_AS(count(Permutation({3, 1, 2}), Permutation::identity(3),
                        Permutation::identity(3), 2),
                  hecke::UnsupportedLeftFactor);
  CHECK_THROWS_AS(hecke::geometric_product(Permutation({3, 1, 2}), Permutation::identity(3)),
                  hecke::UnsupportedLeftFactor);
}

TEST_CASE("one double-coset step reaches the kappa=1 base") {
  const Permutation s2 = Permutation::transposition(3, 2);
  const Permutation id3 = Permutation::identity(3);
  CHECK(count(s2, s2, id3, 3) == 1);
  CHECK(count(s2, s2, s2, 2) == 1);
  for (int chi = -2; chi <= 3; ++chi) {
    if (chi != 3) CHECK(count(s2, s2, id3, chi) == 0);
    if (chi != 2) CHECK(count(s2, s2, s2, chi) == 0);
    CHECK(count(s2, s2, Permutation({2, 1, 3}), chi) == 0);
  }
}

TEST_CASE("identity left factor reproduces the right factor") {
  for (int kappa = 1; kappa <= 4; ++kappa) {
    const Permutation id = Permutation::identity(kappa);
    for (const Permutation& w : hecke::all_permutations(kappa))
      CHECK(hecke::geometric_product(id, w).result == HeckeElement::basis(w));
  }
}

TEST_CASE("generator squares and a top-coset reduction") {
  const Permutation s1_k2 = Permutation::transposition(2, 1);
  HeckeElement expected = HeckeElement::basis(Permutation::identity(2));
  expected.add_term(s1_k2, HbarPoly::hbar());
  CHECK(hecke::geometric_product(s1_k2, s1_k2).result == expected);

  // T_{s1} * T_{s2 s1} = T_{s1 s2 s1} at kappa = 3
  const Permutation s1 = Permutation::transposition(3, 1);
  const Permutation s2s1({3, 1, 2});
  CHECK(hecke::geometric_product(s1, s2s1).result ==
        HeckeElement::basis(Permutation({3, 2, 1})));
}

TEST_CASE("geometric product agrees with per-query counts") {
  for (int kappa = 1; kappa <= 4; ++kappa) {
    const auto all = hecke::all_permutations(kappa);
    for (const Permutation& w1 : hecke::supported_left_factors(kappa)) {
      const int len1 = hecke::length(w1);
      for (const Permutation& w2 : all) {
        const hecke::GeomProduct product = hecke::geometric_product(w1, w2);
        for (const Permutation& w3 : all) {
          HbarPoly expected;
          for (int chi = kappa - len1; chi <= kappa; ++chi)
            expected += HbarPoly::monomial(count(w1, w2, w3, chi), kappa - chi);
          CHECK(product.result.coeff(w3) == expected);
        }
        // trace rows are the nonzero counts, sorted
        for (const auto& entry : product.trace) {
          CHECK(entry.count == 1);
          CHECK(count(w1, w2, entry.w3, entry.chi) == 1);
        }
        CHECK(std::is_sorted(product.trace.begin(), product.trace.end(),
                             [](const hecke::CountTrace& a, const hecke::CountTrace& b) {
                               return std::tie(a.w3, a.chi) < std::tie(b.w3, b.chi);
                             }));
      }
    }
  }
}

TEST_CASE("counts stay in {0,1}, respect the deficit bound and preserve m") {
  for (int kappa = 1; kappa <= 5; ++kappa) {
    const auto all = hecke::all_permutations(kappa);
    for (const Permutation& w1 : hecke::supported_left_factors(kappa)) {
      const int len1 = hecke::length(w1);
      const bool top_fixed = w1.fixes(kappa);
      for (const Permutation& w2 : all) {
        for (const Permutation& w3 : all) {
          for (int chi = kappa - len1 - 2; chi <= kappa; ++chi) {
            const long n = count(w1, w2, w3, chi);
            CHECK((n == 0 || n == 1));
            if (kappa - chi < 0 || kappa - chi > len1) CHECK(n == 0);
            if (n == 1 && top_fixed && kappa >= 2) {
              CHECK(hecke::top_coset_decompose(w2).m == hecke::top_coset_decompose(w3).m);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("backend agreement on supported left factors") {
  for (int kappa = 1; kappa <= 4; ++kappa) {
    for (const Permutation& w1 : hecke::supported_left_factors(kappa)) {
      for (const Permutation& w2 : hecke::all_permutations(kappa)) {
        CHECK(hecke::geometric_product(w1, w2).result ==
              mul(HeckeElement::basis(w1), HeckeElement::basis(w2)));
      }
    }
  }
}

TEST_CASE("generator products have hbar-degree at most one") {
  for (int kappa = 2; kappa <= 5; ++kappa) {
    for (int i = 1; i <= kappa - 1; ++i) {
      const Permutation s_i = Permutation::transposition(kappa, i);
      for (const Permutation& w : hecke::all_permutations(kappa)) {
        for (const auto& [w3, c] : hecke::geometric_product(s_i, w).result.terms())
          CHECK(c.degree() <= 1);
      }
    }
  }
}

TEST_CASE("supported_left_factors") {
  CHECK(hecke::supported_left_factors(1) == std::vector<Permutation>{Permutation::identity(1)});
  CHECK(hecke::supported_left_factors(2) ==
        std::vector<Permutation>{Permutation::identity(2), Permutation({2, 1})});

  const auto k4 = hecke::supported_left_factors(4);
  const std::vector<Permutation> expected{
      Permutation::identity(4),       Permutation({1, 2, 4, 3}), Permutation({1, 3, 2, 4}),
      Permutation({2, 1, 3, 4}),      Permutation({2, 1, 4, 3}),
  };
  CHECK(k4 == expected);

  const int fib[] = {1, 1, 2, 3, 5, 8, 13, 21, 34};
  for (int kappa = 1; kappa <= 8; ++kappa) {
    const auto factors = hecke::supported_left_factors(kappa);
    CHECK(static_cast<int>(factors.size()) == fib[kappa]);
    CHECK(std::is_sorted(factors.begin(), factors.end()));
    for (const auto& w : factors) CHECK(hecke::is_simple_involution_product(w));
  }
  for (int kappa = 1; kappa <= 6; ++kappa) {
    long filtered = 0;
    for (const Permutation& w : hecke::all_permutations(kappa))
      if (hecke::is_simple_involution_product(w)) ++filtered;
    CHECK(filtered == static_cast<long>(hecke::supported_left_factors(kappa).size()));
  }
}

TEST_CASE("folding generators rebuilds unsupported left factors") {
  for (int kappa = 3; kappa <= 4; ++kappa) {
    for (const Permutation& w1 : hecke::all_permutations(kappa)) {
      if (hecke::is_simple_involution_product(w1)) continue;
      const Permutation w2 = Permutation::transposition(kappa, 1);
      HeckeElement folded = HeckeElement::basis(w2);
      const hecke::Word word = hecke::reduced_word(w1);
      for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
        folded = hecke::geometric_left_mul_gen(*it, folded);
      CHECK(folded == mul(HeckeElement::basis(w1), HeckeElement::basis(w2)));
    }
  }
}
