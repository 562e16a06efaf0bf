#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "hecke/errors.hpp"
#include "hecke/permutation.hpp"

using hecke::Permutation;

namespace {

Permutation random_permutation(int kappa, std::mt19937_64& rng) {
  std::vector<int> images(static_cast<std::size_t>(kappa));
  for (int i = 0; i < kappa; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

}  // namespace

TEST_CASE("construction validates one-line notation") {
  CHECK_NOTHROW(Permutation({3, 1, 2}));
  CHECK_THROWS_AS(Permutation({1, 1, 2}), hecke::DomainError);
  CHECK_THROWS_AS(Permutation({1, 4, 2}), hecke::DomainError);
  CHECK_THROWS_AS(Permutation({0, 1}), hecke::DomainError);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), hecke::DomainError);
}

TEST_CASE("compose") {
  const Permutation id3 = Permutation::identity(3);
  const Permutation w({3, 1, 2});
  CHECK(compose(id3, w) == w);
  CHECK(compose(Permutation({2, 1}), Permutation({2, 1})) == Permutation::identity(2));
  // apply s1 first, then s2
  CHECK(compose(Permutation::transposition(3, 2), Permutation::transposition(3, 1)) ==
        Permutation({3, 1, 2}));
  CHECK_THROWS_AS(compose(Permutation::identity(2), id3), hecke::DomainError);
}

TEST_CASE("inverse") {
  CHECK(inverse(Permutation::identity(4)) == Permutation::identity(4));
  CHECK(inverse(Permutation({2, 1})) == Permutation({2, 1}));
  CHECK(inverse(Permutation({3, 1, 2})) == Permutation({2, 3, 1}));
}

TEST_CASE("length is the inversion count") {
  CHECK(hecke::length(Permutation::identity(5)) == 0);
  CHECK(hecke::length(Permutation::transposition(5, 3)) == 1);
  CHECK(hecke::length(Permutation({3, 2, 1})) == 3);
}

TEST_CASE("reduced_word") {
  CHECK(hecke::reduced_word(Permutation::identity(3)).letters.empty());
  CHECK(hecke::reduced_word(Permutation({2, 1})).letters == std::vector<int>{1});
  CHECK(hecke::reduced_word(Permutation({3, 1, 2})).letters == std::vector<int>{2, 1});
  CHECK(hecke::reduced_word(Permutation({3, 1, 2})).reduced);
}

TEST_CASE("from_word") {
  CHECK(hecke::from_word(3, {}) == Permutation::identity(3));
  CHECK(hecke::from_word(2, {1}) == Permutation({2, 1}));
  CHECK(hecke::from_word(3, {2, 1}) == Permutation({3, 1, 2}));
  CHECK_THROWS_AS(hecke::from_word(3, {3}), hecke::DomainError);
  CHECK_THROWS_AS(hecke::from_word(3, {0}), hecke::DomainError);
}

TEST_CASE("left multiplication by a generator moves the length by one") {
  for (int kappa = 1; kappa <= 6; ++kappa) {
    for (const Permutation& w : hecke::all_permutations(kappa)) {
      const int len = hecke::length(w);
      for (int i = 1; i <= kappa - 1; ++i) {
        const int moved = hecke::length(compose(Permutation::transposition(kappa, i), w));
        CHECK(std::abs(moved - len) == 1);
      }
    }
  }
}

TEST_CASE("reduced words reconstruct and have minimal length") {
  for (int kappa = 1; kappa <= 6; ++kappa) {
    for (const Permutation& w : hecke::all_permutations(kappa)) {
      const hecke::Word word = hecke::reduced_word(w);
      CHECK(hecke::from_word(word) == w);
      CHECK(static_cast<int>(word.letters.size()) == hecke::length(w));
    }
  }
}

TEST_CASE("compose is associative and inverse is two-sided") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1200; ++trial) {
    const int kappa = 1 + static_cast<int>(rng() % 8);
    const Permutation a = random_permutation(kappa, rng);
    const Permutation b = random_permutation(kappa, rng);
    const Permutation c = random_permutation(kappa, rng);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, inverse(a)) == Permutation::identity(kappa));
    CHECK(compose(inverse(a), a) == Permutation::identity(kappa));
  }
}

TEST_CASE("restrict and embed") {
  const Permutation w({2, 1, 3, 4});
  CHECK(hecke::restrict_to(w, 2) == Permutation({2, 1}));
  CHECK(hecke::embed(Permutation({2, 1}), 4) == w);
  CHECK_THROWS_AS(hecke::restrict_to(Permutation({1, 3, 2}), 2), hecke::DomainError);
  CHECK_THROWS_AS(hecke::embed(w, 3), hecke::DomainError);
}

TEST_CASE("all_permutations is lexicographic") {
  const auto perms = hecke::all_permutations(3);
  REQUIRE(perms.size() == 6);
  CHECK(perms.front() == Permutation::identity(3));
  CHECK(perms.back() == Permutation({3, 2, 1}));
  CHECK(std::is_sorted(perms.begin(), perms.end()));
}

TEST_CASE("rendering") {
  CHECK(Permutation({3, 1, 2}).to_string() == "3 1 2");
  CHECK(Permutation::identity(1).to_string() == "1");
}
