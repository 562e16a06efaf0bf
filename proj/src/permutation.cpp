#include "hecke/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "hecke/errors.hpp"

namespace hecke {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = kappa();
  if (n < 1) throw DomainError("permutation needs at least one strand");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images_) {
    if (v < 1 || v > n) throw DomainError("one-line entry out of range 1..kappa");
    if (seen[static_cast<std::size_t>(v) - 1]) throw DomainError("one-line entry repeated");
    seen[static_cast<std::size_t>(v) - 1] = true;
  }
}

Permutation Permutation::identity(int kappa) {
  if (kappa < 1) throw DomainError("kappa must be positive");
  std::vector<int> images(static_cast<std::size_t>(kappa));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int kappa, int i) {
  if (i < 1 || i >= kappa) throw DomainError("generator index out of range 1..kappa-1");
  Permutation w = identity(kappa);
  std::swap(w.images_[static_cast<std::size_t>(i) - 1], w.images_[static_cast<std::size_t>(i)]);
  return w;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= kappa(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (int i = 1; i <= kappa(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string((*this)(i));
  }
  return out;
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.kappa() != v.kappa()) throw DomainError("compose: mismatched kappa");
  std::vector<int> images(static_cast<std::size_t>(u.kappa()));
  for (int i = 1; i <= u.kappa(); ++i)
    images[static_cast<std::size_t>(i) - 1] = u(v(i));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& w) {
  std::vector<int> images(static_cast<std::size_t>(w.kappa()));
  for (int i = 1; i <= w.kappa(); ++i)
    images[static_cast<std::size_t>(w(i)) - 1] = i;
  return Permutation(std::move(images));
}

int length(const Permutation& w) {
  int count = 0;
  for (int i = 1; i <= w.kappa(); ++i)
    for (int j = i + 1; j <= w.kappa(); ++j)
      if (w(i) > w(j)) ++count;
  return count;
}

Word reduced_word(const Permutation& w) {
  Word word;
  word.kappa = w.kappa();
  word.reduced = true;
  // i is a left descent of w iff w^{-1}(i) > w^{-1}(i+1); stripping it
  // shortens the length by exactly one.
  std::vector<int> inv = inverse(w).images();
  bool found = true;
  while (found) {
    found = false;
    for (int i = w.kappa() - 1; i >= 1; --i) {
      if (inv[static_cast<std::size_t>(i) - 1] > inv[static_cast<std::size_t>(i)]) {
        word.letters.push_back(i);
        std::swap(inv[static_cast<std::size_t>(i) - 1], inv[static_cast<std::size_t>(i)]);
        found = true;
        break;
      }
    }
  }
  return word;
}

Permutation from_word(int kappa, const std::vector<int>& letters) {
  Permutation w = Permutation::identity(kappa);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w = compose(Permutation::transposition(kappa, *it), w);
  return w;
}

Permutation from_word(const Word& word) { return from_word(word.kappa, word.letters); }

Permutation restrict_to(const Permutation& w, int new_kappa) {
  if (new_kappa < 1 || new_kappa > w.kappa())
    throw DomainError("restrict_to: invalid target kappa");
  for (int i = new_kappa + 1; i <= w.kappa(); ++i)
    if (!w.fixes(i)) throw DomainError("restrict_to: permutation moves a dropped strand");
  std::vector<int> images(w.images().begin(), w.images().begin() + new_kappa);
  return Permutation(std::move(images));
}

Permutation embed(const Permutation& w, int new_kappa) {
  if (new_kappa < w.kappa()) throw DomainError("embed: target kappa too small");
  std::vector<int> images = w.images();
  images.reserve(static_cast<std::size_t>(new_kappa));
  for (int i = w.kappa() + 1; i <= new_kappa; ++i) images.push_back(i);
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(int kappa) {
  std::vector<int> images(static_cast<std::size_t>(kappa));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace hecke
