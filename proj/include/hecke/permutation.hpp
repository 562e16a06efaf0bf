#ifndef HECKE_PERMUTATION_HPP_
#define HECKE_PERMUTATION_HPP_

#include <compare>
#include <string>
#include <vector>

namespace hecke {

// Element of the symmetric group S_kappa in one-line notation:
// images()[i-1] = w(i), a bijection of {1,...,kappa}.  Immutable value.
class Permutation {
 public:
  // Validates that images is a bijection of {1,...,n}; DomainError otherwise.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int kappa);
  // The simple transposition s_i = (i, i+1), 1 <= i <= kappa-1.
  static Permutation transposition(int kappa, int i);

  int kappa() const { return static_cast<int>(images_.size()); }
  // Image of i, 1-based.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  bool fixes(int i) const { return (*this)(i) == i; }

  bool operator==(const Permutation& other) const = default;
  // Lexicographic on one-line notation; the canonical term order.
  auto operator<=>(const Permutation& other) const = default;

  // One-line notation, space separated: "3 1 2".
  std::string to_string() const;

 private:
  std::vector<int> images_;
};

// A word in the simple transpositions: each letter i stands for s_i.
// A word carrying the reduced flag has exactly length(product) letters.
struct Word {
  int kappa = 0;
  std::vector<int> letters;
  bool reduced = false;
};

// u o v: apply v first, so that T_i T_w pairs with compose(s_i, w).
Permutation compose(const Permutation& u, const Permutation& v);

Permutation inverse(const Permutation& w);

// Inversion count #{(i,j) : i<j, w(i)>w(j)} = minimal word length.
int length(const Permutation& w);

// A reduced word for w, produced by repeatedly stripping the largest
// left descent.  Deterministic; the leftmost letter is applied last.
Word reduced_word(const Permutation& w);

// Product of the listed simple transpositions, leftmost letter applied
// last.  Letters outside 1..kappa-1 are a DomainError.
Permutation from_word(int kappa, const std::vector<int>& letters);
Permutation from_word(const Word& word);

// w restricted to S_new_kappa; w must fix new_kappa+1..kappa.
Permutation restrict_to(const Permutation& w, int new_kappa);

// w extended to S_new_kappa by fixed points.
Permutation embed(const Permutation& w, int new_kappa);

// All of S_kappa in lexicographic one-line order.
std::vector<Permutation> all_permutations(int kappa);

}  // namespace hecke

#endif  // HECKE_PERMUTATION_HPP_
