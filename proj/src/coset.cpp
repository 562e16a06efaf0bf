#include "hecke/coset.hpp"

#include <cstddef>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

struct ImagesHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

Permutation chain(int kappa, int a, int b) {
  if (b > a) return Permutation::identity(kappa);
  if (b < 1 || a > kappa - 1) throw DomainError("chain endpoints out of range");
  std::vector<int> letters;
  for (int i = a; i >= b; --i) letters.push_back(i);
  return from_word(kappa, letters);
}

TopCosetDecomp top_coset_decompose(const Permutation& w) {
  const int k = w.kappa();
  const int m = k - inverse(w)(k);
  Permutation w_prime = compose(w, inverse(chain(k, k - 1, k - m)));
  return TopCosetDecomp{std::move(w_prime), m};
}

Permutation top_coset_compose(const Permutation& w_prime, int m) {
  const int k = w_prime.kappa();
  if (m < 0 || m > k - 1) throw DomainError("top-coset m out of range 0..kappa-1");
  if (!w_prime.fixes(k)) throw DomainError("top-coset factor must fix kappa");
  return compose(w_prime, chain(k, k - 1, k - m));
}

const char* family_name(CosetFamily family) {
  return family == CosetFamily::F1 ? "F1" : "F2";
}

int double_coset_chain_length(CosetFamily family, int m, int l) {
  return family == CosetFamily::F1 ? (m - 1) + l : m + l;
}

Permutation double_coset_compose(CosetFamily family, const Permutation& w_double_prime,
                                 int m, int l) {
  const int k = w_double_prime.kappa();
  if (k < 2) throw DomainError("double-coset forms need kappa >= 2");
  if (!(0 <= l && l < m && m <= k - 1)) throw DomainError("double-coset (m, l) out of range");
  if (!w_double_prime.fixes(k) || !w_double_prime.fixes(k - 1))
    throw DomainError("double-coset factor must fix kappa-1 and kappa");
  const int first_top = family == CosetFamily::F1 ? k - 2 : k - 1;
  Permutation result = compose(w_double_prime, chain(k, first_top, k - m));
  return compose(result, chain(k, k - 1, k - l));
}

DoubleCosetDecomp double_coset_decompose(const Permutation& w) {
  const int k = w.kappa();
  if (k < 2) throw DomainError("double-coset decomposition needs kappa >= 2");

  thread_local std::unordered_map<std::vector<int>, DoubleCosetDecomp, ImagesHash> cache;
  if (auto it = cache.find(w.images()); it != cache.end()) return it->second;

  for (CosetFamily family : {CosetFamily::F1, CosetFamily::F2}) {
    for (int m = 1; m <= k - 1; ++m) {
      for (int l = 0; l < m; ++l) {
        const int first_top = family == CosetFamily::F1 ? k - 2 : k - 1;
        Permutation residual =
            compose(compose(w, inverse(chain(k, k - 1, k - l))),
                    inverse(chain(k, first_top, k - m)));
        if (residual.fixes(k) && residual.fixes(k - 1)) {
          DoubleCosetDecomp d{family, std::move(residual), m, l};
          cache.emplace(w.images(), d);
          return d;
        }
      }
    }
  }
  throw std::logic_error("no double-coset normal form matched");
}

bool is_simple_involution_product(const Permutation& w) {
  int i = w.kappa();
  while (i >= 1) {
    if (w(i) == i) {
      --i;
    } else if (i >= 2 && w(i) == i - 1 && w(i - 1) == i) {
      i -= 2;
    } else {
      return false;
    }
  }
  return true;
}

}  // namespace hecke
