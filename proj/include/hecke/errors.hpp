#ifndef HECKE_ERRORS_HPP_
#define HECKE_ERRORS_HPP_

#include <stdexcept>

namespace hecke {

// Bad input to an operation: mismatched kappa, out-of-range generator
// index, malformed one-line notation, chi above kappa.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The curve-count recursion only handles left factors that are products
// of disjoint adjacent transpositions.
class UnsupportedLeftFactor : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A table or sweep was requested above the configured kappa ceiling.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 64-bit coefficient arithmetic overflowed.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace hecke

#endif  // HECKE_ERRORS_HPP_
