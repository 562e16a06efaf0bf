#ifndef HECKE_PARSE_HPP_
#define HECKE_PARSE_HPP_

#include <string>

#include "hecke/permutation.hpp"

namespace hecke {

// Parses the CLI permutation notations:
//   one-line, space separated:  "3 1 2"
//   generator word, leading s:  "s2,s1"
//   JSON array:                 "[3,1,2]"
// Malformed input or a mismatch with kappa is a DomainError.
Permutation parse_permutation(int kappa, const std::string& text);

}  // namespace hecke

#endif  // HECKE_PARSE_HPP_
