#ifndef HECKE_ALGEBRAIC_HPP_
#define HECKE_ALGEBRAIC_HPP_

#include <cstdint>
#include <map>

#include "hecke/hecke_element.hpp"

namespace hecke {

// Standard-basis multiplication backend.
//
// The generator rule, extended linearly over the terms of x:
//   T_i T_w = T_{s_i w}              if length(s_i w) = length(w) + 1
//   T_i T_w = T_{s_i w} + hbar T_w   if length(s_i w) = length(w) - 1
// Left multiplication by s_i changes the length by exactly one, so the
// two branches are exhaustive.
HeckeElement left_mul_gen(int i, const HeckeElement& x);

// Product a * b: each basis term T_u of a is expanded through a reduced
// word u = s_{i_1}...s_{i_l} and applied as
// left_mul_gen(i_1, ... left_mul_gen(i_l, b) ...).
HeckeElement mul(const HeckeElement& a, const HeckeElement& b);

// hbar = 0 specialization: the image of x in the group algebra of
// S_kappa, as a formal integer combination of permutations.
std::map<Permutation, std::int64_t> specialize_hbar0(const HeckeElement& x);

}  // namespace hecke

#endif  // HECKE_ALGEBRAIC_HPP_
