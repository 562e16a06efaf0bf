#ifndef HECKE_TABLE_HPP_
#define HECKE_TABLE_HPP_

#include <vector>

#include "hecke/hecke_element.hpp"

namespace hecke {

inline constexpr int kDefaultKappaGuard = 8;
inline constexpr int kTableFormatVersion = 1;

enum class Backend { Algebraic, Geometric };

const char* backend_name(Backend backend);

struct TableEntry {
  Permutation u;
  Permutation v;
  Permutation w;
  HbarPoly c;
};

// Full structure-constant table: mul(T_u, T_v) = sum_w c^w_{uv} T_w.
// Entries are sorted by (u, v, w) and zero entries are omitted.  The
// geometric backend tabulates supported left factors u only.
struct StructureConstants {
  int kappa = 1;
  Backend backend = Backend::Algebraic;
  std::vector<TableEntry> entries;

  // Reassembles one cell from the sorted entries.
  HeckeElement cell(const Permutation& u, const Permutation& v) const;
};

// Computes every (u, v) cell on the chosen backend.  kappa above the
// guard is a ResourceLimitError.  threads = 0 picks a hardware-sized
// pool; cells are computed independently and merged in a fixed order,
// so the result does not depend on the thread count.
StructureConstants structure_constants(int kappa, Backend backend = Backend::Algebraic,
                                       int kappa_guard = kDefaultKappaGuard,
                                       unsigned threads = 0);

}  // namespace hecke

#endif  // HECKE_TABLE_HPP_
