#include "hecke/table.hpp"

#include <algorithm>
#include <iterator>
#include <string>
#include <thread>
#include <tuple>
#include <utility>

#include "hecke/algebraic.hpp"
#include "hecke/errors.hpp"
#include "hecke/geometric.hpp"

namespace hecke {

const char* backend_name(Backend backend) {
  return backend == Backend::Algebraic ? "algebraic" : "geometric";
}

HeckeElement StructureConstants::cell(const Permutation& u, const Permutation& v) const {
  HeckeElement out(kappa);
  auto lo = std::lower_bound(entries.begin(), entries.end(), std::make_pair(u, v),
                             [](const TableEntry& e, const std::pair<Permutation, Permutation>& key) {
                               return std::tie(e.u, e.v) < std::tie(key.first, key.second);
                             });
  for (auto it = lo; it != entries.end() && it->u == u && it->v == v; ++it)
    out.add_term(it->w, it->c);
  return out;
}

StructureConstants structure_constants(int kappa, Backend backend, int kappa_guard,
                                       unsigned threads) {
  if (kappa < 1) throw DomainError("kappa must be positive");
  if (kappa > kappa_guard)
    throw ResourceLimitError("structure-constant table at kappa=" + std::to_string(kappa) +
                             " exceeds the guard of kappa<=" + std::to_string(kappa_guard));

  const std::vector<Permutation> all = all_permutations(kappa);
  const std::vector<Permutation> lefts =
      backend == Backend::Algebraic ? all : supported_left_factors(kappa);

  // One slot per left factor keeps the merge order independent of
  // scheduling.
  std::vector<std::vector<TableEntry>> slots(lefts.size());
  auto compute_row = [&](std::size_t ui) {
    const Permutation& u = lefts[ui];
    const HeckeElement tu = HeckeElement::basis(u);
    for (const Permutation& v : all) {
      HeckeElement prod = backend == Backend::Algebraic
                              ? mul(tu, HeckeElement::basis(v))
                              : geometric_product(u, v).result;
      for (const auto& [w, c] : prod.terms())
        slots[ui].push_back(TableEntry{u, v, w, c});
    }
  };

  unsigned pool = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  pool = std::min<unsigned>(pool, static_cast<unsigned>(lefts.size()));
  if (pool <= 1) {
    for (std::size_t ui = 0; ui < lefts.size(); ++ui) compute_row(ui);
  } else {
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < pool; ++t) {
      workers.emplace_back([&, t] {
        for (std::size_t ui = t; ui < lefts.size(); ui += pool) compute_row(ui);
      });
    }
    for (auto& worker : workers) worker.join();
  }

  StructureConstants table{kappa, backend, {}};
  std::size_t total = 0;
  for (const auto& slot : slots) total += slot.size();
  table.entries.reserve(total);
  for (auto& slot : slots)
    table.entries.insert(table.entries.end(), std::make_move_iterator(slot.begin()),
                         std::make_move_iterator(slot.end()));
  return table;
}

}  // namespace hecke
