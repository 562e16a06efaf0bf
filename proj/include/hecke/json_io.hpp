#ifndef HECKE_JSON_IO_HPP_
#define HECKE_JSON_IO_HPP_

#include <filesystem>

#include <json.hpp>

#include "hecke/geometric.hpp"
#include "hecke/table.hpp"
#include "hecke/verify.hpp"

namespace hecke {

// Array of integer coefficients, constant term first, canonical.
nlohmann::json poly_to_json(const HbarPoly& p);
HbarPoly poly_from_json(const nlohmann::json& j);

// {"kappa": K, "terms": [{"perm": [..], "coeffs": [..]}]}, terms sorted
// by perm lexicographically.
nlohmann::json element_to_json(const HeckeElement& x);
HeckeElement element_from_json(const nlohmann::json& j);

// Table file: header fields kappa / format_version / backend /
// left_factors plus the sorted entry list; readers reject unknown
// format versions.
nlohmann::json table_to_json(const StructureConstants& table);
StructureConstants table_from_json(const nlohmann::json& j);

// Writes to a temporary file in the target directory, then renames.
void write_table_atomic(const StructureConstants& table, const std::filesystem::path& path);
StructureConstants read_table(const std::filesystem::path& path);

nlohmann::json trace_entry_to_json(const CountTrace& entry);

nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace hecke

#endif  // HECKE_JSON_IO_HPP_
