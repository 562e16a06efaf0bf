#include "hecke/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <string>
#include <system_error>

#include "hecke/errors.hpp"

namespace hecke {

using nlohmann::json;

namespace {

std::vector<int> int_vector(const json& j) {
  if (!j.is_array()) throw DomainError("expected a JSON array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw DomainError("expected a JSON array of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

json poly_to_json(const HbarPoly& p) { return json(p.coeffs()); }

HbarPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("polynomial must be a JSON array");
  std::vector<std::int64_t> coeffs;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw DomainError("polynomial coefficients must be integers");
    coeffs.push_back(v.get<std::int64_t>());
  }
  if (!coeffs.empty() && coeffs.back() == 0)
    throw DomainError("polynomial carries a trailing zero coefficient");
  return HbarPoly(std::move(coeffs));
}

json element_to_json(const HeckeElement& x) {
  json terms = json::array();
  for (const auto& [w, c] : x.terms())
    terms.push_back({{"perm", w.images()}, {"coeffs", poly_to_json(c)}});
  return json{{"kappa", x.kappa()}, {"terms", std::move(terms)}};
}

HeckeElement element_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kappa") || !j.contains("terms"))
    throw DomainError("element needs kappa and terms fields");
  HeckeElement x(j.at("kappa").get<int>());
  for (const auto& term : j.at("terms"))
    x.add_term(Permutation(int_vector(term.at("perm"))), poly_from_json(term.at("coeffs")));
  return x;
}

json table_to_json(const StructureConstants& table) {
  json entries = json::array();
  for (const auto& e : table.entries)
    entries.push_back({{"u", e.u.images()},
                       {"v", e.v.images()},
                       {"w", e.w.images()},
                       {"coeffs", poly_to_json(e.c)}});
  return json{{"kappa", table.kappa},
              {"format_version", kTableFormatVersion},
              {"backend", backend_name(table.backend)},
              {"left_factors", table.backend == Backend::Algebraic ? "all" : "supported"},
              {"entries", std::move(entries)}};
}

StructureConstants table_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("table must be a JSON object");
  if (!j.contains("format_version") || !j.at("format_version").is_number_integer() ||
      j.at("format_version").get<int>() != kTableFormatVersion)
    throw DomainError("unknown table format_version");
  StructureConstants table;
  table.kappa = j.at("kappa").get<int>();
  const std::string backend = j.at("backend").get<std::string>();
  if (backend == "algebraic") {
    table.backend = Backend::Algebraic;
  } else if (backend == "geometric") {
    table.backend = Backend::Geometric;
  } else {
    throw DomainError("unknown table backend tag: " + backend);
  }
  for (const auto& e : j.at("entries")) {
    HbarPoly c = poly_from_json(e.at("coeffs"));
    if (c.is_zero()) throw DomainError("table carries a zero entry");
    table.entries.push_back(TableEntry{Permutation(int_vector(e.at("u"))),
                                       Permutation(int_vector(e.at("v"))),
                                       Permutation(int_vector(e.at("w"))), std::move(c)});
  }
  return table;
}

void write_table_atomic(const StructureConstants& table, const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  const fs::path tmp = dir / (path.filename().string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::ios_base::failure("cannot open " + tmp.string() + " for writing");
    out << table_to_json(table).dump() << '\n';
    if (!out.flush()) throw std::ios_base::failure("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::ios_base::failure("rename to " + path.string() + " failed: " + ec.message());
  }
}

StructureConstants read_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw DomainError("malformed table file " + path.string() + ": " + e.what());
  }
  return table_from_json(j);
}

json trace_entry_to_json(const CountTrace& entry) {
  return json{{"w3", entry.w3.images()}, {"chi", entry.chi}, {"count", entry.count}};
}

json report_to_json(const VerificationReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures)
    failures.push_back({{"inputs", f.inputs}, {"expected", f.expected}, {"actual", f.actual}});
  return json{{"suite", report.suite},
              {"kappa", report.kappa},
              {"checked", report.checked},
              {"failures", std::move(failures)},
              {"elapsed_ms", report.elapsed_ms}};
}

}  // namespace hecke
