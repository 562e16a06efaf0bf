// Command-line front end: product evaluation, table generation with an
// on-disk cache, verification sweeps, benchmarking.
//
// Exit codes: 0 success, 1 mismatch or failed suite, 2 usage, 3
// unsupported query, 4 resource guard, 5 I/O.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hecke/algebraic.hpp"
#include "hecke/errors.hpp"
#include "hecke/geometric.hpp"
#include "hecke/json_io.hpp"
#include "hecke/parse.hpp"
#include "hecke/table.hpp"
#include "hecke/verify.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitResourceGuard = 4;
constexpr int kExitIo = 5;

using hecke::Backend;
using nlohmann::json;

std::string cache_file_name(int kappa, Backend backend) {
  return "hecke_table_k" + std::to_string(kappa) + "_" + hecke::backend_name(backend) +
         ".json";
}

// HECKE_CACHE_DIR points at precomputed tables consulted before
// computing; anything unreadable or mismatched falls back silently.
std::optional<hecke::StructureConstants> load_cached_table(int kappa, Backend backend) {
  const char* dir = std::getenv("HECKE_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  const std::filesystem::path path = std::filesystem::path(dir) / cache_file_name(kappa, backend);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec) || ec) return std::nullopt;
  try {
    hecke::StructureConstants table = hecke::read_table(path);
    if (table.kappa != kappa || table.backend != backend) return std::nullopt;
    std::cerr << "note: loaded cached table " << path.string() << "\n";
    return table;
  } catch (const std::exception& e) {
    std::cerr << "warning: ignoring cache file " << path.string() << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

struct MultArgs {
  int kappa = 0;
  std::string left;
  std::string right;
  std::string backend = "algebraic";
  std::string format = "text";
  bool trace = false;
  bool ascii = false;
};

int run_mult(const MultArgs& args) {
  const hecke::Permutation left = hecke::parse_permutation(args.kappa, args.left);
  const hecke::Permutation right = hecke::parse_permutation(args.kappa, args.right);
  const bool want_algebraic = args.backend == "algebraic" || args.backend == "both";
  const bool want_geometric = args.backend == "geometric" || args.backend == "both";

  if (want_geometric && !hecke::is_simple_involution_product(left))
    throw hecke::UnsupportedLeftFactor(
        "unsupported left factor [" + left.to_string() +
        "]: the geometric backend needs a product of disjoint adjacent transpositions "
        "(try --backend algebraic)");

  std::optional<hecke::HeckeElement> algebraic;
  std::optional<hecke::HeckeElement> geometric;
  std::vector<hecke::CountTrace> trace;

  if (want_algebraic) {
    if (auto cached = load_cached_table(args.kappa, Backend::Algebraic))
      algebraic = cached->cell(left, right);
    else
      algebraic = hecke::mul(hecke::HeckeElement::basis(left), hecke::HeckeElement::basis(right));
  }
  if (want_geometric) {
    if (!args.trace) {
      if (auto cached = load_cached_table(args.kappa, Backend::Geometric))
        geometric = cached->cell(left, right);
    }
    if (!geometric) {
      hecke::GeomProduct product = hecke::geometric_product(left, right);
      geometric = std::move(product.result);
      trace = std::move(product.trace);
    }
  }

  const bool both = want_algebraic && want_geometric;
  const bool match = !both || *algebraic == *geometric;

  if (args.format == "json") {
    json out;
    out["kappa"] = args.kappa;
    if (algebraic) out["algebraic"] = hecke::element_to_json(*algebraic);
    if (geometric) out["geometric"] = hecke::element_to_json(*geometric);
    if (both) out["match"] = match;
    if (args.trace && want_geometric) {
      json lines = json::array();
      for (const auto& entry : trace) lines.push_back(hecke::trace_entry_to_json(entry));
      out["trace"] = std::move(lines);
    }
    std::cout << out.dump() << "\n";
  } else {
    if (both) {
      std::cout << "algebraic: " << algebraic->to_string(args.ascii) << "\n";
      std::cout << "geometric: " << geometric->to_string(args.ascii) << "\n";
      std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
    } else if (algebraic) {
      std::cout << algebraic->to_string(args.ascii) << "\n";
    } else {
      std::cout << geometric->to_string(args.ascii) << "\n";
    }
    if (args.trace && want_geometric)
      for (const auto& entry : trace)
        std::cout << hecke::trace_entry_to_json(entry).dump() << "\n";
  }
  return match ? kExitSuccess : kExitMismatch;
}

struct TableArgs {
  int kappa = 0;
  std::string out_path;
  std::string backend = "algebraic";
  int max_kappa = hecke::kDefaultKappaGuard;
};

int run_table(const TableArgs& args) {
  const Backend backend = args.backend == "geometric" ? Backend::Geometric : Backend::Algebraic;
  hecke::StructureConstants table;
  if (auto cached = load_cached_table(args.kappa, backend); cached && args.kappa <= args.max_kappa) {
    table = std::move(*cached);
  } else {
    table = hecke::structure_constants(args.kappa, backend, args.max_kappa);
  }
  hecke::write_table_atomic(table, args.out_path);
  std::cerr << "wrote " << table.entries.size() << " entries to " << args.out_path << "\n";
  return kExitSuccess;
}

struct VerifyArgs {
  int kappa = 0;
  std::string suite = "all";
  std::uint64_t seed = 0;
  std::string format = "text";
  bool ascii = false;
};

int run_verify(const VerifyArgs& args) {
  std::vector<hecke::VerificationReport> reports;
  const bool all = args.suite == "all";
  auto needs_kappa = [&](int lo, int hi, const char* name) {
    if (args.kappa < lo || args.kappa > hi)
      throw hecke::DomainError(std::string(name) + " suite needs --kappa between " +
                               std::to_string(lo) + " and " + std::to_string(hi));
  };

  if (all || args.suite == "prop31") reports.push_back(hecke::verify_kappa2_table());
  if (all || args.suite == "cosets") {
    needs_kappa(2, 7, "cosets");
    reports.push_back(hecke::verify_coset_cover(args.kappa));
  }
  if (all || args.suite == "relations") {
    needs_kappa(2, 7, "relations");
    reports.push_back(hecke::verify_relations(args.kappa));
  }
  if (all || args.suite == "isomorphism") {
    needs_kappa(1, 6, "isomorphism");
    reports.push_back(hecke::verify_isomorphism(args.kappa, args.seed));
  }

  bool all_passed = true;
  for (const auto& report : reports) {
    all_passed = all_passed && report.passed();
    if (args.format == "json")
      std::cout << hecke::report_to_json(report).dump() << "\n";
    else
      std::cout << report.to_string() << "\n";
  }
  return all_passed ? kExitSuccess : kExitMismatch;
}

struct BenchArgs {
  int kappa = 0;
  std::string backend = "algebraic";
  int repeat = 1;
  std::string format = "text";
  int max_kappa = hecke::kDefaultKappaGuard;
};

int run_bench(const BenchArgs& args) {
  const Backend backend = args.backend == "geometric" ? Backend::Geometric : Backend::Algebraic;
  std::vector<double> runs_ms;
  std::size_t cells = 0;
  for (int r = 0; r < args.repeat; ++r) {
    const auto start = std::chrono::steady_clock::now();
    hecke::StructureConstants table = hecke::structure_constants(args.kappa, backend, args.max_kappa);
    const auto stop = std::chrono::steady_clock::now();
    runs_ms.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    std::size_t pairs = 1;
    for (int i = 2; i <= args.kappa; ++i) pairs *= static_cast<std::size_t>(i);
    cells = pairs * (backend == Backend::Algebraic
                         ? pairs
                         : hecke::supported_left_factors(args.kappa).size());
  }
  double total_ms = 0;
  for (double ms : runs_ms) total_ms += ms;
  const double mean_ms = total_ms / static_cast<double>(runs_ms.size());
  const double pairs_per_second = mean_ms > 0 ? 1000.0 * static_cast<double>(cells) / mean_ms
                                              : 0.0;

  if (args.format == "json") {
    json out{{"kappa", args.kappa},
             {"backend", hecke::backend_name(backend)},
             {"repeat", args.repeat},
             {"cells", cells},
             {"runs_ms", runs_ms},
             {"mean_ms", mean_ms},
             {"pairs_per_second", pairs_per_second}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "kappa=" << args.kappa << " backend=" << hecke::backend_name(backend)
              << " cells=" << cells << " repeat=" << args.repeat << "\n";
    for (std::size_t i = 0; i < runs_ms.size(); ++i)
      std::cout << "  run " << (i + 1) << ": " << runs_ms[i] << " ms\n";
    std::cout << "mean " << mean_ms << " ms, " << pairs_per_second << " pairs/second\n";
  }
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hecke algebra engine over Z[hbar] with algebraic and geometric backends"};
  app.require_subcommand(1);

  MultArgs mult_args;
  CLI::App* mult = app.add_subcommand("mult", "multiply two standard basis elements");
  mult->add_option("--kappa", mult_args.kappa, "number of strands")->required()
      ->check(CLI::PositiveNumber);
  mult->add_option("--left", mult_args.left, "left factor (one-line, word, or JSON array)")
      ->required();
  mult->add_option("--right", mult_args.right, "right factor")->required();
  mult->add_option("--backend", mult_args.backend, "algebraic|geometric|both")
      ->check(CLI::IsMember({"algebraic", "geometric", "both"}));
  mult->add_option("--format", mult_args.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  mult->add_flag("--trace", mult_args.trace, "print nonzero curve counts as JSON lines");
  mult->add_flag("--ascii", mult_args.ascii, "render hbar as plain h");

  TableArgs table_args;
  CLI::App* table = app.add_subcommand("table", "write the full structure-constant table");
  table->add_option("--kappa", table_args.kappa, "number of strands")->required()
      ->check(CLI::PositiveNumber);
  table->add_option("--out", table_args.out_path, "output path")->required();
  table->add_option("--backend", table_args.backend, "algebraic|geometric")
      ->check(CLI::IsMember({"algebraic", "geometric"}));
  table->add_option("--max-kappa", table_args.max_kappa, "resource guard ceiling");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "run verification sweeps");
  verify->add_option("--kappa", verify_args.kappa, "number of strands");
  verify->add_option("--suite", verify_args.suite, "all|relations|isomorphism|cosets|prop31")
      ->check(CLI::IsMember({"all", "relations", "isomorphism", "cosets", "prop31"}));
  verify->add_option("--seed", verify_args.seed, "seed for randomized checks");
  verify->add_option("--format", verify_args.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--ascii", verify_args.ascii, "render hbar as plain h");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "time full-table generation");
  bench->add_option("--kappa", bench_args.kappa, "number of strands")->required()
      ->check(CLI::PositiveNumber);
  bench->add_option("--backend", bench_args.backend, "algebraic|geometric")
      ->check(CLI::IsMember({"algebraic", "geometric"}));
  bench->add_option("--repeat", bench_args.repeat, "number of timed runs")
      ->check(CLI::PositiveNumber);
  bench->add_option("--format", bench_args.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  bench->add_option("--max-kappa", bench_args.max_kappa, "resource guard ceiling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help() << "\n";
    return kExitUsage;
  }

  try {
    if (mult->parsed()) return run_mult(mult_args);
    if (table->parsed()) return run_table(table_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (bench->parsed()) return run_bench(bench_args);
    std::cerr << app.help() << "\n";
    return kExitUsage;
  } catch (const hecke::UnsupportedLeftFactor& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const hecke::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceGuard;
  } catch (const hecke::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
}
