#pragma once

// Property-suite runner behind `ncmult verify-theorems`, plus the seeded
// symbol generators it shares with the test binaries.
//
// Config (JSON, every field optional):
//   {"groups": ["cyclic(4)", "path/to/group.json", ...],
//    "p_values": [1, 2, 4], "trials": 200, "seed": 0, "tol": 1e-9,
//    "output": "report.json", "samples": 20, "schur_dims": [2, 3, 5, 8],
//    "symbols": [{"name": "...", "group": "cyclic(2)", "symbol": [[1,0],[0,0]],
//                 "expect": "separating"},
//                {"name": "...", "matrix": {...}, "expect": "not-separating"}]}

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ncmult/classify.hpp"
#include "ncmult/groups.hpp"
#include "ncmult/io.hpp"
#include "ncmult/random.hpp"
#include "ncmult/schur.hpp"

namespace ncmult {

/// A user-supplied symbol with the verdict it is expected to receive.
/// Fourier symbols name a group; Schur symbols carry a matrix instead.
struct InjectedSymbol {
  std::string name;
  std::string group;
  std::vector<cplx> symbol;
  std::optional<ComplexMatrix> matrix;
  Status expect = Status::separating;
};

struct SuiteConfig {
  std::vector<std::string> groups;
  std::vector<double> p_values{1.0, 2.0, 4.0};
  int trials = 200;
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  std::string output;
  int samples = 20;  // random symbols per (group, property)
  std::vector<std::size_t> schur_dims{2, 3, 5, 8};
  std::vector<InjectedSymbol> symbols;
  std::filesystem::path base_dir;  // where relative group paths resolve; not serialised
};

/// Builtin groups of order <= 8 and the default settings above.
SuiteConfig default_suite_config();

/// Throws ParseError on malformed fields, InvalidExponent / InvalidTrials
/// when p < 1 or trials < 1. Relative group paths resolve against `base_dir`.
SuiteConfig suite_config_from_json(const json& j, const std::filesystem::path& base_dir = {});
json to_json(const SuiteConfig& c);

/// A builtin name, or a path to a group JSON file (tried first when it exists).
FiniteGroup resolve_group(const std::string& spec, const std::filesystem::path& base_dir = {});

struct SuiteCell {
  std::string property;
  std::string subject;          // group label, "M_n", or injected symbol name
  std::optional<double> p;
  bool pass = false;
  double max_residual = 0.0;
  std::size_t cases = 0;
  double wall_time_ms = 0.0;
  std::string failure;          // first failing case, empty on pass
  std::optional<std::size_t> failing_index;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<SuiteCell> cells;  // canonical order

  bool all_passed() const;
  std::size_t failures() const;
};

/// Runs every property on every group and Schur dimension, then the injected
/// symbols. Cells are deterministic apart from wall_time_ms.
SuiteReport run_suite(const SuiteConfig& config);

/// 0 when every cell passes, 1 otherwise, 2 when there are no groups.
int suite_exit_code(const SuiteReport& report);

json to_json(const SuiteReport& r);

// --- seeded generators ----------------------------------------------------

/// Complex Gaussian symbol with no scalar-character fit at `reject_tol`.
/// Deterministic in (seed, index). Throws ExhaustedRetries on the trivial
/// group, where no such symbol exists.
std::vector<cplx> random_noncharacter_symbol(const FiniteGroup& g, std::uint64_t seed, std::size_t index,
                                             double reject_tol = 1e-6);

/// Unimodular symbol with phi(e) = 1 and phi(s^-1) = conj(phi(s)) that is not
/// a character. Involutions get values in {1, -1}; when every such symbol is a
/// character (orders 1 and 2) there is none.
std::optional<std::vector<cplx>> random_hermitian_noncharacter(const FiniteGroup& g, std::uint64_t seed,
                                                               std::size_t index);

/// c alpha_i beta_j with random unimodular alpha, beta; c random unimodular
/// when `unimodular_c`, complex Gaussian otherwise.
SchurSymbol random_rank_one_symbol(std::size_t n, std::uint64_t seed, std::size_t index, bool unimodular_c);

/// Complex Gaussian symbol that rank_one_unimodular_factor rejects.
SchurSymbol random_non_factorable_symbol(std::size_t n, std::uint64_t seed, std::size_t index);

}  // namespace ncmult
