#include "ncmult/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <sstream>
#include <thread>
#include <tuple>

#include "ncmult/errors.hpp"
#include "ncmult/linear_map.hpp"
#include "ncmult/vna.hpp"

namespace ncmult {

namespace {

// Stream offsets keep the generators independent of each other.
constexpr std::uint64_t kNonCharacterStream = 0x10000;
constexpr std::uint64_t kHermitianStream = 0x20000;
constexpr std::uint64_t kRankOneStream = 0x30000;
constexpr std::uint64_t kNonFactorableStream = 0x40000;
constexpr int kMaxRejections = 256;

const cplx kI(0.0, 1.0);
const std::vector<cplx> kForwardScalars{0.0, 1.0, 2.0, kI, cplx(1.0, 1.0)};

std::uint64_t stream(std::uint64_t base, std::size_t index, int attempt) {
  return base + static_cast<std::uint64_t>(index) * kMaxRejections + static_cast<std::uint64_t>(attempt);
}

Status parse_status(const std::string& s) {
  if (s == "separating") return Status::separating;
  if (s == "not-separating") return Status::not_separating;
  if (s == "inconclusive") return Status::inconclusive;
  throw ParseError("unknown expected status \"" + s + "\"");
}

std::string describe_p(double p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

// Accumulates one cell: every case either passes or records the first failure.
class CellBuilder {
 public:
  CellBuilder(std::string property, std::string subject, std::optional<double> p) {
    cell_.property = std::move(property);
    cell_.subject = std::move(subject);
    cell_.p = p;
    cell_.pass = true;
  }

  void observe(double residual) { cell_.max_residual = std::max(cell_.max_residual, residual); }

  void check(bool ok, std::size_t index, const std::string& what) {
    ++cell_.cases;
    if (ok) return;
    if (cell_.pass) {
      cell_.failing_index = index;
      cell_.failure = what;
    }
    cell_.pass = false;
  }

  SuiteCell finish() && { return std::move(cell_); }

 private:
  SuiteCell cell_;
};

using Task = std::function<SuiteCell()>;

SuiteCell timed(const Task& task, const std::string& property, const std::string& subject,
                std::optional<double> p) {
  const auto start = std::chrono::steady_clock::now();
  SuiteCell cell;
  try {
    cell = task();
  } catch (const std::exception& e) {
    cell = SuiteCell{};
    cell.property = property;
    cell.subject = subject;
    cell.p = p;
    cell.pass = false;
    cell.failure = std::string("exception: ") + e.what();
  }
  const auto stop = std::chrono::steady_clock::now();
  cell.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return cell;
}

struct PendingCell {
  std::string property;
  std::string subject;
  std::optional<double> p;
  Task task;
};

std::vector<SuiteCell> run_parallel(std::vector<PendingCell>& pending) {
  std::vector<SuiteCell> out(pending.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < pending.size();)
      out[k] = timed(pending[k].task, pending[k].property, pending[k].subject, pending[k].p);
  };
  const std::size_t n_workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(1, pending.size()));
  std::vector<std::jthread> pool;
  for (std::size_t w = 1; w < n_workers; ++w) pool.emplace_back(worker);
  worker();
  pool.clear();
  return out;
}

SamplingOptions options_at(const SuiteConfig& c, double p) { return SamplingOptions{p, c.trials, c.seed, c.tol}; }

double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

std::vector<cplx> scaled(const Character& chi, cplx c) {
  std::vector<cplx> out(chi.values.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = c * chi.values[k];
  return out;
}

double map_distance(const LinearMap& a, const LinearMap& b) {
  return distance(a.action(), b.action()) / std::max(1.0, a.action().frobenius_norm());
}

// --- per-group properties ---------------------------------------------------

// Every symbol on the trivial group is a scalar multiple of its character.
int samples_for(const FiniteGroup& g, const SuiteConfig& c) { return g.order() > 1 ? c.samples : 0; }

SuiteCell characters_cell(const GroupPtr& g) {
  CellBuilder cell("characters", g->label(), std::nullopt);
  const auto chars = enumerate_characters(*g);
  const std::size_t expected = g->order() / commutator_subgroup(*g).size();
  cell.check(chars.size() == expected, 0,
             "found " + std::to_string(chars.size()) + " characters, expected " + std::to_string(expected));
  for (std::size_t k = 0; k < chars.size(); ++k) {
    const double r = character_residual(*g, chars[k]);
    cell.observe(r);
    cell.check(r < 1e-12, k, "character " + std::to_string(k) + " residual " + std::to_string(r));
  }
  return std::move(cell).finish();
}

SuiteCell fourier_forward_cell(const GroupPtr& g, const SuiteConfig& c, double p) {
  CellBuilder cell("fourier-forward", g->label(), p);
  const auto chars = enumerate_characters(*g);
  std::size_t index = 0;
  for (std::size_t k = 0; k < chars.size(); ++k)
    for (const cplx scalar : kForwardScalars) {
      const Verdict v = classify_fourier(g, scaled(chars[k], scalar), options_at(c, p));
      if (v.max_deviation) cell.observe(*v.max_deviation);
      cell.check(v.status == Status::separating && v.certificate.has_value(), index,
                 "character " + std::to_string(k) + " times (" + describe_p(scalar.real()) + "," +
                     describe_p(scalar.imag()) + ") classified " + to_string(v.status) +
                     (v.note.empty() ? "" : ": " + v.note));
      ++index;
    }
  return std::move(cell).finish();
}

SuiteCell fourier_converse_cell(const GroupPtr& g, const SuiteConfig& c, double p) {
  CellBuilder cell("fourier-converse", g->label(), p);
  for (int k = 0; k < samples_for(*g, c); ++k) {
    const auto idx = static_cast<std::size_t>(k);
    const auto phi = random_noncharacter_symbol(*g, c.seed, idx);
    const Verdict v = classify_fourier(g, phi, options_at(c, p));
    const bool ok = v.status == Status::not_separating && v.witness && v.witness->image_violation > 1e-6;
    cell.check(ok, idx, "random symbol " + std::to_string(k) + " classified " + to_string(v.status));
  }
  return std::move(cell).finish();
}

SuiteCell positive_definite_cell(const GroupPtr& g, const SuiteConfig& c) {
  CellBuilder cell("positive-definite", g->label(), std::nullopt);
  const auto chars = enumerate_characters(*g);
  for (std::size_t k = 0; k < chars.size(); ++k) {
    const auto r = positive_definite_test(*g, chars[k].values, c.tol);
    cell.observe(std::max(0.0, -r.min_eigenvalue));
    cell.check(r.positive && r.min_eigenvalue >= -1e-10, k,
               "character " + std::to_string(k) + " min eigenvalue " + std::to_string(r.min_eigenvalue));
  }
  for (int k = 0; k < c.samples; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    const auto phi = random_hermitian_noncharacter(*g, c.seed, idx);
    if (!phi) break;
    const auto r = positive_definite_test(*g, *phi, c.tol);
    cell.check(!r.positive && r.min_eigenvalue < -1e-9, chars.size() + idx,
               "non-character " + std::to_string(k) + " min eigenvalue " + std::to_string(r.min_eigenvalue) +
                   (r.positive ? " (reported positive)" : " (within review band)"));
  }
  return std::move(cell).finish();
}

SuiteCell herz_schur_cell(const GroupPtr& g) {
  CellBuilder cell("herz-schur-recovery", g->label(), std::nullopt);
  const auto chars = enumerate_characters(*g);
  std::size_t index = 0;
  for (std::size_t k = 0; k < chars.size(); ++k)
    for (const cplx scalar : {cplx(1.0), 2.0 * kI}) {
      const SchurSymbol m = herz_schur_symbol(*g, scaled(chars[k], scalar));
      const auto cert = rank_one_unimodular_factor(m);
      const auto fit = cert ? recover_character(*g, *cert) : std::nullopt;
      double err = std::numeric_limits<double>::infinity();
      if (fit) err = std::max({distance(reconstruct(*cert), m.m), std::abs(fit->c - scalar),
                               max_abs_diff(fit->psi.values, chars[k].values)});
      if (std::isfinite(err)) cell.observe(err);
      cell.check(err < 1e-9, index, "character " + std::to_string(k) + " not recovered");
      ++index;
    }
  return std::move(cell).finish();
}

// Extraction must succeed, reconstruct T, and be stable under re-extraction.
void check_yeadon_ok(CellBuilder& cell, const LinearMap& t, std::size_t index, const std::string& what) {
  try {
    const auto y = yeadon_extract(t, 1e-8);
    const LinearMap rebuilt = compose_from_triple(y);
    const double recon = map_distance(t, rebuilt);
    const auto again = yeadon_extract(rebuilt, 1e-8);
    const double stability = std::max(distance(again.w * again.b, y.w * y.b), map_distance(again.j, y.j));
    cell.observe(std::max({y.residuals.max(), recon, stability}));
    cell.check(recon < 1e-8 && stability < 1e-8, index, what + " reconstruction " + std::to_string(recon));
  } catch (const NotSeparating& e) {
    cell.check(false, index, what + ": " + e.what());
  }
}

void check_yeadon_rejects(CellBuilder& cell, const LinearMap& t, std::size_t index, const std::string& what) {
  bool rejected = false;
  try {
    (void)yeadon_extract(t, 1e-8);
  } catch (const NotSeparating&) {
    rejected = true;
  }
  cell.check(rejected, index, what + " was accepted");
}

SuiteCell yeadon_group_cell(const GroupPtr& g, const SuiteConfig& c) {
  CellBuilder cell("yeadon", g->label(), std::nullopt);
  const auto chars = enumerate_characters(*g);
  std::size_t index = 0;
  for (std::size_t k = 0; k < chars.size(); ++k)
    for (const cplx scalar : {cplx(1.0), cplx(2.0, -1.0)})
      check_yeadon_ok(cell, LinearMap::fourier({g, scaled(chars[k], scalar)}), index++,
                      "character " + std::to_string(k));
  for (int k = 0; k < samples_for(*g, c); ++k)
    check_yeadon_rejects(cell, LinearMap::fourier({g, random_noncharacter_symbol(*g, c.seed, std::size_t(k))}),
                         index++, "random symbol " + std::to_string(k));
  return std::move(cell).finish();
}

SuiteCell cross_p_cell(const GroupPtr& g, const SuiteConfig& c) {
  CellBuilder cell("cross-p", g->label(), std::nullopt);
  const auto chars = enumerate_characters(*g);
  std::vector<std::vector<cplx>> symbols;
  for (const auto& chi : chars) symbols.push_back(chi.values);
  for (int k = 0; k < samples_for(*g, c); ++k) symbols.push_back(random_noncharacter_symbol(*g, c.seed, std::size_t(k)));
  for (std::size_t k = 0; k < symbols.size(); ++k) {
    const LinearMap t = LinearMap::fourier({g, symbols[k]});
    std::optional<Status> first;
    bool same = true;
    for (double p : c.p_values) {
      const Status s = separating_test(t, options_at(c, p)).status;
      if (!first) first = s;
      same = same && s == *first;
    }
    cell.check(same, k, "symbol " + std::to_string(k) + " changes verdict with p");
  }
  return std::move(cell).finish();
}

// --- matrix-algebra properties ------------------------------------------------

std::string matrix_subject(std::size_t n) { return "M_" + std::to_string(n); }

SuiteCell schur_forward_cell(std::size_t n, const SuiteConfig& c, double p) {
  CellBuilder cell("schur-forward", matrix_subject(n), p);
  for (int k = 0; k < c.samples; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    const SchurSymbol m = random_rank_one_symbol(n, c.seed, idx, k % 2 == 0);
    const auto cert = rank_one_unimodular_factor(m, c.tol);
    const double err = cert ? distance(reconstruct(*cert), m.m) : std::numeric_limits<double>::infinity();
    if (cert) cell.observe(err);
    cell.check(err < 1e-10, idx, "symbol " + std::to_string(k) + " did not round-trip");
    const Verdict v = classify_schur(m, options_at(c, p));
    if (v.max_deviation) cell.observe(*v.max_deviation);
    cell.check(v.status == Status::separating, idx,
               "symbol " + std::to_string(k) + " classified " + to_string(v.status) +
                   (v.note.empty() ? "" : ": " + v.note));
  }
  return std::move(cell).finish();
}

SuiteCell schur_converse_cell(std::size_t n, const SuiteConfig& c, double p) {
  CellBuilder cell("schur-converse", matrix_subject(n), p);
  for (int k = 0; k < c.samples; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    const Verdict v = classify_schur(random_non_factorable_symbol(n, c.seed, idx), options_at(c, p));
    const bool ok = v.status == Status::not_separating && v.witness && v.witness->image_violation > 1e-6;
    cell.check(ok, idx, "symbol " + std::to_string(k) + " classified " + to_string(v.status));
  }
  return std::move(cell).finish();
}

SuiteCell yeadon_matrix_cell(std::size_t n, const SuiteConfig& c) {
  CellBuilder cell("yeadon", matrix_subject(n), std::nullopt);
  std::size_t index = 0;
  check_yeadon_ok(cell, LinearMap::transpose(n), index++, "transpose");
  for (int k = 0; k < c.samples; ++k)
    check_yeadon_ok(cell, LinearMap::schur(random_rank_one_symbol(n, c.seed, std::size_t(k), k % 2 == 0)),
                    index++, "rank-one symbol " + std::to_string(k));
  for (int k = 0; k < c.samples; ++k)
    check_yeadon_rejects(cell, LinearMap::schur(random_non_factorable_symbol(n, c.seed, std::size_t(k))),
                         index++, "non-factorable symbol " + std::to_string(k));
  return std::move(cell).finish();
}

SuiteCell injected_cell(const InjectedSymbol& s, const SuiteConfig& c, const std::filesystem::path& base_dir) {
  CellBuilder cell("injected", s.name, std::nullopt);
  std::optional<GroupPtr> g;
  if (!s.matrix) g = std::make_shared<const FiniteGroup>(resolve_group(s.group, base_dir));
  for (std::size_t k = 0; k < c.p_values.size(); ++k) {
    const SamplingOptions opts = options_at(c, c.p_values[k]);
    const Verdict v = s.matrix ? classify_schur(SchurSymbol{*s.matrix}, opts) : classify_fourier(*g, s.symbol, opts);
    cell.check(v.status == s.expect, k,
               s.name + " at p=" + describe_p(c.p_values[k]) + " classified " + to_string(v.status) +
                   ", expected " + to_string(s.expect));
  }
  return std::move(cell).finish();
}

bool cell_less(const SuiteCell& a, const SuiteCell& b) {
  return std::tuple(a.property, a.subject, a.p.value_or(0.0)) < std::tuple(b.property, b.subject, b.p.value_or(0.0));
}

}  // namespace

SuiteConfig default_suite_config() {
  SuiteConfig c;
  for (int n = 1; n <= 8; ++n) c.groups.push_back("cyclic(" + std::to_string(n) + ")");
  c.groups.insert(c.groups.end(), {"cyclic(2)^2", "symmetric(3)", "dihedral(4)", "quaternion8"});
  return c;
}

FiniteGroup resolve_group(const std::string& spec, const std::filesystem::path& base_dir) {
  for (const auto& candidate : {std::filesystem::path(spec), base_dir / spec}) {
    std::error_code ec;
    if (!candidate.empty() && std::filesystem::is_regular_file(candidate, ec)) {
      FiniteGroup g = group_from_json(read_json_file(candidate));
      if (!g.label().empty()) return g;
      return FiniteGroup(g.table(), g.names(), candidate.filename().string());
    }
  }
  return builtin_group(spec);
}

SuiteConfig suite_config_from_json(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ParseError("suite config must be a JSON object");
  SuiteConfig c;
  c.groups.clear();
  try {
    if (j.contains("groups")) c.groups = j.at("groups").get<std::vector<std::string>>();
    if (j.contains("p_values")) c.p_values = j.at("p_values").get<std::vector<double>>();
    if (j.contains("trials")) c.trials = j.at("trials").get<int>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("tol")) c.tol = j.at("tol").get<double>();
    if (j.contains("output")) c.output = j.at("output").get<std::string>();
    if (j.contains("samples")) c.samples = j.at("samples").get<int>();
    if (j.contains("schur_dims")) c.schur_dims = j.at("schur_dims").get<std::vector<std::size_t>>();
    if (j.contains("symbols")) {
      for (const auto& s : j.at("symbols")) {
        InjectedSymbol sym;
        sym.name = s.value("name", "symbol-" + std::to_string(c.symbols.size()));
        sym.expect = parse_status(s.value("expect", std::string("separating")));
        if (s.contains("matrix")) {
          sym.matrix = matrix_from_json(s.at("matrix"));
        } else {
          if (!s.contains("group") || !s.contains("symbol"))
            throw ParseError("injected symbol \"" + sym.name + "\" needs \"group\" and \"symbol\" or \"matrix\"");
          sym.group = s.at("group").get<std::string>();
          sym.symbol = symbol_from_json(s.at("symbol"));
        }
        c.symbols.push_back(std::move(sym));
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("suite config: ") + e.what());
  }
  if (c.trials < 1) throw InvalidTrials("suite config: trials must be >= 1");
  if (c.samples < 0) throw ParseError("suite config: samples must be >= 0");
  if (!(c.tol > 0.0)) throw ParseError("suite config: tol must be positive");
  for (double p : c.p_values)
    if (!(p >= 1.0)) throw InvalidExponent("suite config: every p must be >= 1");
  c.base_dir = base_dir;
  return c;
}

json to_json(const SuiteConfig& c) {
  json symbols = json::array();
  for (const auto& s : c.symbols) {
    json entry{{"name", s.name}, {"expect", to_string(s.expect)}};
    if (s.matrix) {
      entry["matrix"] = to_json(*s.matrix);
    } else {
      entry["group"] = s.group;
      entry["symbol"] = symbol_to_json(s.symbol);
    }
    symbols.push_back(std::move(entry));
  }
  return json{{"groups", c.groups},   {"p_values", c.p_values},     {"trials", c.trials},
              {"seed", c.seed},       {"tol", c.tol},               {"output", c.output},
              {"samples", c.samples}, {"schur_dims", c.schur_dims}, {"symbols", std::move(symbols)}};
}

bool SuiteReport::all_passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const auto& c) { return !c.pass; }));
}

SuiteReport run_suite(const SuiteConfig& config) {
  SuiteReport report{config, {}};
  if (config.groups.empty()) return report;
  const std::filesystem::path& base_dir = config.base_dir;

  std::vector<PendingCell> pending;
  auto add = [&](std::string property, std::string subject, std::optional<double> p, Task task) {
    pending.push_back({std::move(property), std::move(subject), p, std::move(task)});
  };

  for (const auto& spec : config.groups) {
    GroupPtr g;
    try {
      g = std::make_shared<const FiniteGroup>(resolve_group(spec, base_dir));
    } catch (const Error& e) {
      const std::string message = e.what();
      add("group", spec, std::nullopt, [message]() -> SuiteCell { throw InvalidGroup(message); });
      continue;
    }
    const std::string label = g->label();
    add("characters", label, std::nullopt, [g] { return characters_cell(g); });
    add("positive-definite", label, std::nullopt, [g, &config] { return positive_definite_cell(g, config); });
    add("herz-schur-recovery", label, std::nullopt, [g] { return herz_schur_cell(g); });
    add("yeadon", label, std::nullopt, [g, &config] { return yeadon_group_cell(g, config); });
    add("cross-p", label, std::nullopt, [g, &config] { return cross_p_cell(g, config); });
    for (double p : config.p_values) {
      add("fourier-forward", label, p, [g, &config, p] { return fourier_forward_cell(g, config, p); });
      add("fourier-converse", label, p, [g, &config, p] { return fourier_converse_cell(g, config, p); });
    }
  }
  for (std::size_t n : config.schur_dims) {
    const std::string subject = matrix_subject(n);
    add("yeadon", subject, std::nullopt, [n, &config] { return yeadon_matrix_cell(n, config); });
    for (double p : config.p_values) {
      add("schur-forward", subject, p, [n, &config, p] { return schur_forward_cell(n, config, p); });
      add("schur-converse", subject, p, [n, &config, p] { return schur_converse_cell(n, config, p); });
    }
  }
  for (const auto& s : config.symbols)
    add("injected", s.name, std::nullopt, [&s, &config, base_dir] { return injected_cell(s, config, base_dir); });

  report.cells = run_parallel(pending);
  std::sort(report.cells.begin(), report.cells.end(), cell_less);
  return report;
}

int suite_exit_code(const SuiteReport& report) {
  if (report.config.groups.empty()) return 2;
  return report.all_passed() ? 0 : 1;
}

json to_json(const SuiteReport& r) {
  json cells = json::array();
  double total_ms = 0.0;
  for (const auto& c : r.cells) {
    json cell{{"property", c.property},
              {"subject", c.subject},
              {"p", c.p ? json(*c.p) : json(nullptr)},
              {"pass", c.pass},
              {"cases", c.cases},
              {"max_residual", c.max_residual},
              {"wall_time_ms", c.wall_time_ms}};
    if (!c.pass) {
      cell["failure"] = c.failure;
      cell["reproduce"] = {{"seed", r.config.seed},
                           {"index", c.failing_index ? json(*c.failing_index) : json(nullptr)}};
    }
    total_ms += c.wall_time_ms;
    cells.push_back(std::move(cell));
  }
  const std::size_t failed = r.failures();
  return json{{"tool", "ncmult"},
              {"version", NCMULT_VERSION},
              {"config", to_json(r.config)},
              {"summary", {{"cells", r.cells.size()}, {"failed", failed}, {"passed", r.cells.size() - failed}}},
              {"exit_code", suite_exit_code(r)},
              {"cells", std::move(cells)},
              {"total_cell_time_ms", total_ms}};
}

// --- generators ---------------------------------------------------------------

std::vector<cplx> random_noncharacter_symbol(const FiniteGroup& g, std::uint64_t seed, std::size_t index,
                                             double reject_tol) {
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    Rng rng = make_rng(seed, stream(kNonCharacterStream, index, attempt));
    auto phi = random_complex_vector(rng, g.order());
    if (!fit_scalar_character(g, phi, reject_tol)) return phi;
  }
  throw ExhaustedRetries("every random symbol fitted a scalar character");
}

std::optional<std::vector<cplx>> random_hermitian_noncharacter(const FiniteGroup& g, std::uint64_t seed,
                                                               std::size_t index) {
  const std::size_t n = g.order();
  std::vector<std::size_t> involutions;
  for (std::size_t s = 0; s < n; ++s)
    if (s != g.identity() && g.inv(s) == s) involutions.push_back(s);
  const bool only_involutions = involutions.size() + 1 == n;

  if (only_involutions) {
    // Finitely many candidates: enumerate the sign patterns that are not characters.
    if (involutions.size() >= 63) throw GroupTooLarge("too many involutions to enumerate sign patterns");
    std::vector<std::vector<cplx>> candidates;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << involutions.size()); ++mask) {
      std::vector<cplx> phi(n, 1.0);
      for (std::size_t k = 0; k < involutions.size(); ++k)
        if (mask >> k & 1U) phi[involutions[k]] = -1.0;
      if (!fit_scalar_character(g, phi, 1e-9)) candidates.push_back(std::move(phi));
    }
    if (candidates.empty()) return std::nullopt;
    return candidates[index % candidates.size()];
  }

  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    Rng rng = make_rng(seed, stream(kHermitianStream, index, attempt));
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::acos(-1.0));
    std::bernoulli_distribution sign(0.5);
    std::vector<cplx> phi(n, 0.0);
    phi[g.identity()] = 1.0;
    for (std::size_t s = 0; s < n; ++s) {
      if (s == g.identity() || phi[s] != cplx(0.0)) continue;
      if (g.inv(s) == s) {
        phi[s] = sign(rng) ? 1.0 : -1.0;
      } else {
        phi[s] = std::polar(1.0, angle(rng));
        phi[g.inv(s)] = std::conj(phi[s]);
      }
    }
    if (!fit_scalar_character(g, phi, 1e-6)) return phi;
  }
  throw ExhaustedRetries("every Hermitian unimodular symbol was a character");
}

SchurSymbol random_rank_one_symbol(std::size_t n, std::uint64_t seed, std::size_t index, bool unimodular_c) {
  Rng rng = make_rng(seed, stream(kRankOneStream, index, 0));
  const auto alpha = random_unimodular_vector(rng, n);
  const auto beta = random_unimodular_vector(rng, n);
  const cplx c = unimodular_c ? random_unimodular_vector(rng, 1)[0] : complex_gaussian(rng);
  return SchurSymbol{reconstruct(RankOneCertificate{c, alpha, beta})};
}

SchurSymbol random_non_factorable_symbol(std::size_t n, std::uint64_t seed, std::size_t index) {
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    Rng rng = make_rng(seed, stream(kNonFactorableStream, index, attempt));
    SchurSymbol m{random_complex_matrix(rng, n)};
    if (!rank_one_unimodular_factor(m, 1e-6)) return m;
  }
  throw ExhaustedRetries("every random symbol factored");
}

}  // namespace ncmult
