#include "ncmult/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <memory>
#include <optional>
#include <ostream>

#include "ncmult/classify.hpp"
#include "ncmult/errors.hpp"
#include "ncmult/io.hpp"
#include "ncmult/linear_map.hpp"
#include "ncmult/suite.hpp"

namespace ncmult {

namespace {

struct CommonFlags {
  SamplingOptions sampling;
  bool compact = false;
  bool pretty = false;
};

struct Inputs {
  std::string group;
  std::string symbol;
  std::size_t transpose = 0;
  std::string config;
  std::string output;
};

void add_sampling_flags(CLI::App& cmd, CommonFlags& f) {
  cmd.add_option("--p", f.sampling.p, "Exponent of the L^p norms (>= 1)")->capture_default_str();
  cmd.add_option("--trials", f.sampling.trials, "Random disjoint pairs to try")->capture_default_str();
  cmd.add_option("--seed", f.sampling.seed, "Base seed")->capture_default_str();
  cmd.add_option("--tol", f.sampling.tol, "Numerical tolerance")->capture_default_str();
}

void add_format_flags(CLI::App& cmd, CommonFlags& f) {
  auto* json_flag = cmd.add_flag("--json", f.compact, "Single-line JSON output");
  cmd.add_flag("--pretty", f.pretty, "Indented JSON output (default)")->excludes(json_flag);
}

void emit(std::ostream& out, const json& j, const CommonFlags& f) {
  out << (f.compact ? j.dump() : j.dump(2)) << '\n';
}

GroupPtr load_group(const std::string& spec) { return std::make_shared<const FiniteGroup>(resolve_group(spec)); }

// A Fourier symbol file holds [[re, im], ...] or {"symbol": [...]}.
std::vector<cplx> load_fourier_symbol(const std::string& path, const FiniteGroup& g) {
  json j = read_json_file(path);
  if (j.is_object() && j.contains("symbol")) j = j.at("symbol");
  auto phi = symbol_from_json(j);
  if (phi.size() != g.order())
    throw DimMismatch("symbol has " + std::to_string(phi.size()) + " entries, group has order " +
                      std::to_string(g.order()));
  return phi;
}

// A Schur symbol file holds a matrix object, or {"matrix": {...}}.
SchurSymbol load_schur_symbol(const std::string& path) {
  json j = read_json_file(path);
  if (j.is_object() && j.contains("matrix")) j = j.at("matrix");
  return SchurSymbol{matrix_from_json(j)};
}

int verdict_exit(const Verdict& v) {
  switch (v.status) {
    case Status::separating: return kExitSeparating;
    case Status::not_separating: return kExitNotSeparating;
    case Status::inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

int cmd_classify_fourier(const Inputs& in, const CommonFlags& f, std::ostream& out) {
  const GroupPtr g = load_group(in.group);
  const auto phi = load_fourier_symbol(in.symbol, *g);
  const Verdict v = classify_fourier(g, phi, f.sampling);
  json j = to_json(v);
  j["group"] = g->label();
  emit(out, j, f);
  return verdict_exit(v);
}

int cmd_classify_schur(const Inputs& in, const CommonFlags& f, std::ostream& out) {
  const Verdict v = classify_schur(load_schur_symbol(in.symbol), f.sampling);
  emit(out, to_json(v), f);
  return verdict_exit(v);
}

int cmd_herz_schur(const Inputs& in, const CommonFlags& f, std::ostream& out) {
  const GroupPtr g = load_group(in.group);
  const auto phi = load_fourier_symbol(in.symbol, *g);
  const SchurSymbol m = herz_schur_symbol(*g, phi);
  json j{{"group", g->label()}, {"matrix", to_json(m.m)}};
  const auto cert = rank_one_unimodular_factor(m, f.sampling.tol);
  std::optional<ScalarCharacterFit> fit;
  if (cert) {
    j["certificate"] = to_json(*cert);
    fit = recover_character(*g, *cert, f.sampling.tol);
    if (fit) j["recovered"] = to_json(*fit);
  }
  emit(out, j, f);
  return fit ? kExitSeparating : kExitNotSeparating;
}

int cmd_yeadon(const Inputs& in, const CommonFlags& f, std::ostream& out) {
  std::optional<LinearMap> t;
  if (in.transpose > 0) {
    t = LinearMap::transpose(in.transpose);
  } else if (!in.group.empty()) {
    const GroupPtr g = load_group(in.group);
    t = LinearMap::fourier({g, load_fourier_symbol(in.symbol, *g)});
  } else {
    t = LinearMap::schur(load_schur_symbol(in.symbol));
  }
  const YeadonTriple y = yeadon_candidate(*t);
  json j = to_json(y);
  const bool ok = y.residuals.max() <= f.sampling.tol;
  j["valid"] = ok;
  j["tol"] = f.sampling.tol;
  emit(out, j, f);
  return ok ? kExitSeparating : kExitNotSeparating;
}

int cmd_list_characters(const Inputs& in, const CommonFlags& f, std::ostream& out) {
  const GroupPtr g = load_group(in.group);
  json chars = json::array();
  for (const auto& chi : enumerate_characters(*g)) chars.push_back(to_json(chi));
  emit(out, json{{"group", g->label()}, {"order", g->order()}, {"names", g->names()}, {"characters", chars}}, f);
  return kExitSeparating;
}

int cmd_verify_theorems(const Inputs& in, const CommonFlags& f, std::ostream& out) {
  SuiteConfig config = default_suite_config();
  if (!in.config.empty()) {
    const std::filesystem::path path(in.config);
    config = suite_config_from_json(read_json_file(path), path.parent_path());
  }
  if (!in.output.empty()) config.output = in.output;

  const SuiteReport report = run_suite(config);
  const json j = to_json(report);
  if (!config.output.empty()) write_text_file(config.output, j.dump(2) + "\n");

  if (f.compact || f.pretty) {
    emit(out, j, f);
  } else {
    for (const auto& c : report.cells) {
      out << (c.pass ? "PASS " : "FAIL ") << c.property << ' ' << c.subject;
      if (c.p) out << " p=" << *c.p;
      out << " cases=" << c.cases << " max_residual=" << c.max_residual;
      if (!c.pass) out << " :: " << c.failure << " (seed " << config.seed << ", index "
                       << (c.failing_index ? std::to_string(*c.failing_index) : "-") << ")";
      out << '\n';
    }
    if (config.groups.empty()) out << "no groups configured; nothing verified\n";
    out << report.cells.size() - report.failures() << '/' << report.cells.size() << " cells passed\n";
  }
  return suite_exit_code(report);
}

int data_error(std::ostream& err, const std::exception& e) {
  err << "ncmult: " << e.what() << '\n';
  return kExitData;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Separating maps on noncommutative L^p spaces of finite groups and matrix algebras", "ncmult"};
  app.set_version_flag("--version", std::string(NCMULT_VERSION));
  app.require_subcommand(1);

  CommonFlags flags;
  Inputs in;

  auto* fourier = app.add_subcommand("classify-fourier", "Classify a Fourier multiplier on VN(G)");
  fourier->add_option("--group", in.group, "Builtin group name or group JSON file")->required();
  fourier->add_option("--symbol", in.symbol, "JSON file with the symbol [[re, im], ...]")->required();

  auto* schur = app.add_subcommand("classify-schur", "Classify a Schur multiplier on M_n");
  schur->add_option("--symbol", in.symbol, "JSON matrix file {\"re\": ..., \"im\": ...}")->required();

  auto* herz = app.add_subcommand("herz-schur", "Herz-Schur symbol of a function on G, with its certificate");
  herz->add_option("--group", in.group, "Builtin group name or group JSON file")->required();
  herz->add_option("--symbol", in.symbol, "JSON file with phi")->required();

  auto* yeadon = app.add_subcommand("yeadon", "Extract the Yeadon triple (w, B, J) of a map");
  yeadon->add_option("--group", in.group, "Group of a Fourier multiplier; omit for a Schur symbol");
  auto* yeadon_symbol = yeadon->add_option("--symbol", in.symbol, "Symbol file (Fourier or Schur)");
  yeadon->add_option("--transpose", in.transpose, "Use the transpose map on M_n")->excludes(yeadon_symbol);

  auto* verify = app.add_subcommand("verify-theorems", "Run the property suites and write a report");
  verify->add_option("--config", in.config, "Suite config JSON (defaults to builtin groups of order <= 8)");
  verify->add_option("--output", in.output, "Report path (overrides the config)");

  auto* chars = app.add_subcommand("list-characters", "Enumerate the characters of a group");
  chars->add_option("--group", in.group, "Builtin group name or group JSON file")->required();

  for (auto* cmd : {fourier, schur, herz, yeadon}) add_sampling_flags(*cmd, flags);
  for (auto* cmd : {fourier, schur, herz, yeadon, verify, chars}) add_format_flags(*cmd, flags);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  if (yeadon->parsed() && in.transpose == 0 && in.symbol.empty()) {
    err << "ncmult: yeadon needs --symbol or --transpose\n";
    return kExitUsage;
  }

  try {
    if (fourier->parsed()) return cmd_classify_fourier(in, flags, out);
    if (schur->parsed()) return cmd_classify_schur(in, flags, out);
    if (herz->parsed()) return cmd_herz_schur(in, flags, out);
    if (yeadon->parsed()) return cmd_yeadon(in, flags, out);
    if (verify->parsed()) return cmd_verify_theorems(in, flags, out);
    if (chars->parsed()) return cmd_list_characters(in, flags, out);
  } catch (const InvalidTrials& e) {
    err << "ncmult: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidExponent& e) {
    err << "ncmult: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    return data_error(err, e);
  } catch (const std::exception& e) {
    return data_error(err, e);
  }
  return kExitUsage;
}

}  // namespace ncmult
