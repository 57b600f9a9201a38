#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ncmult/cli.hpp"
#include "ncmult/errors.hpp"
#include "ncmult/io.hpp"
#include "ncmult/random.hpp"
#include "support.hpp"

using namespace ncmult;
using testing::max_diff;

namespace fs = std::filesystem;

namespace {

// Scratch directory removed on destruction.
struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("ncmult-test-" + std::to_string(make_rng(static_cast<std::uint64_t>(
                                                            std::hash<const void*>{}(this)))()));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = dir / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string write(const std::string& name, const json& j) const { return write(name, j.dump()); }
};

struct Run {
  int code;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("matrix JSON round trip and validation") {
  Rng rng = make_rng(1);
  const ComplexMatrix m = random_complex_matrix(rng, 3);
  const json j = to_json(m);
  CHECK(j.at("dim") == 3);
  CHECK(matrix_from_json(j) == m);
  CHECK(matrix_from_json(json::parse(j.dump())) == m);
  CHECK(matrix_from_json(json{{"dim", 2}, {"re", {{1, 2}, {3, 4}}}}) == (ComplexMatrix{{1.0, 2.0}, {3.0, 4.0}}));
  CHECK_THROWS_AS(matrix_from_json(json{{"dim", 2}, {"re", {{1, 2, 3}, {3, 4, 5}}}}), DimMismatch);
  CHECK_THROWS_AS(matrix_from_json(json{{"dim", 2}, {"re", {{1, "x"}, {3, 4}}}}), ParseError);
  CHECK_THROWS_AS(matrix_from_json(json::array()), ParseError);
}

TEST_CASE("symbol and group JSON round trip") {
  const std::vector<cplx> phi{1.0, cplx(0.0, -1.0), cplx(0.5, 2.0)};
  CHECK(symbol_from_json(symbol_to_json(phi)) == phi);
  CHECK(symbol_from_json(json::parse("[1, [0, 2]]")) == std::vector<cplx>{1.0, cplx(0.0, 2.0)});
  CHECK_THROWS_AS(symbol_from_json(json::parse("[[1, 2, 3]]")), ParseError);

  const auto q8 = builtin_group("quaternion8");
  const FiniteGroup back = group_from_json(to_json(q8));
  CHECK(back == q8);
  CHECK(back.names() == q8.names());
  CHECK_THROWS_AS(group_from_json(json{{"order", 2}, {"mul", {{0, 1}, {0, 1}}}}), InvalidGroup);
}

TEST_CASE("verdict JSON carries status, seeds and witness") {
  const auto g = std::make_shared<const FiniteGroup>(builtin_group("cyclic(2)"));
  const Verdict v = classify_fourier(g, {1.0, 0.0}, {2.0, 10, 7, 1e-9});
  const json j = to_json(v);
  CHECK(j.at("status") == "not-separating");
  CHECK(j.at("p") == 2.0);
  CHECK(j.at("seeds").at("base") == 7);
  CHECK(j.contains("witness"));
  CHECK(matrix_from_json(j.at("witness").at("a")) == v.witness->a);
  CHECK_FALSE(j.contains("certificate"));
}

TEST_CASE("read_json_file errors") {
  Scratch tmp;
  CHECK_THROWS_AS(read_json_file(tmp.dir / "absent.json"), IoError);
  CHECK_THROWS_AS(read_json_file(tmp.write("bad.json", std::string("{not json"))), ParseError);
}

TEST_CASE("cli classify-fourier exit codes") {
  Scratch tmp;
  const auto chars = enumerate_characters(builtin_group("cyclic(4)"));
  const auto good = tmp.write("char.json", symbol_to_json(chars[1].values));
  const Run ok = cli({"classify-fourier", "--group", "cyclic(4)", "--symbol", good, "--json"});
  CHECK(ok.code == 0);
  CHECK(ok.parsed().at("status") == "separating");
  CHECK(ok.parsed().at("certificate").at("kind") == "scalar-character");

  const auto bad = tmp.write("bad.json", symbol_to_json({1.0, 0.0}));
  const Run no = cli({"classify-fourier", "--group", "cyclic(2)", "--symbol", bad});
  CHECK(no.code == 1);
  CHECK(no.parsed().contains("witness"));

  const Run missing = cli({"classify-fourier", "--group", "cyclic(2)", "--symbol", (tmp.dir / "nope.json").string()});
  CHECK(missing.code == 4);
  CHECK_FALSE(missing.err.empty());

  CHECK(cli({"classify-fourier", "--group", "cyclic(4)", "--symbol", bad}).code == 4);       // wrong length
  CHECK(cli({"classify-fourier", "--group", "cyclic(0)", "--symbol", good}).code == 4);      // unknown group
  CHECK(cli({"classify-fourier", "--group", "cyclic(4)", "--symbol", good, "--trials", "0"}).code == 3);
  CHECK(cli({"classify-fourier", "--group", "cyclic(4)", "--symbol", good, "--p", "0.5"}).code == 3);
}

TEST_CASE("cli classify-fourier with a group file") {
  Scratch tmp;
  const auto g = builtin_group("symmetric(3)");
  const auto path = tmp.write("s3.json", to_json(g));
  const auto sign = tmp.write("sign.json", json{{"symbol", symbol_to_json(enumerate_characters(g)[1].values)}});
  const Run r = cli({"classify-fourier", "--group", path, "--symbol", sign, "--json"});
  CHECK(r.code == 0);
}

TEST_CASE("cli classify-schur exit codes") {
  Scratch tmp;
  Rng rng = make_rng(3);
  const auto alpha = random_unimodular_vector(rng, 3), beta = random_unimodular_vector(rng, 3);
  ComplexMatrix m(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = alpha[i] * beta[j];
  CHECK(cli({"classify-schur", "--symbol", tmp.write("r1.json", to_json(m))}).code == 0);
  const Run h = cli({"classify-schur", "--symbol", tmp.write("h.json", json{{"matrix", to_json(ComplexMatrix{{1.0, 1.0}, {1.0, -1.0}})}})});
  CHECK(h.code == 1);
  const auto ns = tmp.write("ns.json", json{{"dim", 2}, {"re", {{1, 2, 3}, {4, 5, 6}}}});
  CHECK(cli({"classify-schur", "--symbol", ns}).code == 4);
}

TEST_CASE("cli usage errors") {
  CHECK(cli({}).code == 3);
  CHECK(cli({"frobnicate"}).code == 3);
  CHECK(cli({"classify-fourier", "--group", "cyclic(2)"}).code == 3);
  CHECK(cli({"classify-fourier", "--group", "cyclic(2)", "--symbol", "x", "--json", "--pretty"}).code == 3);
  CHECK(cli({"yeadon"}).code == 3);
  const Run help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify-theorems") != std::string::npos);
  CHECK(cli({"--version"}).code == 0);
}

TEST_CASE("cli herz-schur, yeadon and list-characters") {
  Scratch tmp;
  const auto g = builtin_group("quaternion8");
  const auto chars = enumerate_characters(g);
  std::vector<cplx> phi(8);
  for (std::size_t s = 0; s < 8; ++s) phi[s] = 2.0 * chars[2].values[s];
  const auto path = tmp.write("phi.json", symbol_to_json(phi));

  const Run hs = cli({"herz-schur", "--group", "quaternion8", "--symbol", path, "--json"});
  CHECK(hs.code == 0);
  const json recovered = hs.parsed().at("recovered");
  CHECK(max_diff(symbol_from_json(recovered.at("character")), chars[2].values) < 1e-12);

  const auto bad = tmp.write("bad.json", symbol_to_json({1.0, 1.0, 1.0, -1.0}));
  CHECK(cli({"herz-schur", "--group", "cyclic(4)", "--symbol", bad}).code == 1);

  const Run y = cli({"yeadon", "--group", "quaternion8", "--symbol", path, "--json"});
  CHECK(y.code == 0);
  CHECK(y.parsed().at("valid") == true);
  CHECK(cli({"yeadon", "--transpose", "3"}).code == 0);
  CHECK(cli({"yeadon", "--group", "cyclic(4)", "--symbol", bad}).code == 1);

  const Run lc = cli({"list-characters", "--group", "symmetric(3)", "--json"});
  CHECK(lc.code == 0);
  CHECK(lc.parsed().at("characters").size() == 2);
}

TEST_CASE("cli verify-theorems on a small config") {
  Scratch tmp;
  const json config{{"groups", {"cyclic(3)", "cyclic(2)^2"}}, {"trials", 20}, {"samples", 3}, {"schur_dims", {2}}};
  const auto path = tmp.write("cfg.json", config);
  const auto report = (tmp.dir / "report.json").string();
  const Run r = cli({"verify-theorems", "--config", path, "--output", report});
  CHECK(r.code == 0);
  CHECK(r.out.find("cells passed") != std::string::npos);
  const json j = read_json_file(report);
  CHECK(j.at("exit_code") == 0);
  CHECK(j.at("config").at("trials") == 20);

  const auto empty = tmp.write("empty.json", json{{"groups", json::array()}});
  CHECK(cli({"verify-theorems", "--config", empty}).code == 2);
  const auto bad_p = tmp.write("badp.json", json{{"p_values", {0.5}}});
  CHECK(cli({"verify-theorems", "--config", bad_p}).code == 3);
}
