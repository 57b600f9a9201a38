#include "ncmult/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "ncmult/errors.hpp"

namespace ncmult {

namespace {

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

// Keeps JSON output valid for the rare non-finite value (e.g. an unset
// deviation); nlohmann would otherwise emit null silently anyway.
json real_to_json(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

double number_at(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string("expected a number in ") + what);
  return j.get<double>();
}

}  // namespace

json to_json(const ComplexMatrix& m) {
  json re = json::array(), im = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json rr = json::array(), ir = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) {
      rr.push_back(m(i, j).real());
      ir.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  return json{{"dim", m.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("re")) throw ParseError("matrix must be an object with \"re\"");
  const json& re = j.at("re");
  if (!re.is_array() || re.empty()) throw ParseError("matrix \"re\" must be a non-empty array of rows");
  const std::size_t n = re.size();
  if (j.contains("dim")) {
    const json& dim = j.at("dim");
    if (!dim.is_number_integer() || dim.get<long long>() < 1) throw ParseError("matrix \"dim\" must be a positive integer");
    if (dim.get<std::size_t>() != n)
      throw DimMismatch("matrix \"dim\" disagrees with the number of rows");
  }
  const json* im = j.contains("im") ? &j.at("im") : nullptr;
  if (im && (!im->is_array() || im->size() != n)) throw DimMismatch("matrix \"im\" has the wrong shape");

  std::vector<cplx> entries;
  entries.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const json& row = re.at(r);
    if (!row.is_array()) throw ParseError("matrix rows must be arrays");
    if (row.size() != n) throw DimMismatch("matrix is not square: row " + std::to_string(r) + " has " +
                                           std::to_string(row.size()) + " entries, expected " + std::to_string(n));
    if (im && (!(*im)[r].is_array() || (*im)[r].size() != n)) throw DimMismatch("matrix \"im\" is not square");
    for (std::size_t c = 0; c < n; ++c)
      entries.emplace_back(number_at(row[c], "matrix"), im ? number_at((*im)[r][c], "matrix") : 0.0);
  }
  return ComplexMatrix(n, std::move(entries));
}

json symbol_to_json(const std::vector<cplx>& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(complex_to_json(z));
  return out;
}

std::vector<cplx> symbol_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("symbol must be an array of [re, im] pairs");
  std::vector<cplx> out;
  out.reserve(j.size());
  for (const auto& z : j) {
    if (z.is_number()) {
      out.emplace_back(z.get<double>(), 0.0);
      continue;
    }
    if (!z.is_array() || z.size() != 2) throw ParseError("symbol entries must be [re, im] pairs");
    out.emplace_back(number_at(z[0], "symbol"), number_at(z[1], "symbol"));
    if (!std::isfinite(out.back().real()) || !std::isfinite(out.back().imag()))
      throw InvalidMatrix("symbol has non-finite entries");
  }
  return out;
}

json to_json(const FiniteGroup& g) {
  return json{{"order", g.order()}, {"mul", g.table()}, {"names", g.names()}, {"label", g.label()}};
}

FiniteGroup group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("mul")) throw ParseError("group must be an object with \"mul\"");
  std::vector<std::vector<std::size_t>> mul;
  try {
    mul = j.at("mul").get<std::vector<std::vector<std::size_t>>>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("group \"mul\" must be a table of indices: ") + e.what());
  }
  if (j.contains("order") && j.at("order").get<std::size_t>() != mul.size())
    throw InvalidGroup("group \"order\" disagrees with the Cayley table");
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  std::string label = j.value("label", std::string());
  return FiniteGroup(std::move(mul), std::move(names), std::move(label));
}

json to_json(const Character& chi) { return symbol_to_json(chi.values); }

json to_json(const ScalarCharacterFit& fit) {
  return json{{"kind", "scalar-character"}, {"c", complex_to_json(fit.c)}, {"character", to_json(fit.psi)}};
}

json to_json(const RankOneCertificate& cert) {
  return json{{"kind", "rank-one-unimodular"},
              {"c", complex_to_json(cert.c)},
              {"alpha", symbol_to_json(cert.alpha)},
              {"beta", symbol_to_json(cert.beta)}};
}

json to_json(const Certificate& cert) {
  return std::visit([](const auto& c) { return to_json(c); }, cert);
}

json to_json(const Witness& w) {
  return json{{"source", w.probe ? "probe" : "random"},
              {"index", w.index},
              {"pair_seed", w.pair_seed},
              {"pair_violation", real_to_json(w.pair_violation)},
              {"image_violation", real_to_json(w.image_violation)},
              {"lp_norms", {{"a", w.lp_norms[0]}, {"b", w.lp_norms[1]}, {"Ta", w.lp_norms[2]}, {"Tb", w.lp_norms[3]}}},
              {"a", to_json(w.a)},
              {"b", to_json(w.b)},
              {"Ta", to_json(w.image_a)},
              {"Tb", to_json(w.image_b)}};
}

json to_json(const Verdict& v) {
  json out{{"status", to_string(v.status)},
           {"trials", v.trials},
           {"probes", v.probes},
           {"p", v.p},
           {"max_deviation", v.max_deviation ? real_to_json(*v.max_deviation) : json(nullptr)},
           {"seeds", {{"base", v.seed}}}};
  if (v.certificate) out["certificate"] = to_json(*v.certificate);
  if (v.witness) {
    out["witness"] = to_json(*v.witness);
    out["seeds"]["witness_index"] = v.witness->index;
    if (!v.witness->probe) out["seeds"]["witness_pair_seed"] = v.witness->pair_seed;
  }
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

json to_json(const YeadonTriple& y) {
  return json{{"w", to_json(y.w)},
              {"B", to_json(y.b)},
              {"J", {{"basis", y.j.group() ? "lambda(s)" : "e_ij row-major"}, {"action", to_json(y.j.action())}}},
              {"residuals",
               {{"reconstruction", y.residuals.reconstruction},
                {"support", y.residuals.support},
                {"jordan", y.residuals.jordan},
                {"adjoint", y.residuals.star},
                {"commutation", y.residuals.commutation}}}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace ncmult
