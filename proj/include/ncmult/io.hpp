#pragma once

// JSON wire formats.
//
//   matrix:  {"dim": n, "re": [[...]], "im": [[...]]}
//   symbol:  [[re, im], ...] in group element order
//   group:   {"order": n, "mul": [[...]], "names": [...]}
//   verdict: {"status", "certificate"?, "witness"?, "trials", "p",
//             "max_deviation", "seeds"}

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncmult/classify.hpp"
#include "ncmult/groups.hpp"
#include "ncmult/linalg.hpp"

namespace ncmult {

using json = nlohmann::json;

json to_json(const ComplexMatrix& m);
/// Throws ParseError on malformed input, DimMismatch on non-square data.
ComplexMatrix matrix_from_json(const json& j);

json symbol_to_json(const std::vector<cplx>& v);
std::vector<cplx> symbol_from_json(const json& j);

json to_json(const FiniteGroup& g);
/// Identity and inverses are derived and the table validated (InvalidGroup).
FiniteGroup group_from_json(const json& j);

json to_json(const Character& chi);
json to_json(const ScalarCharacterFit& fit);
json to_json(const RankOneCertificate& cert);
json to_json(const Certificate& cert);
json to_json(const Witness& w);
json to_json(const Verdict& v);
json to_json(const YeadonTriple& y);

/// Throws IoError when the file cannot be read, ParseError when it is not JSON.
json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace ncmult
