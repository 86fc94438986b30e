#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rqa/genmm.hpp"
#include "rqa/nc_series.hpp"
#include "rqa/sequences.hpp"
#include "rqa/word.hpp"

namespace rqa {

using Json = nlohmann::ordered_json;

// Word <-> list of [i, j] pairs
Json word_to_json(const Word& w);
Word word_from_json(const Json& j);

// NcSeries <-> list of {word, num, den}; num/den are decimal strings
Json series_to_json(const NcSeries& s);

// {p: [...], r: [...], pi: [...], class: "ordered"|"back_ordered"|"path"|"back_path"}
Json query_to_json(const SequenceClassQuery& q);
SequenceClassQuery query_from_json(const Json& j);

// {m: ..., entries: [[...], ...]} with integer or rational-string entries
ScalarMatrix matrix_from_json(const Json& j);

Json comm_poly_to_json(const CommPoly& p, const std::vector<std::string>& names = {});
Json master_formula_to_json(const MasterFormula& f);

} // namespace rqa
