#pragma once

#include <string>

#include <json.hpp>

#include "tsc/cohen_macaulay.hpp"
#include "tsc/complex.hpp"
#include "tsc/covers.hpp"
#include "tsc/graph.hpp"
#include "tsc/homology.hpp"

namespace tsc::io {

using nlohmann::json;

// Graph: {"m": int, "edges": [[u,v],...], "labels": {"v<i>": int, "e<k>": int}}
// with k the 1-based position of the edge in canonical order. Missing labels
// mean the default labeling.
json to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const json& j);

// Complex: {"n": int, "facets": [[...],...]}, n the largest label.
json to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const json& j);

json to_json(const HomologySummary& h);
json to_json(const CmReport& r);
json decomposition_json(const CoverReport& covers);

/// Compact single-line serialization plus trailing newline; object keys sorted.
std::string dump(const json& j);

/// Parse text; malformed JSON or schema violations raise InputError.
json parse(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

} // namespace tsc::io
