#pragma once

#include "kgraph/boundary.hpp"
#include "kgraph/twist.hpp"

#include <json.hpp>

namespace kg {

using json = nlohmann::json;

// Throws Errc::Parse with the offending field in the message.
json read_json_file(const std::string& path);

KGraph graph_from_json(const json& j);
// Cocycle theta[i][j] multiplies m_{i+1} n_{j+1}; edge_weights add a coboundary.
CategoricalCocycle cocycle_from_json(const json& j, const KGraph& g);
std::vector<PathSet> ee_from_json(const json& j, const KGraph& g);

// "a.b" style words, or a vertex name.
Path parse_path(const KGraph& g, const std::string& s);

json path_json(const KGraph& g, const Path& p);
json pathset_json(const KGraph& g, const PathSet& E);
json filter_json(const KGraph& g, const BoundedFilter& S);

}  // namespace kg
