#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "tolrec/geometry.hpp"
#include "tolrec/graph.hpp"
#include "tolrec/orientation.hpp"

namespace tolrec {

using Json = nlohmann::ordered_json;

struct GraphDoc {
    Graph graph;
    std::map<int, std::string> labels;
};

// {"n": int, "edges": [[u,v],...], "labels": {"id": "name"}?}
Json graph_to_json(const Graph& g, const std::vector<std::string>& labels = {});
GraphDoc graph_from_json(const Json& j);

// {"lines": {"id": {"top": "p/q", "bottom": "p/q"}}}
Json rep_to_json(const PermutationRep& r);
// {"traps": {"id": {"a":..,"b":..,"c":..,"d":..}}}
Json rep_to_json(const TrapezoidRep& r);
// {"intervals": {"id": {"l":..,"r":..,"t":..}}}
Json rep_to_json(const ToleranceRep& r);
PermutationRep permutation_rep_from_json(const Json& j);
TrapezoidRep trapezoid_rep_from_json(const Json& j);
ToleranceRep tolerance_rep_from_json(const Json& j);

// [[x,y],...]
Json pairs_to_json(const PairSet& p);
PairSet pairs_from_json(const Json& j);

// Undirected DOT ("graph name { ... }").
std::string to_dot(const Graph& g, const std::vector<std::string>& labels = {}, const std::string& name = "G");

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace tolrec
