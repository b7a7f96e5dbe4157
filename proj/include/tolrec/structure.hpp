#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tolrec/geometry.hpp"
#include "tolrec/graph.hpp"

namespace tolrec {

// Components V_1..V_w of G - N[u] (ordered by smallest member) and their
// boundaries N(V_i).
struct ComponentFamily {
    Vertex u = -1;
    std::vector<VertexSet> components;
    std::vector<VertexSet> boundaries;
    int size() const { return static_cast<int>(components.size()); }
};

ComponentFamily component_family(const Graph& g, Vertex u);

// Index sets below are sorted lists of component indices.
std::vector<int> domination_closure(const ComponentFamily& f, int i);
std::vector<int> domination_closure(const Graph& g, Vertex u, int i);
std::vector<int> master_components(const ComponentFamily& f);
std::vector<int> master_components(const Graph& g, Vertex u);
std::vector<int> closure_complement(const ComponentFamily& f, int i);
std::vector<int> closure_complement(const Graph& g, Vertex u, int i);
std::vector<int> maximal_components(const ComponentFamily& f, const std::vector<int>& s);
std::vector<int> maximal_components(const Graph& g, Vertex u, const std::vector<int>& s);

struct Deltas {
    std::optional<int> delta;       // master component index
    std::optional<int> delta_star;  // maximal member of its closure complement
};

// Ties go to the component with the smallest minimum id.
Deltas select_deltas(const ComponentFamily& f);
Deltas select_deltas(const Graph& g, Vertex u);
// Every admissible (master, maximal complement member) choice.
std::vector<std::pair<int, int>> all_delta_choices(const ComponentFamily& f);
bool has_delta_star(const Graph& g, Vertex u);

struct NPartition {
    VertexSet n0, n1, n2, n12;
    bool operator==(const NPartition&) const = default;
};

NPartition n_partition(const Graph& g, Vertex u);
// Partition for an explicit choice of delta and delta* components.
NPartition n_partition(const Graph& g, Vertex u, const ComponentFamily& f, int delta, int delta_star);

struct RepPartition {
    NPartition part;
    VertexSet d1, d2;  // trapezoids completely left / right of T_u
};

RepPartition n_partition_rep(const Graph& g, const TrapezoidRep& r, Vertex u);

// Standardness w.r.t. u, read in the mirror image when the chosen master
// component lies to the right of T_u.
bool is_standard_rep(const Graph& g, const TrapezoidRep& r, Vertex u);
// Same test over possibly degenerate trapezoids (lines).
bool is_standard_elems(const Graph& g, const std::vector<Trapezoid>& elems, Vertex u);

}  // namespace tolrec
