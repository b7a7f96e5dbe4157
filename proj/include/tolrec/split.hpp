#pragma once

#include <utility>
#include <vector>

#include "tolrec/geometry.hpp"
#include "tolrec/graph.hpp"
#include "tolrec/orientation.hpp"
#include "tolrec/structure.hpp"

namespace tolrec {

struct VertexSplitResult {
    Graph graph;                  // n+1 vertices
    Vertex u1 = -1, u2 = -1;      // n-1 and n
    std::vector<Vertex> old_to_new;  // -1 for u
    NPartition part;
};

// G#(u). Remaining vertices keep their relative order.
VertexSplitResult vertex_split(const Graph& g, Vertex u);

struct SplitResult {
    Graph graph;                      // 2|U| vertices: 2i = u_i^1, 2i+1 = u_i^2
    std::vector<Vertex> order;        // U in processing order
    std::vector<std::pair<Vertex, Vertex>> derivatives;  // i -> (2i, 2i+1)
    VertexSet dropped;                // unsplit vertices removed at the end
};

// Splits U in the given order, re-checking delta* != empty at every step.
SplitResult split_U(const Graph& g, const std::vector<Vertex>& U);

// Lines 2i / 2i+1 = left / right line of T_{u_i}, taken verbatim from r.
PermutationRep restricted_line_rep(const TrapezoidRep& r, const std::vector<Vertex>& U);

struct LineCertificate {
    SplitResult split;
    PermutationRep lines;             // line j realizes vertex j of split.graph
    PairSet pairs;                    // {2i, 2i+1}
    std::vector<bool> first_is_left;  // u_i^1 took the left line of T_{u_i}
};

// Runs Split-U alongside r. Before each split, T_u is widened up to its
// non-neighbors so the rep is standard w.r.t. u, then replaced by its two
// lines; the intermediate rep is checked against H_i at every step.
LineCertificate split_U_line_certificate(const Graph& g, const TrapezoidRep& r, const std::vector<Vertex>& U);

}  // namespace tolrec
