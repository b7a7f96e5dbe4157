#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tolrec/geometry.hpp"
#include "tolrec/graph.hpp"

namespace tolrec {

using Arc = std::pair<Vertex, Vertex>;

// Perfect matching on the ids 0..size-1 of a rep.
struct PairSet {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    int size() const { return static_cast<int>(pairs.size()); }
    // owner[id] = index of the pair containing id. Throws unless perfect on n ids.
    std::vector<int> owners(int n) const;
    bool operator==(const PairSet&) const = default;
};

struct Orientation {
    std::vector<Arc> arcs;  // sorted
    bool has(Vertex x, Vertex y) const;
};

struct MergedDigraph {
    int n = 0;                  // one vertex per pair
    std::vector<Arc> arcs;      // sorted, deduplicated, no loops
    std::vector<int> loops;     // pairs whose two members are joined by an arc
};

struct AcyclicityVerdict {
    bool acyclic = true;
    std::vector<int> witness;  // pair indices along a shortest directed cycle
};

// bottom - top. Larger key is read as larger angle with the bottom rail.
Rational theta_key(const Line& l);

// x -> y for every crossing pair with theta_key(x) < theta_key(y).
Orientation transitive_orientation(const PermutationRep& r);
bool is_transitive(const Orientation& o, const Graph& g);

MergedDigraph merge_pairs(const Orientation& phi, const PairSet& pairs, int n_ids);

// Shortest directed cycle of d (a loop counts as a cycle of length 1).
std::optional<std::vector<int>> shortest_cycle(const MergedDigraph& d);

AcyclicityVerdict is_acyclic_wrt_pairs(const PermutationRep& r, const PairSet& pairs);

struct LineSplit {
    PermutationRep lines;  // line 2v = left of v, 2v+1 = right of v
    PairSet pairs;         // pair v = {2v, 2v+1}
};
LineSplit split_lines_rep(const TrapezoidRep& r);
// Inverse of split_lines_rep: vertex v gets lines 2v (left) and 2v+1 (right).
TrapezoidRep join_lines_rep(const PermutationRep& lines);

AcyclicityVerdict is_acyclic_trapezoid_rep(const TrapezoidRep& r);

// Block subsets are tried in increasing bitmask order (block 0 = lowest bit).
// Returns the sorted block indices of the first subset whose flip is acyclic.
std::optional<std::vector<int>> find_acyclic_flip(const PermutationRep& r, const PairSet& pairs,
                                                  const std::vector<VertexSet>& blocks);
PermutationRep flip_blocks(const PermutationRep& r, const std::vector<VertexSet>& blocks,
                           const std::vector<int>& which);

struct ParallelogramizeResult {
    std::optional<ParallelogramRep> rep;
    std::string route;   // "fixed-top" or "gap-lp" on success
    std::string reason;  // why it failed otherwise
    explicit operator bool() const { return rep.has_value(); }
};

// Straightens an acyclic trapezoid rep into a parallelogram rep with the same
// rail orders. The output is checked against graph_of(r) before returning.
ParallelogramizeResult parallelogramize(const TrapezoidRep& r);

}  // namespace tolrec
