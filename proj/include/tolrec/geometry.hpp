#pragma once

#include <optional>
#include <vector>

#include "tolrec/graph.hpp"
#include "tolrec/rational.hpp"

namespace tolrec {

// A segment between the top rail (L1) and the bottom rail (L2).
struct Line {
    Rational top;
    Rational bottom;
    bool operator==(const Line&) const = default;
};

struct PermutationRep {
    std::vector<Line> lines;  // id = index
    int size() const { return static_cast<int>(lines.size()); }
    bool operator==(const PermutationRep&) const = default;
};

// Top side [a,b], bottom side [c,d]. Left line (a,c), right line (b,d).
struct Trapezoid {
    Rational a, b, c, d;
    Line left() const { return {a, c}; }
    Line right() const { return {b, d}; }
    bool operator==(const Trapezoid&) const = default;
};

struct TrapezoidRep {
    std::vector<Trapezoid> traps;  // id = index
    int size() const { return static_cast<int>(traps.size()); }
    bool operator==(const TrapezoidRep&) const = default;
};

// A trapezoid rep whose trapezoids all satisfy a - c = b - d.
class ParallelogramRep {
public:
    ParallelogramRep() = default;
    explicit ParallelogramRep(TrapezoidRep r);
    const TrapezoidRep& traps() const { return rep_; }
    int size() const { return rep_.size(); }
    bool operator==(const ParallelogramRep&) const = default;

private:
    TrapezoidRep rep_;
};

struct ToleranceInterval {
    Rational l, r, t;
    bool operator==(const ToleranceInterval&) const = default;
};

struct ToleranceRep {
    std::vector<ToleranceInterval> items;  // id = index
    int size() const { return static_cast<int>(items.size()); }
    // t <= r - l for every vertex.
    bool bounded() const;
    bool operator==(const ToleranceRep&) const = default;
};

// Invariant checks; throw InvalidArgument naming the offending ids.
void validate(const PermutationRep& r);
void validate(const TrapezoidRep& r);
void validate(const ToleranceRep& r);
bool is_parallelogram(const Trapezoid& t);

bool lines_cross(const Line& x, const Line& y);
// x << y: x lies completely to the left of y (strictly, on both rails).
// Zero-width trapezoids (a == b, c == d) stand for lines.
bool left_of(const Trapezoid& x, const Trapezoid& y);
Trapezoid as_trapezoid(const Line& l);

Graph graph_of_permutation_rep(const PermutationRep& r);
Graph graph_of_trapezoid_rep(const TrapezoidRep& r);
Graph graph_of_parallelogram_rep(const ParallelogramRep& r);
Graph graph_of_tolerance_rep(const ToleranceRep& r);
// Intersection graph of trapezoids that may be degenerate (lines). No validation.
Graph intersection_graph(const std::vector<Trapezoid>& elems);

inline Graph graph_of(const PermutationRep& r) { return graph_of_permutation_rep(r); }
inline Graph graph_of(const TrapezoidRep& r) { return graph_of_trapezoid_rep(r); }
inline Graph graph_of(const ParallelogramRep& r) { return graph_of_parallelogram_rep(r); }
inline Graph graph_of(const ToleranceRep& r) { return graph_of_tolerance_rep(r); }

PermutationRep vertical_flip(const PermutationRep& r);
TrapezoidRep vertical_flip(const TrapezoidRep& r);
ParallelogramRep vertical_flip(const ParallelogramRep& r);
PermutationRep horizontal_flip(const PermutationRep& r);
TrapezoidRep horizontal_flip(const TrapezoidRep& r);
ParallelogramRep horizontal_flip(const ParallelogramRep& r);

// Swaps top and bottom of the block's lines. The hull of the block's
// coordinates (over both rails) must contain no coordinate of another line.
PermutationRep block_horizontal_flip(const PermutationRep& r, const VertexSet& block);

ParallelogramRep tolerance_to_parallelogram(const ToleranceRep& r);
ToleranceRep parallelogram_to_tolerance(const ParallelogramRep& r);

// Replace each rail's coordinates by ranks 1..k.
PermutationRep renormalize(const PermutationRep& r);
TrapezoidRep renormalize(const TrapezoidRep& r);

// Smallest positive difference between endpoints on the same rail.
std::optional<Rational> min_rail_gap(const TrapezoidRep& r);
std::optional<Rational> min_rail_gap(const PermutationRep& r);

struct VerifyResult {
    bool ok = true;
    std::optional<Edge> mismatch;  // first differing pair in lexicographic order
    bool edge_in_rep = false;      // which side has the edge
    explicit operator bool() const { return ok; }
};

VerifyResult compare_graphs(const Graph& from_rep, const Graph& g);
VerifyResult verify_rep(const PermutationRep& r, const Graph& g);
VerifyResult verify_rep(const TrapezoidRep& r, const Graph& g);
VerifyResult verify_rep(const ParallelogramRep& r, const Graph& g);
VerifyResult verify_rep(const ToleranceRep& r, const Graph& g);

}  // namespace tolrec
