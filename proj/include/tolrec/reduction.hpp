#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tolrec/geometry.hpp"
#include "tolrec/graph.hpp"
#include "tolrec/orientation.hpp"

namespace tolrec {

// Monotone 3-CNF. Variables are 1..n, each clause sorted ascending.
struct MonotoneCnf {
    int n = 0;
    std::vector<std::array<int, 3>> clauses;
    int k() const { return static_cast<int>(clauses.size()); }
    bool operator==(const MonotoneCnf&) const = default;
};

// DIMACS restricted to positive literals, three per clause. The "p cnf"
// header is optional; without it n is the largest variable seen.
MonotoneCnf parse_cnf(const std::string& text);
std::string to_dimacs(const MonotoneCnf& f);
// Throws unless every variable 1..n occurs in some clause.
void require_all_variables(const MonotoneCnf& f);

struct ReductionArtifacts {
    MonotoneCnf formula;
    Graph pphi;
    PermutationRep rp;
    PairSet merge_pairs;             // clause pairs (3 per clause) then connector pairs
    std::vector<VertexSet> blocks;   // blocks[p-1] = lines of variable p
    std::vector<std::string> labels; // line id -> name
    int connector_count = 0;
    int m() const { return merge_pairs.size(); }
};

// Optional seed permutes the pair order inside each block.
ReductionArtifacts build_Pphi(const MonotoneCnf& f, std::optional<std::uint64_t> seed = std::nullopt);

struct TrapezoidInstance {
    Graph graph;
    TrapezoidRep rep;
};

// Vertex i = merge pair i.
TrapezoidInstance build_Gphi(const ReductionArtifacts& art);
// Vertices 0..m-1 are the input vertices; 6 gadget parallelograms follow per
// vertex (ids m+6i .. m+6i+5). The output rep is renormalized.
TrapezoidInstance build_Hphi(const Graph& g, const TrapezoidRep& rg);

// Line blocks of split_lines_rep(R_H): every line of vertex i of G and of its
// gadgets goes to the block of the corresponding R_P line.
std::vector<VertexSet> hphi_line_blocks(const ReductionArtifacts& art, const TrapezoidRep& rh);
// Flips the given variable blocks (0-based) of R_H at line level.
TrapezoidRep flip_hphi_blocks(const ReductionArtifacts& art, const TrapezoidRep& rh, const std::vector<int>& which);

// For split_U(H_phi, 0..m-1) vertex j -> R_P line id, given which derivative
// took the left line of each T_{u_i}.
std::vector<Vertex> derivative_to_line(const ReductionArtifacts& art, const std::vector<bool>& first_is_left);

}  // namespace tolrec
