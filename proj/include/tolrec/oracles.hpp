#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tolrec/geometry.hpp"
#include "tolrec/graph.hpp"
#include "tolrec/orientation.hpp"
#include "tolrec/reduction.hpp"

namespace tolrec {

// a[p-1] is the value of variable p.
using Assignment = std::vector<bool>;

bool is_nae_satisfying(const MonotoneCnf& f, const Assignment& a);
// Smallest satisfying assignment, reading x1 as the most significant bit.
std::optional<Assignment> nae_sat_bruteforce(const MonotoneCnf& f, int guard = 24);
// Blocks (0-based variable indices) of the variables set to false.
std::vector<int> assignment_to_flips(const MonotoneCnf& f, const Assignment& a);

struct EquivalenceReport {
    bool sat = false;
    std::optional<Assignment> assignment;
    bool flip = false;                        // some block flip of R_P is acyclic
    std::optional<std::vector<int>> flip_set;
    bool certificate_acyclic = false;         // flips from the assignment give an acyclic R_P
    bool parallelogram_ok = false;            // parallelogramize(flipped R_H) verified against H_phi
    std::string parallelogram_route;
    // sat => flip, certificate and parallelogram; flip => sat (flip-restricted converse)
    bool consistent() const;
};

EquivalenceReport check_equivalence(const MonotoneCnf& f, int max_n = 10, int max_k = 8);

// Transitive orientation by edge-direction backtracking with forcing, or none.
std::optional<Orientation> is_comparability(const Graph& g, int guard = 24);
bool is_permutation_graph(const Graph& g, int guard = 24);

// Smallest monotone 3-CNF (ordered by k, then n, then the clause list) using
// every variable, with distinct clauses, and no NAE-satisfying assignment.
std::optional<MonotoneCnf> find_smallest_nae_unsat(int max_n, int max_k);

// Frozen fixtures.
MonotoneCnf worked_formula();
MonotoneCnf unsat_fixture();
// Ids: u=0, u1=1, u2=2, u3=3, v1=4, v2=5, v3=6, v4=7.
Graph split_fixture_graph();
std::vector<std::string> split_fixture_labels();
// Trapezoid rep (same ids as the split fixture) on which R(D_u(V_i)) << T_u fails.
TrapezoidRep closure_counterexample_rep();

}  // namespace tolrec
