#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "tolrec/error.hpp"
#include "tolrec/generators.hpp"
#include "tolrec/oracles.hpp"
#include "tolrec/reduction.hpp"
#include "tolrec/split.hpp"

using namespace tolrec;

namespace {

constexpr Vertex U = 0;

// Frozen from a random parallelogram rep: the literal left/right lines of
// T_0 and T_3 do not realize split_U(G, {0, 3}).
TrapezoidRep frozen_rep() {
    return TrapezoidRep{{{57, 86, 22, 51}, {34, 64, -1, 29}, {94, 110, 178, 194},
                         {38, 66, 68, 96}, {1, 11, 3, 13}, {73, 96, 15, 38}}};
}

// Split vertex j -> R_P line, for a certificate over an arbitrary order of 0..m-1.
std::vector<Vertex> derivative_lines(const ReductionArtifacts& art, const LineCertificate& c) {
    std::vector<Vertex> out(2 * art.m());
    for (std::size_t i = 0; i < c.split.order.size(); ++i) {
        auto [x, y] = art.merge_pairs.pairs[c.split.order[i]];
        Vertex left = art.rp.lines[x].top < art.rp.lines[y].top ? x : y;
        Vertex right = left == x ? y : x;
        out[2 * i] = c.first_is_left[i] ? left : right;
        out[2 * i + 1] = c.first_is_left[i] ? right : left;
    }
    return out;
}

std::vector<Vertex> iota_vec(int n) {
    std::vector<Vertex> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

}  // namespace

TEST(VertexSplit, Fixture) {
    VertexSplitResult r = vertex_split(split_fixture_graph(), U);
    ASSERT_EQ(r.graph.n(), 9);
    EXPECT_EQ(r.u1, 7);
    EXPECT_EQ(r.u2, 8);
    // u1, u2, u3 move to 0, 1, 2
    EXPECT_EQ(neighborhood(r.graph, r.u1), (VertexSet{0, 2}));
    EXPECT_EQ(neighborhood(r.graph, r.u2), (VertexSet{1, 2}));
    EXPECT_EQ(r.old_to_new[U], -1);
}

TEST(VertexSplit, BothDerivativesSeeN12) {
    // components {4} and {5} with boundaries {1,2} and {1,3}
    Graph g(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 4}, {3, 5}});
    VertexSplitResult r = vertex_split(g, 0);
    ASSERT_EQ(r.part.n12, (VertexSet{r.old_to_new[1]}));
    EXPECT_TRUE(r.graph.has_edge(r.u1, r.old_to_new[1]));
    EXPECT_TRUE(r.graph.has_edge(r.u2, r.old_to_new[1]));
    EXPECT_TRUE(r.graph.has_edge(r.u1, r.old_to_new[2]));
    EXPECT_FALSE(r.graph.has_edge(r.u2, r.old_to_new[2]));
    EXPECT_TRUE(r.graph.has_edge(r.u2, r.old_to_new[3]));
    EXPECT_FALSE(r.graph.has_edge(r.u1, r.old_to_new[3]));
}

TEST(VertexSplit, N0MemberLosesItsEdgeToU) {
    Graph g(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
    VertexSplitResult r = vertex_split(g, 0);
    Vertex x = r.old_to_new[3];
    ASSERT_EQ(r.part.n0, (VertexSet{x}));
    EXPECT_FALSE(r.graph.has_edge(r.u1, x));
    EXPECT_FALSE(r.graph.has_edge(r.u2, x));
}

TEST(SplitU, FixtureSingleVertexGivesTwoIsolatedVertices) {
    SplitResult s = split_U(split_fixture_graph(), {U});
    EXPECT_EQ(s.graph.n(), 2);
    EXPECT_EQ(s.graph.edge_count(), 0u);
    EXPECT_EQ(s.dropped, (VertexSet{1, 2, 3, 4, 5, 6, 7}));
}

TEST(SplitU, OutputHasTwoVerticesPerSplitVertex) {
    int runs = 0;
    for (std::uint64_t seed = 0; seed < 200 && runs < 50; ++seed) {
        TrapezoidRep r = random_parallelogram_rep(8, seed).traps();
        Graph g = graph_of(r);
        std::vector<Vertex> U;
        for (Vertex v = 0; v < g.n(); ++v)
            if (has_delta_star(g, v)) U.push_back(v);
        try {
            SplitResult s = split_U(g, U);
            EXPECT_EQ(s.graph.n(), 2 * static_cast<int>(U.size()));
            ++runs;
        } catch (const PreconditionFailed&) {
        }
    }
    EXPECT_GT(runs, 0);
}

TEST(SplitU, RejectsBadSets) {
    Graph g = split_fixture_graph();
    EXPECT_THROW(split_U(g, {0, 0}), InvalidArgument);
    EXPECT_THROW(split_U(g, {8}), InvalidArgument);
}

TEST(SplitU, EmptyDeltaStarIsReported) {
    Graph g(4, {{0, 1}, {1, 2}, {1, 3}});
    EXPECT_THROW(split_U(g, {0}), PreconditionFailed);
}

TEST(SplitU, RecoversPphiInAnyOrder) {
    ReductionArtifacts art = build_Pphi(worked_formula());
    TrapezoidInstance gi = build_Gphi(art);
    TrapezoidInstance h = build_Hphi(gi.graph, gi.rep);
    std::vector<Vertex> order = iota_vec(art.m());
    std::mt19937_64 rng(11);
    for (int round = 0; round < 4; ++round) {
        LineCertificate c = split_U_line_certificate(h.graph, h.rep, order);
        ASSERT_EQ(c.split.graph.n(), 2 * art.m());
        EXPECT_TRUE(labeled_equal(c.split.graph, art.pphi, derivative_lines(art, c))) << "round " << round;
        EXPECT_EQ(c.split.graph, split_U(h.graph, order).graph);
        std::shuffle(order.begin(), order.end(), rng);
    }
}

TEST(SplitU, NaturalOrderMatchesDerivativeMap) {
    ReductionArtifacts art = build_Pphi(worked_formula());
    TrapezoidInstance gi = build_Gphi(art);
    TrapezoidInstance h = build_Hphi(gi.graph, gi.rep);
    LineCertificate c = split_U_line_certificate(h.graph, h.rep, iota_vec(art.m()));
    EXPECT_TRUE(labeled_equal(c.split.graph, art.pphi, derivative_to_line(art, c.first_is_left)));
}

TEST(RestrictedLines, LiteralLinesCanFail) {
    TrapezoidRep r = frozen_rep();
    Graph g = graph_of(r);
    SplitResult s = split_U(g, {0, 3});
    EXPECT_EQ(s.graph.edge_count(), 0u);
    PermutationRep lines = restricted_line_rep(r, {0, 3});
    std::vector<Edge> want{{0, 2}, {1, 2}, {1, 3}};
    EXPECT_EQ(graph_of(lines).edges(), want);
    EXPECT_FALSE(verify_rep(lines, s.graph));
}

TEST(LineCertificate, RepairsTheFrozenCase) {
    TrapezoidRep r = frozen_rep();
    Graph g = graph_of(r);
    LineCertificate c = split_U_line_certificate(g, r, {0, 3});
    EXPECT_TRUE(verify_rep(c.lines, c.split.graph));
    EXPECT_TRUE(is_acyclic_wrt_pairs(c.lines, c.pairs).acyclic);
}

TEST(LineCertificate, RandomParallelogramReps) {
    std::mt19937_64 rng(5);
    int runs = 0;
    // delta* is rare in small random reps, so search wide
    for (std::uint64_t seed = 0; seed < 3000 && runs < 40; ++seed) {
        TrapezoidRep r = random_parallelogram_rep(9, seed).traps();
        Graph g = graph_of(r);
        std::vector<Vertex> U;
        for (Vertex v = 0; v < g.n(); ++v)
            if (has_delta_star(g, v) && rng() % 2) U.push_back(v);
        if (U.empty()) continue;
        LineCertificate c;
        try {
            c = split_U_line_certificate(g, r, U);
        } catch (const PreconditionFailed&) {
            continue;
        }
        ++runs;
        EXPECT_TRUE(verify_rep(c.lines, c.split.graph)) << "seed " << seed;
        EXPECT_TRUE(is_acyclic_wrt_pairs(c.lines, c.pairs).acyclic) << "seed " << seed;
        EXPECT_TRUE(is_permutation_graph(c.split.graph)) << "seed " << seed;
    }
    EXPECT_GT(runs, 10);
}

TEST(LineCertificate, RejectsForeignRep) {
    EXPECT_THROW(split_U_line_certificate(Graph(6), frozen_rep(), {0}), InvalidArgument);
}
