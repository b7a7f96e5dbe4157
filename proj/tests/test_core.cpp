#include <gtest/gtest.h>

#include "tolrec/error.hpp"
#include "tolrec/graph.hpp"
#include "tolrec/oracles.hpp"
#include "tolrec/rational.hpp"

using namespace tolrec;

namespace {

Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }
Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }
Graph c5() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}); }

// ids in the split fixture
constexpr Vertex U = 0, U1 = 1, U2 = 2, U3 = 3, V1 = 4, V2 = 5, V3 = 6, V4 = 7;

}  // namespace

TEST(Graph, RejectsSelfLoopsDuplicatesAndOutOfRange) {
    EXPECT_THROW(Graph(3, {{0, 0}}), InvalidArgument);
    EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InvalidArgument);
    EXPECT_THROW(Graph(3, {{0, 3}}), InvalidArgument);
    EXPECT_THROW(Graph(-1), InvalidArgument);
}

TEST(Graph, AddRemoveEdge) {
    Graph g(4);
    g.add_edge(2, 0);
    EXPECT_TRUE(g.has_edge(0, 2));
    EXPECT_TRUE(g.has_edge(2, 0));
    EXPECT_EQ(g.edge_count(), 1u);
    g.remove_edge(0, 2);
    EXPECT_EQ(g.edge_count(), 0u);
    EXPECT_TRUE(g.adj(0).empty());
}

TEST(Graph, EdgesAreSortedPairs) {
    Graph g(4, {{3, 1}, {2, 0}, {0, 1}});
    std::vector<Edge> want{{0, 1}, {0, 2}, {1, 3}};
    EXPECT_EQ(g.edges(), want);
}

TEST(Neighborhood, Triangle) {
    EXPECT_EQ(neighborhood(triangle(), 0), (VertexSet{1, 2}));
    EXPECT_EQ(closed_neighborhood(triangle(), 0), (VertexSet{0, 1, 2}));
}

TEST(Neighborhood, FixtureVertexU) {
    EXPECT_EQ(neighborhood(split_fixture_graph(), U), (VertexSet{U1, U2, U3}));
}

TEST(Neighborhood, EdgelessIsEmpty) {
    Graph g(4);
    for (Vertex v = 0; v < 4; ++v) EXPECT_TRUE(neighborhood(g, v).empty());
}

TEST(Neighborhood, SetNeighborhoodExcludesTheSet) {
    EXPECT_EQ(set_neighborhood(path3(), {0, 1}), (VertexSet{2}));
    EXPECT_EQ(set_neighborhood(split_fixture_graph(), {V2}), (VertexSet{U1, U3}));
}

TEST(Components, FixtureGivesFourSingletons) {
    auto c = components(split_fixture_graph(), {V1, V2, V3, V4});
    std::vector<VertexSet> want{{V1}, {V2}, {V3}, {V4}};
    EXPECT_EQ(c, want);
}

TEST(Components, PathIsConnected) {
    auto c = components(path3(), all_vertices(path3()));
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0], (VertexSet{0, 1, 2}));
}

TEST(Components, EmptyRestriction) { EXPECT_TRUE(components(path3(), {}).empty()); }

TEST(Components, OrderedBySmallestMember) {
    Graph g(6, {{5, 0}, {1, 4}, {2, 3}});
    auto c = components(g, all_vertices(g));
    std::vector<VertexSet> want{{0, 5}, {1, 4}, {2, 3}};
    EXPECT_EQ(c, want);
}

TEST(InducedSubgraph, TriangleOnTwoVertices) {
    auto s = induced_subgraph(triangle(), {0, 2});
    EXPECT_EQ(s.graph.n(), 2);
    EXPECT_TRUE(s.graph.has_edge(0, 1));
    EXPECT_EQ(s.to_parent, (std::vector<Vertex>{0, 2}));
}

TEST(InducedSubgraph, FullSetIsACopy) {
    Graph g = split_fixture_graph();
    EXPECT_EQ(induced_subgraph(g, all_vertices(g)).graph, g);
}

TEST(InducedSubgraph, FixtureStar) {
    auto s = induced_subgraph(split_fixture_graph(), {U1, V1, V2});
    // U1 -> 0, V1 -> 1, V2 -> 2
    std::vector<Edge> want{{0, 1}, {0, 2}};
    EXPECT_EQ(s.graph.edges(), want);
}

TEST(Complement, K3IsEdgeless) { EXPECT_EQ(complement(triangle()).edge_count(), 0u); }

TEST(Complement, Involution) {
    Graph g = split_fixture_graph();
    EXPECT_EQ(complement(complement(g)), g);
}

TEST(Complement, C5IsSelfComplementary) {
    // 0-2-4-1-3-0 is the complement cycle; map it back onto 0-1-2-3-4.
    Graph cc = complement(c5());
    std::vector<Vertex> bij{0, 3, 1, 4, 2};
    EXPECT_TRUE(labeled_equal(c5(), cc, bij));
}

TEST(LabeledEqual, Basics) {
    Graph g = path3();
    EXPECT_TRUE(labeled_equal(g, g, {0, 1, 2}));
    Graph e(2, {{0, 1}});
    EXPECT_TRUE(labeled_equal(e, e, {1, 0}));
    EXPECT_FALSE(labeled_equal(triangle(), path3(), {0, 1, 2}));
    EXPECT_FALSE(labeled_equal(path3(), path3(), {1, 0, 2}));
}

TEST(LabeledEqual, RejectsNonBijection) {
    EXPECT_THROW(labeled_equal(path3(), path3(), {0, 0, 2}), InvalidArgument);
}

TEST(SetOps, Basics) {
    VertexSet a{1, 3, 5}, b{3, 4};
    EXPECT_EQ(set_union(a, b), (VertexSet{1, 3, 4, 5}));
    EXPECT_EQ(set_difference(a, b), (VertexSet{1, 5}));
    EXPECT_EQ(set_intersection(a, b), (VertexSet{3}));
    EXPECT_TRUE(contains(a, 5));
    EXPECT_FALSE(contains(a, 4));
    EXPECT_TRUE(is_subset({3}, a));
    EXPECT_EQ(make_set({5, 1, 5, 3}), a);
}

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
    EXPECT_EQ(to_string(parse_rational("7")), "7/1");
    EXPECT_EQ(to_string(parse_rational("-1/3")), "-1/3");
    EXPECT_EQ(to_string(parse_rational("0")), "0/1");
}

TEST(Rational, RejectsGarbage) {
    EXPECT_THROW(parse_rational(""), InvalidArgument);
    EXPECT_THROW(parse_rational("1/0"), InvalidArgument);
    EXPECT_THROW(parse_rational("abc"), InvalidArgument);
    EXPECT_THROW(parse_rational("1.5"), InvalidArgument);
}
