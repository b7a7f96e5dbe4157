#include <gtest/gtest.h>

#include "tolrec/error.hpp"
#include "tolrec/generators.hpp"
#include "tolrec/geometry.hpp"
#include "tolrec/orientation.hpp"
#include "tolrec/reduction.hpp"

using namespace tolrec;

namespace {

Rational q(const char* s) { return parse_rational(s); }

Trapezoid trap(long a, long b, long c, long d) { return {Rational(a), Rational(b), Rational(c), Rational(d)}; }

ToleranceInterval interval(long l, long r, long t) { return {Rational(l), Rational(r), Rational(t)}; }

}  // namespace

TEST(Validate, PermutationRepNeedsDistinctRailCoordinates) {
    EXPECT_NO_THROW(validate(PermutationRep{{{q("0"), q("1")}, {q("1"), q("0")}}}));
    EXPECT_THROW(validate(PermutationRep{{{q("0"), q("1")}, {q("0"), q("2")}}}), InvalidArgument);
    EXPECT_THROW(validate(PermutationRep{{{q("0"), q("1")}, {q("2"), q("1")}}}), InvalidArgument);
}

TEST(Validate, TrapezoidRep) {
    EXPECT_THROW(validate(TrapezoidRep{{trap(1, 1, 0, 2)}}), InvalidArgument);
    EXPECT_THROW(validate(TrapezoidRep{{trap(2, 1, 0, 2)}}), InvalidArgument);
    EXPECT_THROW(validate(TrapezoidRep{{trap(0, 2, 0, 2), trap(2, 3, 5, 6)}}), InvalidArgument);
    EXPECT_NO_THROW(validate(TrapezoidRep{{trap(0, 2, 0, 2), trap(1, 3, 5, 6)}}));
}

TEST(Validate, ParallelogramInvariant) {
    EXPECT_NO_THROW(ParallelogramRep(TrapezoidRep{{trap(3, 10, 0, 7)}}));
    EXPECT_THROW(ParallelogramRep(TrapezoidRep{{trap(3, 10, 0, 8)}}), InvalidArgument);
}

TEST(Validate, ToleranceRep) {
    EXPECT_THROW(validate(ToleranceRep{{interval(0, 5, 0)}}), InvalidArgument);
    EXPECT_THROW(validate(ToleranceRep{{interval(5, 5, 1)}}), InvalidArgument);
    EXPECT_TRUE((ToleranceRep{{interval(0, 5, 5)}}.bounded()));
    EXPECT_FALSE((ToleranceRep{{interval(0, 5, 6)}}.bounded()));
}

TEST(PermutationGraph, ParallelLinesDoNotCross) {
    PermutationRep r{{{q("0"), q("3")}, {q("1"), q("4")}}};
    EXPECT_EQ(graph_of(r).edge_count(), 0u);
}

TEST(PermutationGraph, OppositeOrdersCross) {
    PermutationRep r{{{q("0"), q("1")}, {q("1"), q("0")}}};
    EXPECT_TRUE(graph_of(r).has_edge(0, 1));
}

TEST(TrapezoidGraph, DisjointSlots) {
    TrapezoidRep r{{trap(0, 1, 0, 1), trap(2, 3, 2, 3)}};
    EXPECT_EQ(graph_of(r).edge_count(), 0u);
    EXPECT_TRUE(left_of(r.traps[0], r.traps[1]));
    EXPECT_FALSE(left_of(r.traps[1], r.traps[0]));
}

TEST(TrapezoidGraph, Containment) {
    TrapezoidRep r{{trap(0, 3, 0, 3), trap(1, 2, 1, 2)}};
    EXPECT_TRUE(graph_of(r).has_edge(0, 1));
}

TEST(TrapezoidGraph, CrossingSides) {
    TrapezoidRep r{{trap(0, 1, 2, 3), trap(2, 3, 0, 1)}};
    EXPECT_FALSE(left_of(r.traps[0], r.traps[1]));
    EXPECT_FALSE(left_of(r.traps[1], r.traps[0]));
    EXPECT_TRUE(graph_of(r).has_edge(0, 1));
}

TEST(TrapezoidGraph, LinesAsDegenerateTrapezoids) {
    Line x{q("0"), q("2")}, y{q("1"), q("0")};
    auto g = intersection_graph({as_trapezoid(x), as_trapezoid(y)});
    EXPECT_EQ(g.has_edge(0, 1), lines_cross(x, y));
    EXPECT_TRUE(g.has_edge(0, 1));
}

TEST(ToleranceGraph, OverlapBelowTolerance) {
    ToleranceRep r{{interval(0, 10, 3), interval(8, 20, 5)}};
    EXPECT_FALSE(graph_of(r).has_edge(0, 1));
}

TEST(ToleranceGraph, OverlapReachesTolerance) {
    ToleranceRep r{{interval(0, 10, 3), interval(5, 20, 5)}};
    EXPECT_TRUE(graph_of(r).has_edge(0, 1));
}

TEST(ToleranceGraph, IdenticalIntervals) {
    ToleranceRep r{{interval(2, 9, 7), interval(2, 9, 4)}};
    EXPECT_TRUE(graph_of(r).has_edge(0, 1));
}

TEST(Flips, DoubleFlipIsIdentity) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        TrapezoidRep r = random_trapezoid_rep(6, seed);
        EXPECT_EQ(vertical_flip(vertical_flip(r)), r);
        EXPECT_EQ(horizontal_flip(horizontal_flip(r)), r);
        PermutationRep p = split_lines_rep(r).lines;
        EXPECT_EQ(vertical_flip(vertical_flip(p)), p);
        EXPECT_EQ(horizontal_flip(horizontal_flip(p)), p);
    }
}

TEST(Flips, PreserveTheGraph) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        TrapezoidRep r = random_trapezoid_rep(7, seed);
        Graph g = graph_of(r);
        EXPECT_EQ(graph_of(vertical_flip(r)), g) << "seed " << seed;
        EXPECT_EQ(graph_of(horizontal_flip(r)), g) << "seed " << seed;
        ParallelogramRep p = random_parallelogram_rep(7, seed);
        EXPECT_EQ(graph_of(vertical_flip(p)), graph_of(p));
        EXPECT_EQ(graph_of(horizontal_flip(p)), graph_of(p));
    }
}

TEST(BlockFlip, InvolutionAndGraphOnReductionBlocks) {
    ReductionArtifacts art = build_Pphi(parse_cnf("1 2 3 0\n2 3 4 0\n1 2 4 0\n"));
    Graph g = graph_of(art.rp);
    for (const auto& b : art.blocks) {
        PermutationRep f = block_horizontal_flip(art.rp, b);
        EXPECT_EQ(graph_of(f), g);
        EXPECT_EQ(block_horizontal_flip(f, b), art.rp);
    }
}

TEST(BlockFlip, RejectsInterleavedBlocks) {
    PermutationRep r{{{q("0"), q("0")}, {q("1"), q("1")}, {q("2"), q("2")}}};
    EXPECT_THROW(block_horizontal_flip(r, {0, 2}), InvalidArgument);
    EXPECT_NO_THROW(block_horizontal_flip(r, {0, 1}));
}

TEST(ToleranceConversion, StatedFormula) {
    ParallelogramRep p = tolerance_to_parallelogram(ToleranceRep{{interval(0, 10, 3)}});
    EXPECT_EQ(p.traps().traps[0], trap(3, 10, 0, 7));
}

TEST(ToleranceConversion, ExtremeToleranceIsPerturbed) {
    // t = |I| would give a zero-width top side.
    ToleranceRep r{{interval(0, 10, 10), interval(5, 15, 4), interval(12, 20, 8)}};
    ParallelogramRep p = tolerance_to_parallelogram(r);
    EXPECT_TRUE(verify_rep(p, graph_of(r)));
    for (const auto& t : p.traps().traps) {
        EXPECT_LT(t.a, t.b);
        EXPECT_TRUE(is_parallelogram(t));
    }
}

TEST(ToleranceConversion, TiedEndpointsArePerturbed) {
    ToleranceRep r{{interval(0, 10, 2), interval(0, 10, 5), interval(10, 14, 1), interval(3, 10, 2)}};
    ParallelogramRep p = tolerance_to_parallelogram(r);
    EXPECT_TRUE(verify_rep(p, graph_of(r)));
}

TEST(ToleranceConversion, FarApartIntervals) {
    ToleranceRep r{{interval(0, 5, 2), interval(100, 105, 2)}};
    ParallelogramRep p = tolerance_to_parallelogram(r);
    EXPECT_EQ(graph_of(p).edge_count(), 0u);
    EXPECT_TRUE(left_of(p.traps().traps[0], p.traps().traps[1]));
}

TEST(ToleranceConversion, RejectsUnbounded) {
    EXPECT_THROW(tolerance_to_parallelogram(ToleranceRep{{interval(0, 5, 9)}}), InvalidArgument);
}

TEST(ToleranceConversion, SingleParallelogramBack) {
    ParallelogramRep p(TrapezoidRep{{trap(3, 10, 0, 7)}});
    ToleranceRep t = parallelogram_to_tolerance(p);
    ASSERT_EQ(t.size(), 1);
    EXPECT_TRUE(t.bounded());
}

TEST(ToleranceConversion, RandomRoundTrips) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        ToleranceRep r = random_bounded_tolerance_rep(1 + static_cast<int>(seed % 12), seed);
        Graph g = graph_of(r);
        ParallelogramRep p = tolerance_to_parallelogram(r);
        EXPECT_EQ(graph_of(p), g) << "seed " << seed;
        EXPECT_EQ(graph_of(parallelogram_to_tolerance(p)), g) << "seed " << seed;
    }
}

TEST(Renormalize, IdempotentAndGraphPreserving) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        TrapezoidRep r = random_trapezoid_rep(8, seed);
        TrapezoidRep n1 = renormalize(r);
        EXPECT_EQ(renormalize(n1), n1);
        EXPECT_EQ(graph_of(n1), graph_of(r));
    }
}

TEST(Renormalize, ReductionRepUsesSmallIntegers) {
    ReductionArtifacts art = build_Pphi(parse_cnf("1 2 3 0\n2 3 4 0\n1 2 4 0\n"));
    TrapezoidInstance g = build_Gphi(art);
    TrapezoidInstance h = build_Hphi(g.graph, g.rep);
    const Rational bound = 2 * 7 * art.m();
    for (const auto& t : h.rep.traps)
        for (const auto& x : {t.a, t.b, t.c, t.d}) {
            EXPECT_EQ(x.get_den(), 1);
            EXPECT_GE(x, 1);
            EXPECT_LE(x, bound);
        }
}

TEST(MinRailGap, Basic) {
    TrapezoidRep r{{trap(0, 4, 0, 3), trap(1, 6, 7, 8)}};
    EXPECT_EQ(*min_rail_gap(r), 1);
    EXPECT_FALSE(min_rail_gap(PermutationRep{{{q("0"), q("0")}}}).has_value());
}

TEST(VerifyRep, OwnGraphAndRemovedEdge) {
    TrapezoidRep r = random_trapezoid_rep(8, 3);
    Graph g = graph_of(r);
    EXPECT_TRUE(verify_rep(r, g));
    ASSERT_GT(g.edge_count(), 0u);
    Edge e = g.edges()[0];
    g.remove_edge(e.first, e.second);
    VerifyResult v = verify_rep(r, g);
    EXPECT_FALSE(v.ok);
    EXPECT_EQ(*v.mismatch, e);
    EXPECT_TRUE(v.edge_in_rep);
}

TEST(VerifyRep, SizeMismatchThrows) {
    EXPECT_THROW(verify_rep(random_trapezoid_rep(3, 1), Graph(4)), InvalidArgument);
}

TEST(VerifyRep, ReductionRepRealizesH) {
    ReductionArtifacts art = build_Pphi(parse_cnf("1 2 3 0\n"));
    TrapezoidInstance g = build_Gphi(art);
    EXPECT_TRUE(verify_rep(g.rep, g.graph));
    TrapezoidInstance h = build_Hphi(g.graph, g.rep);
    EXPECT_TRUE(verify_rep(h.rep, h.graph));
}
