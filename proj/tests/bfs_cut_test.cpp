#include <gtest/gtest.h>

#include "support.hpp"
#include "tkc/bfs_cut.hpp"

namespace tkc {
namespace {

// farness pairs whose value (n-1) S / (r-1)^2 is 2 and 1.2 when n = 3
const Farness two(4, 3);
const Farness onePointTwo(15, 6);

TEST(BfsCut, PathCompletesUnderLooseThreshold) {
    const Graph g = testing::undirected("a b\nb c\n");
    BfsScratch scratch;
    std::vector<CutBoundRecord> log;
    const CutResult r =
        bfsCut(g, 0, Measure::Closeness, computeReach(g), {two, std::nullopt}, scratch, &log);
    EXPECT_FALSE(r.pruned);
    EXPECT_EQ(r.farness, Farness(3, 3));
    EXPECT_DOUBLE_EQ(r.farness.value(3), 1.5);
    ASSERT_GE(log.size(), 2u);
    EXPECT_EQ(log[1].d, 1u);
    EXPECT_DOUBLE_EQ(log[1].lower.value(3), 1.5);
}

TEST(BfsCut, PathPrunedUnderTightThreshold) {
    const Graph g = testing::undirected("a b\nb c\n");
    BfsScratch scratch;
    const CutResult r =
        bfsCut(g, 0, Measure::Closeness, computeReach(g), {onePointTwo, std::nullopt}, scratch);
    EXPECT_TRUE(r.pruned);
    EXPECT_DOUBLE_EQ(r.farness.value(3), 1.5);
    EXPECT_GT(r.farness, onePointTwo);
}

TEST(BfsCut, EqualBoundDoesNotPrune) {
    // ties with the threshold must survive so that they can be reported
    const Graph g = testing::undirected("a b\nb c\n");
    BfsScratch scratch;
    const CutResult r =
        bfsCut(g, 0, Measure::Closeness, computeReach(g), {Farness(3, 3), std::nullopt}, scratch);
    EXPECT_FALSE(r.pruned);
}

TEST(BfsCut, NoOutgoingArcs) {
    const Graph g = testing::directed("a b\n");
    BfsScratch scratch(2);
    const CutResult r =
        bfsCut(g, 1, Measure::Harmonic, computeReach(g), {std::nullopt, 5.0}, scratch);
    EXPECT_FALSE(r.pruned);
    EXPECT_TRUE(r.farness.isInfinite());
    EXPECT_EQ(r.harmonic, 0.0);
    EXPECT_EQ(r.visitedArcs, 0u);
}

TEST(BfsCut, UnboundedThresholdIsExact) {
    for (const auto &[name, g] : testing::randomCorpus(40, 5, 150, 17)) {
        const testing::Oracle oracle(g);
        const ReachInfo reach = computeReach(g);
        BfsScratch scratch(g.numberOfNodes());
        count degreeSum = 0;
        for (node v = 0; v < g.numberOfNodes(); ++v) {
            const CutResult c = bfsCut(g, v, Measure::Closeness, reach, {}, scratch);
            const CutResult h = bfsCut(g, v, Measure::Harmonic, reach, {}, scratch);
            EXPECT_FALSE(c.pruned);
            EXPECT_EQ(c.farness, oracle.farness(v)) << name;
            EXPECT_EQ(h.harmonic, oracle.harmonic(v)) << name;
            degreeSum = 0;
            for (node w = 0; w < g.numberOfNodes(); ++w)
                if (oracle.dist(v, w) != testing::Oracle::inf)
                    degreeSum += g.degree(w);
            EXPECT_EQ(c.visitedArcs, g.degree(v) == 0 ? 0 : degreeSum) << name;
        }
    }
}

TEST(BfsCut, BoundsAreSoundAndPrunesAreCorrect) {
    for (const auto &[name, g] : testing::randomCorpus(40, 5, 150, 19)) {
        const testing::Oracle oracle(g);
        const ReachInfo reach = computeReach(g);
        BfsScratch scratch(g.numberOfNodes());
        std::vector<CutBoundRecord> log;
        for (node v = 0; v < g.numberOfNodes(); ++v) {
            log.clear();
            bfsCut(g, v, Measure::Closeness, reach, {}, scratch, &log);
            for (const auto &b : log)
                EXPECT_LE(b.lower, oracle.farness(v)) << name << " node " << v << " d " << b.d;
            log.clear();
            bfsCut(g, v, Measure::Harmonic, reach, {}, scratch, &log);
            for (const auto &b : log)
                EXPECT_GE(b.upper + 1e-9, oracle.harmonic(v)) << name << " node " << v;

            // thresholds taken from other nodes' true scores
            const node u = (v * 7 + 3) % g.numberOfNodes();
            const CutResult c = bfsCut(g, v, Measure::Closeness, reach,
                                       {oracle.farness(u), std::nullopt}, scratch);
            if (c.pruned)
                EXPECT_GT(oracle.farness(v), oracle.farness(u)) << name;
            else
                EXPECT_EQ(c.farness, oracle.farness(v)) << name;
            const CutResult h = bfsCut(g, v, Measure::Harmonic, reach,
                                       {std::nullopt, oracle.harmonic(u)}, scratch);
            if (h.pruned)
                EXPECT_LT(oracle.harmonic(v), oracle.harmonic(u) - 1e-9) << name;
            else
                EXPECT_EQ(h.harmonic, oracle.harmonic(v)) << name;
        }
    }
}

TEST(BfsCut, ScratchIsLeftClean) {
    const Graph g = testing::pathGraph(30);
    const ReachInfo reach = computeReach(g);
    BfsScratch scratch(30);
    bfsCut(g, 0, Measure::Closeness, reach, {Farness(1, 30), std::nullopt}, scratch);
    EXPECT_TRUE(scratch.queue.empty());
    for (auto d : scratch.dist)
        EXPECT_EQ(d, unreached);
}

} // namespace
} // namespace tkc
