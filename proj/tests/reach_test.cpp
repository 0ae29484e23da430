#include <gtest/gtest.h>

#include "support.hpp"
#include "tkc/reach.hpp"

namespace tkc {
namespace {

TEST(SccCondensation, TwoCycleIsOneComponent) {
    const SccDag dag = sccCondensation(testing::directed("u v\nv u\n"));
    ASSERT_EQ(dag.numberOfComponents(), 1u);
    EXPECT_EQ(dag.weight[0], 2u);
    EXPECT_TRUE(dag.successors[0].empty());
}

TEST(SccCondensation, ChainGivesThreeComponents) {
    const Graph g = testing::directed("u v\nv w\n");
    const SccDag dag = sccCondensation(g);
    ASSERT_EQ(dag.numberOfComponents(), 3u);
    EXPECT_EQ(dag.compOf[0], 0u);
    EXPECT_EQ(dag.compOf[1], 1u);
    EXPECT_EQ(dag.compOf[2], 2u);
}

TEST(SccCondensation, CycleFeedingSink) {
    const Graph g = testing::directed("u v\nv u\nv w\n");
    const SccDag dag = sccCondensation(g);
    ASSERT_EQ(dag.numberOfComponents(), 2u);
    const auto uv = dag.compOf[*g.idOf("u")];
    const auto w = dag.compOf[*g.idOf("w")];
    EXPECT_EQ(uv, dag.compOf[*g.idOf("v")]);
    EXPECT_EQ(dag.weight[uv], 2u);
    EXPECT_EQ(dag.weight[w], 1u);
    EXPECT_EQ(dag.successors[uv], std::vector<std::uint32_t>{w});
    EXPECT_EQ(dag.biggest, uv);
}

TEST(SccCondensation, IdsAreTopological) {
    for (const auto &[name, g] : testing::randomCorpus(40, 5, 150, 21)) {
        if (!g.isDirected())
            continue;
        const SccDag dag = sccCondensation(g);
        for (std::uint32_t c = 0; c < dag.numberOfComponents(); ++c)
            for (std::uint32_t d : dag.successors[c])
                EXPECT_LT(c, d) << name;
        const testing::Oracle oracle(g);
        for (node u = 0; u < g.numberOfNodes(); ++u)
            for (node v = 0; v < g.numberOfNodes(); ++v) {
                const bool mutual = oracle.dist(u, v) != testing::Oracle::inf &&
                                    oracle.dist(v, u) != testing::Oracle::inf;
                EXPECT_EQ(mutual, dag.compOf[u] == dag.compOf[v]) << name;
            }
    }
}

TEST(AlphaOmega, ChainOfCycles) {
    // A = {a1, a2} feeds B = {b1, b2, b3}
    const Graph g = testing::directed("a1 a2\na2 a1\na2 b1\nb1 b2\nb2 b3\nb3 b1\n");
    const ReachInfo info = alphaOmega(sccCondensation(g), {false, std::nullopt});
    EXPECT_EQ(info.alpha[*g.idOf("a1")], 5u);
    EXPECT_EQ(info.omega[*g.idOf("a1")], 5u);
    EXPECT_EQ(info.alpha[*g.idOf("b2")], 3u);
}

TEST(AlphaOmega, DiamondWithoutPivot) {
    // two spare nodes keep n above the sum so that the cap at n stays out of the way
    const Graph g = testing::directed("A B\nA C\nB D\nC D\nE F\n");
    const SccDag dag = sccCondensation(g);
    const ReachInfo plain = alphaOmega(dag, {false, std::nullopt});
    const node a = *g.idOf("A");
    EXPECT_EQ(plain.alpha[a], 3u);
    EXPECT_EQ(plain.omega[a], 5u);
}

TEST(AlphaOmega, OmegaIsCappedAtN) {
    const Graph g = testing::directed("A B\nA C\nB D\nC D\n");
    const ReachInfo plain = alphaOmega(sccCondensation(g), {false, std::nullopt});
    EXPECT_EQ(plain.omega[*g.idOf("A")], 4u);

    // a chain of 80 diamonds doubles the path count at every step
    std::string edges;
    for (int i = 0; i < 80; ++i) {
        const std::string s = "s" + std::to_string(i), t = "s" + std::to_string(i + 1);
        edges += s + " l" + std::to_string(i) + "\n" + s + " r" + std::to_string(i) + "\n";
        edges += "l" + std::to_string(i) + " " + t + "\nr" + std::to_string(i) + " " + t + "\n";
    }
    const Graph chain = testing::directed(edges);
    const ReachInfo deep = alphaOmega(sccCondensation(chain), {false, std::nullopt});
    EXPECT_EQ(deep.omega[*chain.idOf("s0")], chain.numberOfNodes());
}

TEST(AlphaOmega, DiamondPivotTightensAncestors) {
    const Graph g = testing::directed("A B\nA C\nB D\nC D\n");
    const SccDag dag = sccCondensation(g);
    const node a = *g.idOf("A");
    // resolving D exactly removes its double count from A's upper bound
    const ReachInfo viaD = alphaOmega(dag, {true, dag.compOf[*g.idOf("D")]});
    EXPECT_EQ(viaD.alpha[a], 3u);
    EXPECT_EQ(viaD.omega[a], 4u);
    // with unit weights the default pivot is the smallest id, A itself
    const ReachInfo byDefault = alphaOmega(dag);
    EXPECT_EQ(byDefault.alpha[a], 4u);
    EXPECT_EQ(byDefault.omega[a], 4u);
}

TEST(AlphaOmega, SoundOnRandomDigraphs) {
    for (const auto &[name, g] : testing::randomCorpus(80, 5, 200, 77)) {
        if (!g.isDirected())
            continue;
        const testing::Oracle oracle(g);
        const SccDag dag = sccCondensation(g);
        for (const AlphaOmegaOptions &opt :
             {AlphaOmegaOptions{}, AlphaOmegaOptions{false, std::nullopt}}) {
            const ReachInfo info = alphaOmega(dag, opt);
            for (node v = 0; v < g.numberOfNodes(); ++v) {
                EXPECT_LE(info.alpha[v], oracle.reach(v)) << name;
                EXPECT_GE(info.omega[v], oracle.reach(v)) << name;
                if (dag.compOf[v] == dag.biggest && opt.usePivot)
                    EXPECT_TRUE(info.isExact(v)) << name;
            }
        }
    }
}

TEST(ComputeReach, PicksMode) {
    EXPECT_EQ(computeReach(testing::pathGraph(4)).mode, ReachMode::UndirectedExact);
    const ReachInfo cyc = computeReach(testing::directed("a b\nb c\nc a\n"));
    EXPECT_EQ(cyc.mode, ReachMode::StronglyConnectedExact);
    EXPECT_EQ(cyc.alpha[0], 3u);
    EXPECT_EQ(computeReach(testing::directed("a b\n")).mode, ReachMode::DirectedInterval);
    EXPECT_THROW(exactReachUndirected(testing::directed("a b\n")), std::invalid_argument);
}

TEST(ComputeReach, UndirectedComponentSizes) {
    const Graph g = testing::undirected("a b\nb c\nd e\nf f\n");
    const ReachInfo info = computeReach(g);
    EXPECT_EQ((*info.exact)[*g.idOf("a")], 3u);
    EXPECT_EQ((*info.exact)[*g.idOf("e")], 2u);
    EXPECT_EQ((*info.exact)[*g.idOf("f")], 1u);
}

} // namespace
} // namespace tkc
