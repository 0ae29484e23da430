#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tkc/bfs.hpp"
#include "tkc/farness.hpp"
#include "tkc/graph.hpp"
#include "tkc/reach.hpp"

namespace tkc {

/// Current k-th best score. An empty threshold never prunes.
struct CutThreshold {
    std::optional<Farness> farness; // closeness: prune when the bound exceeds it
    std::optional<double> harmonic; // harmonic: prune when the bound falls below it
};

struct CutResult {
    bool pruned = false;
    /// Exact values when the traversal completed; otherwise the bound that
    /// triggered the cut (farness lower bound or harmonic upper bound).
    Farness farness = Farness::infinity();
    double harmonic = 0.0;
    count sumDist = 0;
    count reached = 1;
    std::vector<count> levelCounts{1};
    count visitedArcs = 0;
};

/// One evaluation of the running bound: after level d, possibly refined by
/// arcs of level d that closed on already-visited nodes.
struct CutBoundRecord {
    std::uint32_t d = 0;
    Farness lower;
    double upper = 0.0;
};

/**
 * BFS from s that stops as soon as s provably cannot reach the threshold.
 *
 * After level d the next level has at most u nodes, where u sums the
 * degrees of level d (minus the parent arc when undirected). Every arc that
 * closes on a visited node lowers u by one. The remaining r - n_d nodes sit
 * at distance d+1 (at most u of them) or more, which bounds the sum of
 * distances from below. With an interval for r the farness bound is the
 * smaller of the values at the two endpoints.
 *
 * Nodes with no outgoing arc return immediately with infinite farness and
 * harmonic centrality 0. scratch must be clear on entry and is clear on
 * return.
 */
CutResult bfsCut(const Graph &g, node s, Measure m, const ReachInfo &reach,
                 const CutThreshold &threshold, BfsScratch &scratch,
                 std::vector<CutBoundRecord> *log = nullptr);

} // namespace tkc
