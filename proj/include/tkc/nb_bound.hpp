#pragma once

#include <cstdint>
#include <vector>

#include "tkc/exact.hpp"
#include "tkc/farness.hpp"
#include "tkc/graph.hpp"
#include "tkc/reach.hpp"

namespace tkc {

/**
 * Exact closeness of every node of a tree from per-level node counts: the
 * count at distance k from s is derived from the counts at distance k-1 of
 * its neighbours, so all nodes advance one level per sweep. levels, when
 * given, receives the number of sweeps.
 *
 * Throws std::invalid_argument unless g is undirected, connected and has
 * n - 1 edges.
 */
CentralityTable treeCloseness(const Graph &g, std::uint32_t *levels = nullptr);

struct NbBounds {
    std::vector<Farness> farness; // lower bound on the farness of each node
    std::vector<double> harmonic; // upper bound on the harmonic centrality
    std::vector<std::uint32_t> finishLevel; // level at which each node stopped
    std::uint32_t levels = 0;               // sweeps over the graph
};

/// Per-node upper bounds on the level sizes as used by nbLowerBounds, each
/// already clamped to n. gamma[v][0] = 1.
struct NbTrace {
    std::vector<std::vector<count>> gamma;
};

/**
 * Neighborhood-based bounds. The size of level k around s is bounded by the
 * number of non-backtracking walks of length k from s (undirected) or of all
 * walks of length k (directed). Summing k times these sizes until the
 * reachable count is exhausted lower-bounds the sum of distances.
 *
 * With an interval [alpha, omega] for the reachable count, the farness bound
 * is the minimum over the endpoints and the level prefix sums strictly inside
 * the interval; the other values of r cannot be minima.
 */
NbBounds nbLowerBounds(const Graph &g, const ReachInfo &reach, NbTrace *trace = nullptr,
                       int threads = 1);

} // namespace tkc
