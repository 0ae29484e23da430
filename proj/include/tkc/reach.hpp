#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tkc/graph.hpp"

namespace tkc {

/// Node-weighted condensation of a directed graph into its strongly
/// connected components. Component ids follow a topological order: every DAG
/// arc goes from a smaller id to a larger one.
struct SccDag {
    std::vector<std::uint32_t> compOf;
    std::vector<count> weight;
    std::vector<std::vector<std::uint32_t>> successors; // deduplicated, sorted
    std::vector<std::uint32_t> topoOrder;
    std::uint32_t biggest = 0; // heaviest component, smallest id on ties

    std::size_t numberOfComponents() const noexcept { return weight.size(); }
};

SccDag sccCondensation(const Graph &g);

enum class ReachMode { UndirectedExact, StronglyConnectedExact, DirectedInterval };

/**
 * Number of nodes reachable from each node (itself included), exact or as an
 * interval [alpha, omega]. component holds the connected component (undirected)
 * or strongly connected component (directed) of every node.
 */
struct ReachInfo {
    ReachMode mode = ReachMode::UndirectedExact;
    std::optional<std::vector<count>> exact;
    std::vector<count> alpha;
    std::vector<count> omega;
    std::vector<std::uint32_t> component;

    bool isExact(node v) const { return alpha[v] == omega[v]; }
};

/// Component sizes of an undirected graph. Throws std::invalid_argument on a
/// directed graph.
ReachInfo exactReachUndirected(const Graph &g);

struct AlphaOmegaOptions {
    /// Resolve one component exactly and tighten the bounds of its ancestors.
    bool usePivot = true;
    /// Component to resolve; the heaviest one by default.
    std::optional<std::uint32_t> pivot;
};

/// Reachability bounds by dynamic programming over the condensation, in
/// reverse topological order.
ReachInfo alphaOmega(const SccDag &dag, const AlphaOmegaOptions &options = {});

/// Picks the right mode for g: exact component sizes when undirected, n when
/// strongly connected, [alpha, omega] otherwise.
ReachInfo computeReach(const Graph &g);

} // namespace tkc
