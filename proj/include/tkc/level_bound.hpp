#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tkc/bfs.hpp"
#include "tkc/farness.hpp"
#include "tkc/graph.hpp"
#include "tkc/reach.hpp"

namespace tkc {

/**
 * Level sizes around a source s and the derived lower bounds L(i) on the sum
 * of distances of a node at level i (before its degree correction).
 *
 * Undirected: L(i) = 2 * sum_{|j-i|<=1} G_j + sum_{|j-i|>1} G_j |j-i| - 2 over
 * levels j >= 1. Directed: only levels above i+1 can be pushed away, so
 * L(i) = 2 * sum_{j<=i+1} G_j + sum_{j>i+1} G_j (j-i) - 2 over levels j >= 0.
 */
class LevelProfile {
public:
    /// levelCounts[d] = number of nodes at distance d; levelCounts[0] = 1.
    LevelProfile(std::vector<count> levelCounts, bool directed);

    std::uint32_t maxDistance() const noexcept { return maxD_; }
    bool isDirected() const noexcept { return directed_; }

    /// Level size as seen by the bound (0 outside [first level, maxD]).
    count gamma(std::int64_t i) const;
    /// sum of gamma(j) for j <= i.
    count cumLeq(std::int64_t i) const;
    /// sum of gamma(j) for j > i.
    count cumGt(std::int64_t i) const;

    /// L(i) evaluated from its definition, O(maxD).
    std::int64_t directBound(std::uint32_t i) const;
    /// L(i) for every i in [0, maxD], computed by the level-to-level
    /// recurrence after one direct evaluation.
    const std::vector<std::int64_t> &bounds() const noexcept { return bounds_; }

private:
    std::vector<count> gamma_;
    std::vector<count> prefix_; // prefix_[i] = sum of gamma(j) for 0 <= j <= i
    std::vector<std::int64_t> bounds_;
    std::uint32_t maxD_ = 0;
    bool directed_ = false;
};

/**
 * Farness lower bounds for nodes reached by a completed BFS from s: a node v
 * at level i gets (L(i) - deg(v)) with r = r(s). Directed graphs only bound
 * nodes in the strongly connected component of s. s itself is skipped.
 *
 * order and dist are the visit order and distances of that BFS.
 */
std::vector<std::pair<node, Farness>> levelLowerBounds(const Graph &g, node s,
                                                       const std::vector<node> &order,
                                                       const std::vector<std::uint32_t> &dist,
                                                       const std::vector<count> &levelCounts,
                                                       const ReachInfo &reach);

/// Same, running its own BFS.
std::vector<std::pair<node, Farness>> levelLowerBounds(const Graph &g, node s,
                                                       const ReachInfo &reach);

} // namespace tkc
