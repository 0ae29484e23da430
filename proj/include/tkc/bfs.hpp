#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "tkc/graph.hpp"

namespace tkc {

inline constexpr std::uint32_t unreached = std::numeric_limits<std::uint32_t>::max();

struct BfsResult {
    node source = none;
    std::vector<std::uint32_t> dist;  // unreached for nodes not (yet) visited
    std::vector<node> order;          // visit sequence, source first
    std::vector<count> levelCounts;   // levelCounts[d] = number of nodes at distance d
    count reached = 0;
    count visitedArcs = 0;
    bool truncated = false;

    std::uint32_t eccentricity() const {
        return levelCounts.empty() ? 0 : static_cast<std::uint32_t>(levelCounts.size() - 1);
    }
    count sumOfDistances() const;
};

enum class LevelAction { Continue, Stop };

/// Invoked once per level d, as soon as every node at distance <= d is known
/// and before the adjacency lists of level d are scanned.
using LevelCallback = std::function<LevelAction(std::uint32_t d, const BfsResult &partial)>;

BfsResult bfs(const Graph &g, node source, const LevelCallback &onLevelComplete = {});

/**
 * Reusable per-thread buffers for the traversal-heavy routines. The distance
 * array is left all-unreached between uses.
 */
class BfsScratch {
public:
    explicit BfsScratch(std::size_t n = 0) : dist(n, unreached) { queue.reserve(n); }

    void ensure(std::size_t n) {
        if (dist.size() < n)
            dist.resize(n, unreached);
    }
    /// Resets the distances of every node currently in the queue.
    void clear() {
        for (node u : queue)
            dist[u] = unreached;
        queue.clear();
    }

    std::vector<std::uint32_t> dist;
    std::vector<node> queue;
};

/// Level counts, sum of distances and arcs scanned by one full traversal.
struct LevelSummary {
    std::vector<count> levelCounts;
    count sumOfDistances = 0;
    count reached = 0;
    count visitedArcs = 0;
};

/// Full BFS that leaves the visit order in scratch.queue and the distances in
/// scratch.dist; the caller must call scratch.clear() afterwards.
LevelSummary bfsLevels(const Graph &g, node source, BfsScratch &scratch);

/// Harmonic centrality from level counts, summed by increasing distance so
/// that every code path produces bit-identical values.
double harmonicFromLevels(const std::vector<count> &levelCounts);

} // namespace tkc
