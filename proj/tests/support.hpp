#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tkc/farness.hpp"
#include "tkc/graph.hpp"
#include "tkc/result.hpp"

namespace tkc::testing {

/// All-pairs distances by Floyd-Warshall on the adjacency matrix. Only reads
/// the node count and adjacency lists of the graph.
class Oracle {
public:
    static constexpr std::uint32_t inf = 0xffffffffu;

    explicit Oracle(const Graph &g);

    std::size_t size() const { return n_; }
    std::uint32_t dist(node u, node v) const { return d_[u * n_ + v]; }
    count reach(node v) const;
    count sumOfDistances(node v) const;
    std::uint32_t eccentricity(node v) const; // largest finite distance
    Farness farness(node v) const { return Farness(sumOfDistances(v), reach(v)); }
    double closeness(node v) const { return farness(v).closeness(n_); }
    /// Summed by increasing distance.
    double harmonic(node v) const;
    double score(node v, Measure m) const {
        return m == Measure::Closeness ? closeness(v) : harmonic(v);
    }

private:
    std::size_t n_;
    std::vector<std::uint32_t> d_;
};

/// Distances from s by a plain queue traversal, for graphs too large for
/// Oracle. Oracle::inf marks unreachable nodes.
std::vector<std::uint32_t> plainDistances(const Graph &g, node s);

struct CorpusGraph {
    std::string name;
    Graph graph;
};

/// Erdos-Renyi and preferential-attachment graphs, directed and undirected,
/// sparse enough to be disconnected or dense enough to be connected, with
/// n drawn from [minN, maxN].
std::vector<CorpusGraph> randomCorpus(std::size_t count, std::size_t minN, std::size_t maxN,
                                      std::uint64_t seed);

/// Empty when the two rankings agree (labels, ranks, exact farness pairs,
/// harmonic values within tolerance); otherwise a description of the first
/// difference.
std::string compareRankings(const TopKResult &expected, const TopKResult &actual);

/// Top-k with ties straight from oracle scores.
std::vector<std::string> oracleTopLabels(const Oracle &oracle, const Graph &g, std::size_t k,
                                         Measure m);

/**
 * Minimum over every integer r in [max(alpha, 2), omega'] of the farness
 * bound obtained by filling levels greedily from the level-size bounds gamma
 * (gamma[0] = 1). omega' is omega, or the last prefix sum when gamma ends in
 * 0 because nothing farther can be reached. Infinite when the range is empty.
 */
Farness bruteNbMinimum(const std::vector<count> &gamma, count alpha, count omega);

/// Small named graphs built from text edge lists.
Graph pathGraph(std::size_t n);
Graph undirected(const std::string &edges);
Graph directed(const std::string &edges);

} // namespace tkc::testing
