#pragma once

#include <vector>

#include "tkc/farness.hpp"
#include "tkc/graph.hpp"
#include "tkc/result.hpp"

namespace tkc {

/// Scores of every node computed by one BFS per node.
struct CentralityTable {
    Measure measure = Measure::Closeness;
    std::vector<double> value;
    std::vector<count> sumDist; // S(v)
    std::vector<count> reached; // r(v)

    Farness farness(node v) const { return Farness(sumDist[v], reached[v]); }
};

/// Lin's index (r-1)^2 / ((n-1) S) for every node, 0 when r <= 1.
CentralityTable closenessAll(const Graph &g);

/// sum over reachable w != v of 1 / d(v, w).
CentralityTable harmonicAll(const Graph &g);

CentralityTable centralityAll(const Graph &g, Measure m);

/// Textbook top-k: scores all nodes and keeps the k best with ties. Counts
/// every scanned adjacency entry in visitedArcs.
TopKResult topkReference(const Graph &g, std::size_t k, Measure m);

} // namespace tkc
