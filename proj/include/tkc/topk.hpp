#pragma once

#include <cstddef>
#include <vector>

#include "tkc/farness.hpp"
#include "tkc/graph.hpp"
#include "tkc/result.hpp"

namespace tkc {

struct TopKOptions {
    /// Queue heads processed concurrently. Any value gives the same entries.
    int threads = 1;
};

/// Solver state at termination, for inspection by tests and tools.
struct TopKDiagnostics {
    std::vector<Farness> lowerBound; // closeness: final farness lower bounds
    std::vector<double> upperBound;  // harmonic: final centrality upper bounds
    std::vector<node> finalized;     // in finalization order
    std::vector<node> pruned;        // nodes whose traversal was cut
    std::vector<node> remaining;     // still queued when the loop stopped
};

/**
 * Exact top-k closeness (Lin's index) or harmonic centrality.
 *
 * Nodes are taken from a queue ordered by their current bound, most
 * promising first. Each one is either finalized by a BFS or discarded once
 * its bound certifies it cannot reach the k-th best score. The loop ends when
 * the queue head is strictly worse than the k-th best, so every node tying
 * the k-th score is returned.
 *
 * DegCut and NBCut cut each BFS early; DegBound and NBBound run full BFSes
 * and push level bounds to the nodes they reach. Deg starts from trivial
 * bounds, NB from neighborhood bounds. Textbook delegates to topkReference.
 */
TopKResult topk(const Graph &g, std::size_t k, Variant variant, Measure measure,
                const TopKOptions &options = {}, TopKDiagnostics *diagnostics = nullptr);

} // namespace tkc
