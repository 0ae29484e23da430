#pragma once

#include <cstdint>

#include "tkc/gadget.hpp"
#include "tkc/graph.hpp"

namespace tkc {

/// G(n, p): every pair (ordered when directed) is an edge with probability p.
Graph erdosRenyi(std::size_t n, double p, bool directed, std::uint64_t seed);

/**
 * Preferential attachment: starts from a clique on attach + 1 nodes, then
 * each new node links to `attach` distinct earlier nodes chosen with
 * probability proportional to their degree. When directed, each link gets a
 * random orientation.
 */
Graph barabasiAlbert(std::size_t n, std::size_t attach, bool directed, std::uint64_t seed);

/// Uniformly random labelled tree on n nodes (Pruefer sequence).
Graph randomTree(std::size_t n, std::uint64_t seed);

/// Collection of 2..maxSets random subsets of a ground set of 1..maxElements
/// elements. Each element joins each set with probability density.
TdsInstance randomTdsInstance(std::size_t maxSets, std::size_t maxElements, double density,
                              std::uint64_t seed);

} // namespace tkc
