#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tkc {

using node = std::uint32_t;
using count = std::uint64_t;

inline constexpr node none = static_cast<node>(-1);

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string &what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/**
 * Immutable unweighted graph in compressed adjacency form.
 *
 * Nodes are dense ids in [0, n). Self-loops and parallel arcs are removed at
 * construction. For undirected graphs every edge is stored in both adjacency
 * lists but counted once in numberOfEdges().
 */
class Graph {
public:
    Graph() = default;

    /// Builds a graph on n nodes labelled "0".."n-1".
    static Graph fromEdges(std::size_t n, std::span<const std::pair<node, node>> edges,
                           bool directed);
    static Graph fromEdges(std::vector<std::string> labels,
                           std::span<const std::pair<node, node>> edges, bool directed);

    std::size_t numberOfNodes() const noexcept { return labels_.size(); }
    std::size_t numberOfEdges() const noexcept { return m_; }
    bool isDirected() const noexcept { return directed_; }

    std::span<const node> neighbors(node u) const noexcept {
        return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
    }
    /// Out-degree for directed graphs, degree otherwise.
    count degree(node u) const noexcept { return offsets_[u + 1] - offsets_[u]; }
    bool hasArc(node u, node v) const;

    const std::string &label(node u) const { return labels_[u]; }
    std::optional<node> idOf(std::string_view label) const;

    /// The graph with every arc reversed (identity for undirected graphs).
    Graph transpose() const;

private:
    bool directed_ = false;
    std::size_t m_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<node> targets_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, node> index_;
};

/**
 * Reads a whitespace-separated edge list. Lines starting with '#' or '%' are
 * comments; tokens past the second on a line are ignored. Node ids are
 * assigned in order of first appearance.
 */
Graph parseEdgeList(std::istream &in, bool directed);
Graph parseEdgeList(std::string_view text, bool directed);
Graph readEdgeListFile(const std::string &path, bool directed);

/// Writes one line per edge; nodes without incident edges are written as a
/// self-loop line so that parseEdgeList() recreates them.
void writeEdgeList(const Graph &g, std::ostream &out);

/// Nodes by decreasing (out-)degree, ties by increasing id. Counting sort.
std::vector<node> degreeDescendingOrder(const Graph &g);

} // namespace tkc
