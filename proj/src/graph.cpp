#include "tkc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace tkc {

ParseError::ParseError(std::size_t line, const std::string &what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Graph Graph::fromEdges(std::size_t n, std::span<const std::pair<node, node>> edges,
                       bool directed) {
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i)
        labels[i] = std::to_string(i);
    return fromEdges(std::move(labels), edges, directed);
}

Graph Graph::fromEdges(std::vector<std::string> labels,
                       std::span<const std::pair<node, node>> edges, bool directed) {
    const std::size_t n = labels.size();
    Graph g;
    g.directed_ = directed;

    std::vector<std::pair<node, node>> arcs;
    arcs.reserve(directed ? edges.size() : 2 * edges.size());
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw std::out_of_range("edge endpoint outside [0, n)");
        if (u == v)
            continue;
        arcs.emplace_back(u, v);
        if (!directed)
            arcs.emplace_back(v, u);
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

    g.offsets_.assign(n + 1, 0);
    for (auto [u, v] : arcs)
        ++g.offsets_[u + 1];
    for (std::size_t i = 0; i < n; ++i)
        g.offsets_[i + 1] += g.offsets_[i];
    g.targets_.resize(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i)
        g.targets_[i] = arcs[i].second; // arcs are sorted by source
    g.m_ = directed ? arcs.size() : arcs.size() / 2;

    g.index_.reserve(n);
    for (node u = 0; u < n; ++u) {
        if (!g.index_.emplace(labels[u], u).second)
            throw std::invalid_argument("duplicate node label '" + labels[u] + "'");
    }
    g.labels_ = std::move(labels);
    return g;
}

bool Graph::hasArc(node u, node v) const {
    auto adj = neighbors(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::optional<node> Graph::idOf(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

Graph Graph::transpose() const {
    if (!directed_)
        return *this;
    std::vector<std::pair<node, node>> arcs;
    arcs.reserve(targets_.size());
    for (node u = 0; u < numberOfNodes(); ++u)
        for (node v : neighbors(u))
            arcs.emplace_back(v, u);
    return fromEdges(labels_, arcs, true);
}

Graph parseEdgeList(std::istream &in, bool directed) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, node> ids;
    std::vector<std::pair<node, node>> edges;

    auto intern = [&](const std::string &token) {
        auto [it, inserted] = ids.emplace(token, static_cast<node>(labels.size()));
        if (inserted)
            labels.push_back(token);
        return it->second;
    };

    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        auto first = line.find_first_not_of(" \t\v\f");
        if (first == std::string::npos)
            continue;
        if (line[first] == '#' || line[first] == '%')
            continue;

        std::istringstream tokens(line);
        std::string a, b;
        if (!(tokens >> a >> b))
            throw ParseError(lineNo, "expected two node tokens");
        node u = intern(a);
        node v = intern(b);
        edges.emplace_back(u, v);
    }
    if (labels.empty())
        throw ParseError(lineNo, "graph has no nodes");
    return Graph::fromEdges(std::move(labels), edges, directed);
}

Graph parseEdgeList(std::string_view text, bool directed) {
    std::istringstream in{std::string(text)};
    return parseEdgeList(in, directed);
}

Graph readEdgeListFile(const std::string &path, bool directed) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return parseEdgeList(in, directed);
}

void writeEdgeList(const Graph &g, std::ostream &out) {
    const std::size_t n = g.numberOfNodes();
    std::vector<bool> touched(n, false);
    for (node u = 0; u < n; ++u) {
        for (node v : g.neighbors(u)) {
            touched[u] = touched[v] = true;
            if (g.isDirected() || u < v)
                out << g.label(u) << ' ' << g.label(v) << '\n';
        }
    }
    for (node u = 0; u < n; ++u)
        if (!touched[u])
            out << g.label(u) << ' ' << g.label(u) << '\n';
}

std::vector<node> degreeDescendingOrder(const Graph &g) {
    const std::size_t n = g.numberOfNodes();
    count maxDeg = 0;
    for (node u = 0; u < n; ++u)
        maxDeg = std::max(maxDeg, g.degree(u));

    // bucket b holds degree maxDeg - b, so buckets run from high to low degree
    std::vector<std::size_t> start(maxDeg + 2, 0);
    for (node u = 0; u < n; ++u)
        ++start[maxDeg - g.degree(u) + 1];
    for (std::size_t b = 1; b < start.size(); ++b)
        start[b] += start[b - 1];

    std::vector<node> order(n);
    for (node u = 0; u < n; ++u)
        order[start[maxDeg - g.degree(u)]++] = u;
    return order;
}

} // namespace tkc
