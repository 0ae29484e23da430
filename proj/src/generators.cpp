#include "tkc/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace tkc {

Graph erdosRenyi(std::size_t n, double p, bool directed, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<node, node>> edges;
    for (node u = 0; u < n; ++u)
        for (node v = directed ? 0 : u + 1; v < n; ++v)
            if (u != v && coin(rng))
                edges.emplace_back(u, v);
    return Graph::fromEdges(n, edges, directed);
}

Graph barabasiAlbert(std::size_t n, std::size_t attach, bool directed, std::uint64_t seed) {
    if (attach == 0)
        throw std::invalid_argument("attach must be positive");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution flip(0.5);
    std::vector<std::pair<node, node>> edges;
    std::vector<node> endpoints; // one entry per edge end: sampling it is degree-proportional
    auto link = [&](node u, node v) {
        if (directed && flip(rng))
            std::swap(u, v);
        edges.emplace_back(u, v);
        endpoints.push_back(u);
        endpoints.push_back(v);
    };

    const std::size_t core = std::min(n, attach + 1);
    for (node u = 0; u < core; ++u)
        for (node v = u + 1; v < core; ++v)
            link(u, v);
    std::vector<node> targets;
    for (node u = static_cast<node>(core); u < n; ++u) {
        targets.clear();
        while (targets.size() < attach) {
            std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
            const node t = endpoints[pick(rng)];
            if (std::find(targets.begin(), targets.end(), t) == targets.end())
                targets.push_back(t);
        }
        for (node t : targets)
            link(u, t);
    }
    return Graph::fromEdges(n, edges, directed);
}

Graph randomTree(std::size_t n, std::uint64_t seed) {
    if (n == 0)
        throw std::invalid_argument("a tree needs at least one node");
    std::vector<std::pair<node, node>> edges;
    if (n == 2)
        edges.emplace_back(0, 1);
    if (n <= 2)
        return Graph::fromEdges(n, edges, false);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<node> pick(0, static_cast<node>(n - 1));
    std::vector<node> code(n - 2);
    std::vector<std::size_t> degree(n, 1);
    for (node &c : code) {
        c = pick(rng);
        ++degree[c];
    }
    std::set<node> leaves;
    for (node v = 0; v < n; ++v)
        if (degree[v] == 1)
            leaves.insert(v);
    for (node c : code) {
        const node leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, c);
        if (--degree[c] == 1)
            leaves.insert(c);
    }
    edges.emplace_back(*leaves.begin(), *std::next(leaves.begin()));
    return Graph::fromEdges(n, edges, false);
}

TdsInstance randomTdsInstance(std::size_t maxSets, std::size_t maxElements, double density,
                              std::uint64_t seed) {
    if (maxSets < 2 || maxElements < 1)
        throw std::invalid_argument("need room for two sets and one element");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> setCount(2, maxSets);
    std::uniform_int_distribution<std::size_t> elementCount(1, maxElements);
    std::bernoulli_distribution member(density);

    TdsInstance inst;
    inst.sets.resize(setCount(rng));
    const std::size_t x = elementCount(rng);
    for (std::size_t e = 0; e < x; ++e)
        inst.ground.push_back(static_cast<int>(e + 1));
    for (auto &set : inst.sets)
        for (int e : inst.ground)
            if (member(rng))
                set.push_back(e);
    return inst;
}

} // namespace tkc
