#include "tkc/reach.hpp"

#include <algorithm>
#include <stdexcept>

namespace tkc {

SccDag sccCondensation(const Graph &g) {
    const std::size_t n = g.numberOfNodes();
    constexpr std::uint32_t unvisited = static_cast<std::uint32_t>(-1);

    // iterative Tarjan; components complete in reverse topological order
    std::vector<std::uint32_t> index(n, unvisited), low(n, 0), finishedComp(n, unvisited);
    std::vector<bool> onStack(n, false);
    std::vector<node> stack;
    std::vector<std::pair<node, std::size_t>> frames;
    std::uint32_t counter = 0, completed = 0;

    for (node root = 0; root < n; ++root) {
        if (index[root] != unvisited)
            continue;
        index[root] = low[root] = counter++;
        stack.push_back(root);
        onStack[root] = true;
        frames.emplace_back(root, 0);

        while (!frames.empty()) {
            const node v = frames.back().first;
            auto adj = g.neighbors(v);
            if (frames.back().second < adj.size()) {
                const node w = adj[frames.back().second++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    onStack[w] = true;
                    frames.emplace_back(w, 0);
                } else if (onStack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                node w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    onStack[w] = false;
                    finishedComp[w] = completed;
                } while (w != v);
                ++completed;
            }
            frames.pop_back();
            if (!frames.empty()) {
                const node parent = frames.back().first;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }

    SccDag dag;
    const std::uint32_t c = completed;
    dag.compOf.resize(n);
    dag.weight.assign(c, 0);
    dag.successors.assign(c, {});
    for (node v = 0; v < n; ++v) {
        dag.compOf[v] = c - 1 - finishedComp[v];
        ++dag.weight[dag.compOf[v]];
    }
    for (node u = 0; u < n; ++u) {
        const std::uint32_t cu = dag.compOf[u];
        for (node v : g.neighbors(u))
            if (dag.compOf[v] != cu)
                dag.successors[cu].push_back(dag.compOf[v]);
    }
    for (auto &succ : dag.successors) {
        std::sort(succ.begin(), succ.end());
        succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    }
    dag.topoOrder.resize(c);
    for (std::uint32_t i = 0; i < c; ++i)
        dag.topoOrder[i] = i;
    dag.biggest = 0;
    for (std::uint32_t i = 1; i < c; ++i)
        if (dag.weight[i] > dag.weight[dag.biggest])
            dag.biggest = i;
    return dag;
}

ReachInfo exactReachUndirected(const Graph &g) {
    if (g.isDirected())
        throw std::invalid_argument("exactReachUndirected requires an undirected graph");
    const std::size_t n = g.numberOfNodes();
    constexpr std::uint32_t unassigned = static_cast<std::uint32_t>(-1);

    ReachInfo info;
    info.mode = ReachMode::UndirectedExact;
    info.component.assign(n, unassigned);
    std::vector<count> sizes;
    std::vector<node> queue;
    for (node s = 0; s < n; ++s) {
        if (info.component[s] != unassigned)
            continue;
        const auto id = static_cast<std::uint32_t>(sizes.size());
        queue.assign(1, s);
        info.component[s] = id;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (node w : g.neighbors(queue[head]))
                if (info.component[w] == unassigned) {
                    info.component[w] = id;
                    queue.push_back(w);
                }
        sizes.push_back(queue.size());
    }
    std::vector<count> r(n);
    for (node v = 0; v < n; ++v)
        r[v] = sizes[info.component[v]];
    info.alpha = r;
    info.omega = r;
    info.exact = std::move(r);
    return info;
}

ReachInfo alphaOmega(const SccDag &dag, const AlphaOmegaOptions &options) {
    const std::size_t c = dag.numberOfComponents();
    count n = 0;
    for (count w : dag.weight)
        n += w;

    std::vector<count> alpha(c, 0), omega(c, 0), omegaRest(c, 0);
    std::vector<bool> fromPivot(c, false), toPivot(c, false);
    const bool usePivot = options.usePivot && c > 0;
    const std::uint32_t pivot = options.pivot.value_or(dag.biggest);
    count pivotReach = 0;

    if (usePivot) {
        if (pivot >= c)
            throw std::out_of_range("pivot component out of range");
        std::vector<std::uint32_t> queue{pivot};
        fromPivot[pivot] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            pivotReach += dag.weight[queue[head]];
            for (std::uint32_t d : dag.successors[queue[head]])
                if (!fromPivot[d]) {
                    fromPivot[d] = true;
                    queue.push_back(d);
                }
        }
        // a component reaches the pivot iff one of its successors does; ids
        // are topological, so one descending sweep settles it
        toPivot[pivot] = true;
        for (std::uint32_t x = static_cast<std::uint32_t>(c); x-- > 0;)
            for (std::uint32_t y : dag.successors[x])
                if (toPivot[y]) {
                    toPivot[x] = true;
                    break;
                }
    }

    for (std::uint32_t i = static_cast<std::uint32_t>(c); i-- > 0;) {
        const std::uint32_t x = dag.topoOrder[i];
        if (usePivot && x == pivot) {
            alpha[x] = omega[x] = pivotReach;
            continue;
        }
        count a = 0, o = 0, rest = 0;
        for (std::uint32_t y : dag.successors[x]) {
            a = std::max(a, alpha[y]);
            o = std::min(n, o + omega[y]);
            if (!fromPivot[y])
                rest = std::min(n, rest + omegaRest[y]);
        }
        alpha[x] = dag.weight[x] + a;
        omega[x] = std::min(n, dag.weight[x] + o);
        // omegaRest is the same recursion on the DAG without the components
        // reachable from the pivot
        omegaRest[x] = std::min(n, dag.weight[x] + rest);
        if (usePivot && toPivot[x])
            omega[x] = std::min(n, omegaRest[x] + pivotReach);
    }

    ReachInfo info;
    info.mode = ReachMode::DirectedInterval;
    info.component = dag.compOf;
    const std::size_t nodes = dag.compOf.size();
    info.alpha.resize(nodes);
    info.omega.resize(nodes);
    for (node v = 0; v < nodes; ++v) {
        info.alpha[v] = alpha[dag.compOf[v]];
        info.omega[v] = omega[dag.compOf[v]];
    }
    return info;
}

ReachInfo computeReach(const Graph &g) {
    if (!g.isDirected())
        return exactReachUndirected(g);
    SccDag dag = sccCondensation(g);
    if (dag.numberOfComponents() == 1) {
        ReachInfo info;
        info.mode = ReachMode::StronglyConnectedExact;
        info.component.assign(g.numberOfNodes(), 0);
        std::vector<count> r(g.numberOfNodes(), g.numberOfNodes());
        info.alpha = r;
        info.omega = r;
        info.exact = std::move(r);
        return info;
    }
    return alphaOmega(dag);
}

} // namespace tkc
