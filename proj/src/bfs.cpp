#include "tkc/bfs.hpp"

namespace tkc {

count BfsResult::sumOfDistances() const {
    count sum = 0;
    for (std::size_t d = 1; d < levelCounts.size(); ++d)
        sum += d * levelCounts[d];
    return sum;
}

BfsResult bfs(const Graph &g, node source, const LevelCallback &onLevelComplete) {
    BfsResult res;
    res.source = source;
    res.dist.assign(g.numberOfNodes(), unreached);
    res.order.reserve(g.numberOfNodes());

    res.dist[source] = 0;
    res.order.push_back(source);
    res.levelCounts.push_back(1);
    res.reached = 1;

    std::size_t levelBegin = 0;
    for (std::uint32_t d = 0;; ++d) {
        const std::size_t levelEnd = res.order.size();
        if (onLevelComplete && onLevelComplete(d, res) == LevelAction::Stop) {
            res.truncated = true;
            return res;
        }
        count next = 0;
        for (std::size_t i = levelBegin; i < levelEnd; ++i) {
            const node u = res.order[i];
            for (node w : g.neighbors(u)) {
                ++res.visitedArcs;
                if (res.dist[w] == unreached) {
                    res.dist[w] = d + 1;
                    res.order.push_back(w);
                    ++next;
                }
            }
        }
        if (next == 0)
            break;
        res.levelCounts.push_back(next);
        res.reached += next;
        levelBegin = levelEnd;
    }
    return res;
}

LevelSummary bfsLevels(const Graph &g, node source, BfsScratch &scratch) {
    scratch.ensure(g.numberOfNodes());
    auto &dist = scratch.dist;
    auto &queue = scratch.queue;

    LevelSummary out;
    dist[source] = 0;
    queue.push_back(source);
    out.levelCounts.push_back(1);

    for (std::size_t head = 0; head < queue.size(); ++head) {
        const node u = queue[head];
        const std::uint32_t du = dist[u];
        for (node w : g.neighbors(u)) {
            ++out.visitedArcs;
            if (dist[w] == unreached) {
                dist[w] = du + 1;
                queue.push_back(w);
                if (out.levelCounts.size() <= du + 1)
                    out.levelCounts.push_back(0);
                ++out.levelCounts[du + 1];
                out.sumOfDistances += du + 1;
            }
        }
    }
    out.reached = queue.size();
    return out;
}

double harmonicFromLevels(const std::vector<count> &levelCounts) {
    double h = 0.0;
    for (std::size_t d = 1; d < levelCounts.size(); ++d)
        h += static_cast<double>(levelCounts[d]) / static_cast<double>(d);
    return h;
}

} // namespace tkc
