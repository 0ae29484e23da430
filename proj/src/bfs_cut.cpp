#include "tkc/bfs_cut.hpp"

#include <algorithm>

namespace tkc {

namespace {

struct Bounds {
    Farness lower;
    double upper = 0.0;
};

} // namespace

CutResult bfsCut(const Graph &g, node s, Measure m, const ReachInfo &reach,
                 const CutThreshold &threshold, BfsScratch &scratch,
                 std::vector<CutBoundRecord> *log) {
    const std::size_t n = g.numberOfNodes();
    const bool directed = g.isDirected();
    CutResult result;
    if (g.degree(s) == 0 || reach.omega[s] <= 1)
        return result;

    const count omega = reach.omega[s];
    const count alpha = reach.alpha[s];

    scratch.ensure(n);
    auto &dist = scratch.dist;
    auto &queue = scratch.queue;
    queue.push_back(s);
    dist[s] = 0;

    std::uint32_t d = 0;
    std::size_t levelBegin = 0, levelEnd = 1;
    count sum = 0, ball = 1;
    double harmonicPartial = 0.0;

    // bound after level d given an upper bound u on the size of level d+1
    auto evaluate = [&](count u) {
        Bounds b;
        const auto far = [&](count r) {
            r = std::max<count>(r, 2);
            const __int128 s2 = static_cast<__int128>(sum) - static_cast<__int128>(u) +
                                static_cast<__int128>(d + 2) * (static_cast<__int128>(r) - ball);
            return farnessBound(s2, r);
        };
        if (m == Measure::Closeness) {
            b.lower = std::min(far(std::max(alpha, ball)), far(omega));
        } else {
            const count rest = omega > ball ? omega - ball : 0;
            const count near = std::min(u, rest);
            b.upper = harmonicPartial + static_cast<double>(near) / (d + 1) +
                      static_cast<double>(rest - near) / (d + 2);
        }
        if (log)
            log->push_back({d, b.lower, b.upper});
        return b;
    };
    auto cuts = [&](const Bounds &b) {
        if (m == Measure::Closeness)
            return threshold.farness && b.lower > *threshold.farness;
        return threshold.harmonic && b.upper < *threshold.harmonic - harmonicTolerance;
    };
    auto prune = [&](const Bounds &b) {
        result.pruned = true;
        result.farness = b.lower;
        result.harmonic = b.upper;
        scratch.clear();
        return result;
    };

    while (true) {
        count u = 0;
        for (std::size_t i = levelBegin; i < levelEnd; ++i) {
            const count deg = g.degree(queue[i]);
            u += (directed || d == 0) ? deg : deg - 1;
        }
        if (Bounds b = evaluate(u); cuts(b))
            return prune(b);

        for (std::size_t i = levelBegin; i < levelEnd; ++i) {
            const node x = queue[i];
            bool parentSkipped = directed || d == 0;
            for (node w : g.neighbors(x)) {
                ++result.visitedArcs;
                if (dist[w] == unreached) {
                    dist[w] = d + 1;
                    queue.push_back(w);
                    continue;
                }
                if (!parentSkipped && dist[w] + 1 == d) {
                    parentSkipped = true;
                    continue;
                }
                if (u == 0)
                    continue;
                --u;
                if (Bounds b = evaluate(u); cuts(b))
                    return prune(b);
            }
        }

        const count found = queue.size() - levelEnd;
        if (found == 0)
            break;
        ++d;
        sum += static_cast<count>(d) * found;
        ball += found;
        harmonicPartial += static_cast<double>(found) / static_cast<double>(d);
        result.levelCounts.push_back(found);
        levelBegin = levelEnd;
        levelEnd = queue.size();
    }

    result.sumDist = sum;
    result.reached = ball;
    result.farness = Farness(sum, ball);
    result.harmonic = harmonicFromLevels(result.levelCounts);
    scratch.clear();
    return result;
}

} // namespace tkc
