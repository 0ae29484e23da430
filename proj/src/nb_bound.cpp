#include "tkc/nb_bound.hpp"

#include <algorithm>
#include <stdexcept>

namespace tkc {

namespace {

using wide = __int128;

// Walk counts at or above this value are not tracked exactly; they stand for
// "at least n" from then on.
constexpr wide walkLimit = wide{1} << 100;
constexpr wide invalidWalks = -1;

/// Non-backtracking walk counts of length k from those of lengths k-1 and
/// k-2, exact while every input is below walkLimit.
void nonBacktrackingStep(const Graph &g, std::uint32_t k, const std::vector<wide> &prev1,
                         const std::vector<wide> &prev2, std::vector<wide> &cur, int threads) {
    const auto n = static_cast<std::int64_t>(g.numberOfNodes());
#pragma omp parallel for num_threads(threads) schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const node s = static_cast<node>(i);
        wide acc = 0;
        for (node w : g.neighbors(s)) {
            if (prev1[w] == invalidWalks || (acc += prev1[w]) >= walkLimit) {
                acc = invalidWalks;
                break;
            }
        }
        if (acc == invalidWalks) {
            cur[s] = invalidWalks;
            continue;
        }
        const count deg = g.degree(s);
        if (k == 2) {
            acc -= static_cast<wide>(deg);
        } else if (deg > 1) {
            if (prev2[s] == invalidWalks) {
                cur[s] = invalidWalks;
                continue;
            }
            acc -= prev2[s] * static_cast<wide>(deg - 1);
        }
        cur[s] = acc;
    }
}

/// Walk counts of length k, saturating at cap.
void walkStep(const Graph &g, const std::vector<count> &prev, std::vector<count> &cur, count cap,
              int threads) {
    const auto n = static_cast<std::int64_t>(g.numberOfNodes());
#pragma omp parallel for num_threads(threads) schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const node s = static_cast<node>(i);
        count acc = 0;
        for (node w : g.neighbors(s)) {
            acc += prev[w];
            if (acc >= cap) {
                acc = cap;
                break;
            }
        }
        cur[s] = acc;
    }
}

count clampWalks(wide value, count n) {
    if (value == invalidWalks || value >= static_cast<wide>(n))
        return n;
    return value < 0 ? 0 : static_cast<count>(value);
}

bool isTree(const Graph &g) {
    const std::size_t n = g.numberOfNodes();
    if (g.isDirected() || n == 0 || g.numberOfEdges() != n - 1)
        return false;
    std::vector<bool> seen(n, false);
    std::vector<node> queue{0};
    seen[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (node w : g.neighbors(queue[head]))
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
    return queue.size() == n;
}

} // namespace

CentralityTable treeCloseness(const Graph &g, std::uint32_t *levels) {
    if (!isTree(g))
        throw std::invalid_argument("treeCloseness requires an undirected tree");
    const std::size_t n = g.numberOfNodes();

    // on a tree every non-backtracking walk ends at a distinct node, so the
    // walk counts are exact level sizes
    std::vector<wide> prev2(n, 1), prev1(n), cur(n);
    std::vector<count> sum(n, 0);
    std::vector<bool> finished(n, false);
    for (node s = 0; s < n; ++s)
        prev1[s] = static_cast<wide>(g.degree(s));

    std::uint32_t k = 1;
    std::size_t open = n;
    while (true) {
        const std::vector<wide> &level = k == 1 ? prev1 : cur;
        for (node s = 0; s < n; ++s) {
            if (finished[s])
                continue;
            if (level[s] == 0) {
                finished[s] = true;
                --open;
            } else {
                sum[s] += static_cast<count>(k) * static_cast<count>(level[s]);
            }
        }
        if (open == 0)
            break;
        ++k;
        if (k > 2) {
            std::swap(prev2, prev1);
            std::swap(prev1, cur);
        }
        nonBacktrackingStep(g, k, prev1, prev2, cur, 1);
    }
    if (levels)
        *levels = k;

    CentralityTable table;
    table.measure = Measure::Closeness;
    table.value.resize(n);
    table.sumDist = std::move(sum);
    table.reached.assign(n, n);
    for (node s = 0; s < n; ++s)
        table.value[s] = table.farness(s).closeness(n);
    return table;
}

NbBounds nbLowerBounds(const Graph &g, const ReachInfo &reach, NbTrace *trace, int threads) {
    const std::size_t n = g.numberOfNodes();
    const bool directed = g.isDirected();
    threads = std::max(threads, 1);

    NbBounds out;
    out.farness.assign(n, Farness::infinity());
    out.harmonic.assign(n, 0.0);
    out.finishLevel.assign(n, 0);
    if (trace)
        trace->gamma.assign(n, std::vector<count>{1});

    std::vector<count> visited(n, 1), partialSum(n, 0);
    std::vector<std::uint8_t> finished(n, 0); // written concurrently, so not vector<bool>
    std::size_t open = 0;
    for (node s = 0; s < n; ++s) {
        if (reach.omega[s] <= 1 || g.degree(s) == 0)
            finished[s] = 1;
        else
            ++open;
    }

    std::vector<wide> nb2, nb1, nbCur;
    std::vector<count> walkPrev, walkCur;
    if (directed) {
        walkPrev.resize(n);
        walkCur.resize(n);
    } else {
        nb2.assign(n, 1);
        nb1.resize(n);
        nbCur.resize(n);
    }

    std::uint32_t k = 0;
    while (open > 0) {
        ++k;
        if (k == 1) {
            for (node s = 0; s < n; ++s) {
                if (directed)
                    walkCur[s] = std::min<count>(g.degree(s), n);
                else
                    nbCur[s] = static_cast<wide>(g.degree(s));
            }
        } else if (directed) {
            std::swap(walkPrev, walkCur);
            walkStep(g, walkPrev, walkCur, n, threads);
        } else {
            std::swap(nb2, nb1);
            std::swap(nb1, nbCur);
            nonBacktrackingStep(g, k, nb1, nb2, nbCur, threads);
        }

        std::size_t closedNow = 0;
        const auto nn = static_cast<std::int64_t>(n);
#pragma omp parallel for num_threads(threads) schedule(static) reduction(+ : closedNow)
        for (std::int64_t i = 0; i < nn; ++i) {
            const node s = static_cast<node>(i);
            if (finished[s])
                continue;
            const count gamma = directed ? walkCur[s] : clampWalks(nbCur[s], n);
            if (trace)
                trace->gamma[s].push_back(gamma);

            const count before = visited[s];
            const count after = before + gamma;
            const count lo = std::max<count>(reach.alpha[s], 2);
            const count hi = reach.omega[s];
            const count kk = k;

            // level k contributes slope k to the assumed sum of distances
            auto consider = [&](count r) {
                const Farness f(partialSum[s] + kk * (r - before), r);
                if (f < out.farness[s])
                    out.farness[s] = f;
            };
            if (lo > before && lo <= after && lo <= hi)
                consider(lo);
            if (after > lo && after < hi)
                consider(after);
            bool done = false;
            if (hi <= after) {
                if (hi >= lo)
                    consider(hi);
                done = true;
            }
            out.harmonic[s] += static_cast<double>(std::min(gamma, hi - before)) / kk;
            partialSum[s] += kk * gamma;
            visited[s] = after;
            if (gamma == 0)
                done = true; // no walk of this length: nothing farther is reachable
            if (done) {
                finished[s] = 1;
                out.finishLevel[s] = k;
                ++closedNow;
            }
        }
        open -= closedNow;
    }
    out.levels = k;
    return out;
}

} // namespace tkc
