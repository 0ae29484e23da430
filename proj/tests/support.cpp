#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "tkc/generators.hpp"

namespace tkc::testing {

Oracle::Oracle(const Graph &g) : n_(g.numberOfNodes()), d_(n_ * n_, inf) {
    for (node u = 0; u < n_; ++u) {
        d_[u * n_ + u] = 0;
        for (node v : g.neighbors(u))
            if (v != u)
                d_[u * n_ + v] = 1;
    }
    for (std::size_t w = 0; w < n_; ++w)
        for (std::size_t u = 0; u < n_; ++u) {
            const std::uint32_t uw = d_[u * n_ + w];
            if (uw == inf)
                continue;
            for (std::size_t v = 0; v < n_; ++v) {
                const std::uint32_t wv = d_[w * n_ + v];
                if (wv != inf && uw + wv < d_[u * n_ + v])
                    d_[u * n_ + v] = uw + wv;
            }
        }
}

count Oracle::reach(node v) const {
    count r = 0;
    for (std::size_t w = 0; w < n_; ++w)
        r += dist(v, static_cast<node>(w)) != inf;
    return r;
}

count Oracle::sumOfDistances(node v) const {
    count s = 0;
    for (std::size_t w = 0; w < n_; ++w)
        if (dist(v, static_cast<node>(w)) != inf)
            s += dist(v, static_cast<node>(w));
    return s;
}

std::uint32_t Oracle::eccentricity(node v) const {
    std::uint32_t e = 0;
    for (std::size_t w = 0; w < n_; ++w)
        if (dist(v, static_cast<node>(w)) != inf)
            e = std::max(e, dist(v, static_cast<node>(w)));
    return e;
}

double Oracle::harmonic(node v) const {
    std::map<std::uint32_t, count> byDistance;
    for (std::size_t w = 0; w < n_; ++w) {
        const std::uint32_t d = dist(v, static_cast<node>(w));
        if (d != inf && d > 0)
            ++byDistance[d];
    }
    double h = 0.0;
    for (const auto &[d, c] : byDistance)
        h += static_cast<double>(c) / static_cast<double>(d);
    return h;
}

std::vector<std::uint32_t> plainDistances(const Graph &g, node s) {
    std::vector<std::uint32_t> dist(g.numberOfNodes(), Oracle::inf);
    std::vector<node> queue{s};
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const node u = queue[head];
        for (node w : g.neighbors(u))
            if (dist[w] == Oracle::inf) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

std::vector<CorpusGraph> randomCorpus(std::size_t count, std::size_t minN, std::size_t maxN,
                                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size(minN, maxN);
    const double spreads[] = {0.7, 1.5, 4.0};
    std::vector<CorpusGraph> out;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = size(rng);
        const bool dir = i % 2 == 1;
        const std::uint64_t graphSeed = rng();
        std::ostringstream name;
        if (i % 4 < 2) {
            const double avg = spreads[(i / 4) % 3];
            const double p = std::min(1.0, avg / static_cast<double>(n));
            name << "er-" << (dir ? "dir" : "und") << "-n" << n << "-avg" << avg;
            out.push_back({name.str(), erdosRenyi(n, p, dir, graphSeed)});
        } else {
            const std::size_t attach = 1 + (i / 4) % 3;
            name << "ba-" << (dir ? "dir" : "und") << "-n" << n << "-m" << attach;
            out.push_back({name.str(), barabasiAlbert(n, attach, dir, graphSeed)});
        }
    }
    return out;
}

std::string compareRankings(const TopKResult &expected, const TopKResult &actual) {
    std::ostringstream why;
    if (expected.entries.size() != actual.entries.size()) {
        why << "expected " << expected.entries.size() << " entries, got "
            << actual.entries.size();
        return why.str();
    }
    for (std::size_t i = 0; i < expected.entries.size(); ++i) {
        const TopKEntry &a = expected.entries[i];
        const TopKEntry &b = actual.entries[i];
        bool same = a.label == b.label && a.rank == b.rank;
        if (expected.measure == Measure::Closeness)
            same = same && a.farness == b.farness && a.score == b.score;
        else
            same = same && std::abs(a.score - b.score) <= harmonicTolerance;
        if (!same) {
            why << "entry " << i << ": expected (" << a.rank << ", " << a.label << ", "
                << a.score << "), got (" << b.rank << ", " << b.label << ", " << b.score << ")";
            return why.str();
        }
    }
    return {};
}

std::vector<std::string> oracleTopLabels(const Oracle &oracle, const Graph &g, std::size_t k,
                                         Measure m) {
    std::vector<node> order(g.numberOfNodes());
    for (node v = 0; v < order.size(); ++v)
        order[v] = v;
    auto better = [&](node a, node b) {
        if (m == Measure::Closeness)
            return oracle.farness(a) < oracle.farness(b);
        return oracle.harmonic(a) > oracle.harmonic(b);
    };
    std::stable_sort(order.begin(), order.end(), better);
    std::vector<std::string> labels;
    if (order.empty())
        return labels;
    const node cut = order[std::min(k, order.size()) - 1];
    for (node v : order) {
        const bool tie = m == Measure::Closeness
                             ? oracle.farness(v) == oracle.farness(cut)
                             : oracle.harmonic(v) >= oracle.harmonic(cut) - harmonicTolerance;
        if (better(v, cut) || tie)
            labels.push_back(g.label(v));
    }
    std::sort(labels.begin(), labels.end());
    return labels;
}

Farness bruteNbMinimum(const std::vector<count> &gamma, count alpha, count omega) {
    count total = 0;
    for (count g : gamma)
        total += g;
    const count upper = !gamma.empty() && gamma.back() == 0 ? std::min(omega, total) : omega;
    Farness best = Farness::infinity();
    for (count r = std::max<count>(alpha, 2); r <= upper; ++r) {
        count sum = 0, before = gamma.empty() ? 0 : gamma[0];
        for (std::size_t k = 1; k < gamma.size(); ++k) {
            const count room = r > before ? r - before : 0;
            sum += k * std::min(gamma[k], room);
            before += gamma[k];
        }
        best = std::min(best, Farness(sum, r));
    }
    return best;
}

Graph pathGraph(std::size_t n) {
    std::vector<std::pair<node, node>> edges;
    for (node v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return Graph::fromEdges(n, edges, false);
}

Graph undirected(const std::string &edges) { return parseEdgeList(edges, false); }

Graph directed(const std::string &edges) { return parseEdgeList(edges, true); }

} // namespace tkc::testing
