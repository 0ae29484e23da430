#include "tkc/topk.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>

#include <omp.h>

#include "tkc/bfs.hpp"
#include "tkc/bfs_cut.hpp"
#include "tkc/exact.hpp"
#include "tkc/level_bound.hpp"
#include "tkc/nb_bound.hpp"
#include "tkc/reach.hpp"

namespace tkc {

namespace {

struct QueueEntry {
    Farness lower;
    double upper = 0.0;
    count degree = 0;
    node id = none;
    std::uint32_t version = 0;
};

/// std::priority_queue comparator: true when a should come out after b.
struct QueueOrder {
    Measure measure;
    bool operator()(const QueueEntry &a, const QueueEntry &b) const {
        if (measure == Measure::Closeness) {
            if (a.lower != b.lower)
                return a.lower > b.lower;
        } else if (a.upper != b.upper) {
            return a.upper < b.upper;
        }
        if (a.degree != b.degree)
            return a.degree < b.degree;
        return a.id > b.id;
    }
};

/// The k best finalized scores; the worst of them is the pruning threshold.
class KthTracker {
public:
    KthTracker(Measure m, std::size_t k) : measure_(m), k_(k) {}

    void add(const Farness &f, double h) {
        if (measure_ == Measure::Closeness) {
            far_.push(f);
            if (far_.size() > k_)
                far_.pop();
        } else {
            harm_.push(h);
            if (harm_.size() > k_)
                harm_.pop();
        }
    }

    bool full() const {
        return (measure_ == Measure::Closeness ? far_.size() : harm_.size()) >= k_;
    }

    CutThreshold threshold() const {
        CutThreshold t;
        if (!full())
            return t;
        if (measure_ == Measure::Closeness)
            t.farness = far_.top();
        else
            t.harmonic = harm_.top();
        return t;
    }

private:
    Measure measure_;
    std::size_t k_;
    std::priority_queue<Farness> far_;
    std::priority_queue<double, std::vector<double>, std::greater<>> harm_;
};

struct Outcome {
    CutResult cut;
    std::vector<std::pair<node, Farness>> levelBounds;
};

} // namespace

TopKResult topk(const Graph &g, std::size_t k, Variant variant, Measure measure,
                const TopKOptions &options, TopKDiagnostics *diagnostics) {
    if (k == 0)
        throw std::invalid_argument("k must be positive");
    if (variant == Variant::Textbook)
        return topkReference(g, k, measure);

    const std::size_t n = g.numberOfNodes();
    const int threads = std::max(options.threads, 1);
    const bool cutting = variant == Variant::DegCut || variant == Variant::NBCut;
    const bool neighborhood = variant == Variant::NBCut || variant == Variant::NBBound;

    TopKResult result;
    result.measure = measure;
    result.variant = variant;
    result.k = k;

    const ReachInfo reach = computeReach(g);

    std::vector<Farness> lower(n, Farness::zero());
    std::vector<double> upper(n, 0.0);
    for (node v = 0; v < n; ++v) {
        const count deg = g.degree(v);
        const count far = reach.omega[v] > deg + 1 ? reach.omega[v] - 1 - deg : 0;
        upper[v] = static_cast<double>(deg) + static_cast<double>(far) / 2.0;
    }
    if (neighborhood) {
        const NbBounds nb = nbLowerBounds(g, reach, nullptr, threads);
        lower = nb.farness;
        for (node v = 0; v < n; ++v)
            upper[v] = std::min(upper[v], nb.harmonic[v]);
    }

    std::vector<std::uint32_t> version(n, 0);
    std::vector<bool> done(n, false);
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueOrder> queue(
        QueueOrder{measure});
    auto push = [&](node v) { queue.push({lower[v], upper[v], g.degree(v), v, version[v]}); };
    for (node v = 0; v < n; ++v)
        push(v);

    KthTracker kth(measure, k);
    std::vector<TopKEntry> finalized;
    std::vector<BfsScratch> scratch(static_cast<std::size_t>(threads), BfsScratch(n));
    if (diagnostics)
        *diagnostics = {};

    // a head that cannot tie the k-th best ends the search
    auto hopeless = [&](node v) {
        if (!kth.full())
            return false;
        const CutThreshold t = kth.threshold();
        if (measure == Measure::Closeness)
            return lower[v] > *t.farness;
        return upper[v] < *t.harmonic - harmonicTolerance;
    };

    std::vector<node> batch;
    std::vector<Outcome> outcomes;
    bool stopped = false;
    while (!stopped) {
        batch.clear();
        while (batch.size() < static_cast<std::size_t>(threads) && !queue.empty()) {
            const QueueEntry head = queue.top();
            if (done[head.id] || head.version != version[head.id]) {
                queue.pop();
                continue;
            }
            if (hopeless(head.id)) {
                stopped = true;
                break;
            }
            queue.pop();
            done[head.id] = true;
            batch.push_back(head.id);
        }
        if (batch.empty())
            break;

        const CutThreshold threshold = kth.threshold();
        outcomes.assign(batch.size(), {});
        const auto jobs = static_cast<std::int64_t>(batch.size());
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
        for (std::int64_t i = 0; i < jobs; ++i) {
            const node v = batch[static_cast<std::size_t>(i)];
            BfsScratch &local = scratch[static_cast<std::size_t>(omp_get_thread_num())];
            Outcome &out = outcomes[static_cast<std::size_t>(i)];
            if (cutting) {
                out.cut = bfsCut(g, v, measure, reach, threshold, local);
                continue;
            }
            LevelSummary levels = bfsLevels(g, v, local);
            out.cut.sumDist = levels.sumOfDistances;
            out.cut.reached = levels.reached;
            out.cut.farness = Farness(levels.sumOfDistances, levels.reached);
            out.cut.harmonic = harmonicFromLevels(levels.levelCounts);
            out.cut.visitedArcs = levels.visitedArcs;
            if (measure == Measure::Closeness && levels.levelCounts.size() > 1)
                out.levelBounds = levelLowerBounds(g, v, local.queue, local.dist,
                                                   levels.levelCounts, reach);
            out.cut.levelCounts = std::move(levels.levelCounts);
            local.clear();
        }

        for (std::size_t i = 0; i < batch.size(); ++i) {
            const node v = batch[i];
            Outcome &out = outcomes[i];
            ++result.bfsCount;
            result.visitedArcs += out.cut.visitedArcs;
            if (out.cut.pruned) {
                ++result.prunedCount;
                if (measure == Measure::Closeness)
                    lower[v] = std::max(lower[v], out.cut.farness);
                else
                    upper[v] = std::min(upper[v], out.cut.harmonic);
                if (diagnostics)
                    diagnostics->pruned.push_back(v);
                continue;
            }
            lower[v] = out.cut.farness;
            upper[v] = out.cut.harmonic;
            kth.add(out.cut.farness, out.cut.harmonic);
            if (diagnostics)
                diagnostics->finalized.push_back(v);

            TopKEntry entry;
            entry.id = v;
            entry.label = g.label(v);
            if (measure == Measure::Closeness) {
                entry.farness = out.cut.farness;
                entry.score = out.cut.farness.closeness(n);
            } else {
                entry.score = out.cut.harmonic;
            }
            finalized.push_back(std::move(entry));

            for (const auto &[w, bound] : out.levelBounds) {
                if (done[w] || !(bound > lower[w]))
                    continue;
                lower[w] = bound;
                ++version[w];
                push(w);
            }
        }
    }

    if (diagnostics) {
        diagnostics->lowerBound = lower;
        diagnostics->upperBound = upper;
        for (node v = 0; v < n; ++v)
            if (!done[v])
                diagnostics->remaining.push_back(v);
    }
    selectTopK(result, std::move(finalized));
    return result;
}

} // namespace tkc
