#include "tkc/exact.hpp"

#include <omp.h>

#include "tkc/bfs.hpp"

namespace tkc {

namespace {

CentralityTable scoreAll(const Graph &g, Measure m, count *visitedArcs) {
    const std::size_t n = g.numberOfNodes();
    CentralityTable table;
    table.measure = m;
    table.value.assign(n, 0.0);
    table.sumDist.assign(n, 0);
    table.reached.assign(n, 1);

    count arcs = 0;
#pragma omp parallel reduction(+ : arcs)
    {
        BfsScratch scratch(n);
#pragma omp for schedule(dynamic, 16)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
            const node v = static_cast<node>(i);
            LevelSummary levels = bfsLevels(g, v, scratch);
            scratch.clear();
            arcs += levels.visitedArcs;
            table.sumDist[v] = levels.sumOfDistances;
            table.reached[v] = levels.reached;
            table.value[v] = m == Measure::Closeness
                                 ? Farness(levels.sumOfDistances, levels.reached).closeness(n)
                                 : harmonicFromLevels(levels.levelCounts);
        }
    }
    if (visitedArcs)
        *visitedArcs = arcs;
    return table;
}

} // namespace

CentralityTable closenessAll(const Graph &g) { return scoreAll(g, Measure::Closeness, nullptr); }

CentralityTable harmonicAll(const Graph &g) { return scoreAll(g, Measure::Harmonic, nullptr); }

CentralityTable centralityAll(const Graph &g, Measure m) { return scoreAll(g, m, nullptr); }

TopKResult topkReference(const Graph &g, std::size_t k, Measure m) {
    TopKResult result;
    result.measure = m;
    result.variant = Variant::Textbook;
    result.k = k;

    const CentralityTable table = scoreAll(g, m, &result.visitedArcs);
    result.bfsCount = g.numberOfNodes();

    std::vector<TopKEntry> candidates;
    candidates.reserve(g.numberOfNodes());
    for (node v = 0; v < g.numberOfNodes(); ++v) {
        TopKEntry e;
        e.id = v;
        e.label = g.label(v);
        e.score = table.value[v];
        if (m == Measure::Closeness)
            e.farness = table.farness(v);
        candidates.push_back(std::move(e));
    }
    selectTopK(result, std::move(candidates));
    return result;
}

} // namespace tkc
