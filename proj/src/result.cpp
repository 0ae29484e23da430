#include "tkc/result.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tkc {

std::string_view toString(Variant v) {
    switch (v) {
    case Variant::DegCut:
        return "degcut";
    case Variant::DegBound:
        return "degbound";
    case Variant::NBCut:
        return "nbcut";
    case Variant::NBBound:
        return "nbbound";
    case Variant::Textbook:
        return "textbook";
    }
    return "unknown";
}

std::optional<Variant> parseVariant(std::string_view name) {
    if (name == "degcut")
        return Variant::DegCut;
    if (name == "degbound")
        return Variant::DegBound;
    if (name == "nbcut" || name == "auto")
        return Variant::NBCut;
    if (name == "nbbound")
        return Variant::NBBound;
    if (name == "textbook")
        return Variant::Textbook;
    return std::nullopt;
}

bool sameScore(Measure m, const TopKEntry &a, const TopKEntry &b) {
    if (m == Measure::Closeness)
        return a.farness == b.farness;
    return std::abs(a.score - b.score) <= harmonicTolerance;
}

void rankEntries(Measure m, std::vector<TopKEntry> &entries) {
    auto better = [m](const TopKEntry &a, const TopKEntry &b) {
        if (m == Measure::Closeness)
            return a.farness < b.farness;
        return a.score > b.score;
    };
    std::stable_sort(entries.begin(), entries.end(), better);

    std::size_t groupBegin = 0;
    while (groupBegin < entries.size()) {
        std::size_t groupEnd = groupBegin + 1;
        while (groupEnd < entries.size() && sameScore(m, entries[groupBegin], entries[groupEnd]))
            ++groupEnd;
        std::sort(entries.begin() + groupBegin, entries.begin() + groupEnd,
                  [](const TopKEntry &a, const TopKEntry &b) { return a.label < b.label; });
        for (std::size_t i = groupBegin; i < groupEnd; ++i)
            entries[i].rank = groupBegin + 1;
        groupBegin = groupEnd;
    }
}

void selectTopK(TopKResult &result, std::vector<TopKEntry> candidates) {
    const Measure m = result.measure;
    rankEntries(m, candidates);
    result.entries.clear();
    if (candidates.empty() || result.k == 0)
        return;
    const std::size_t kth = std::min(result.k, candidates.size()) - 1;
    const TopKEntry &cut = candidates[kth];
    result.kthValue = cut.score;
    result.kthFarness = cut.farness;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const bool keep = i <= kth || (m == Measure::Closeness
                                           ? candidates[i].farness == cut.farness
                                           : candidates[i].score >= cut.score - harmonicTolerance);
        if (keep)
            result.entries.push_back(std::move(candidates[i]));
    }
    // ranks among the kept entries are unchanged: nothing better than a kept
    // entry was dropped
}

double improvementFactor(const TopKResult &result, const Graph &g) {
    if (result.visitedArcs == 0)
        return std::numeric_limits<double>::infinity();
    const double textbook = static_cast<double>(g.numberOfNodes()) *
                            static_cast<double>(g.numberOfEdges()) * (g.isDirected() ? 1.0 : 2.0);
    return textbook / static_cast<double>(result.visitedArcs);
}

} // namespace tkc
