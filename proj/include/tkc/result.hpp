#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tkc/farness.hpp"
#include "tkc/graph.hpp"

namespace tkc {

enum class Variant { DegCut, DegBound, NBCut, NBBound, Textbook };

std::string_view toString(Variant v);
std::optional<Variant> parseVariant(std::string_view name);

struct TopKEntry {
    node id = none;
    std::string label;
    double score = 0.0;
    Farness farness = Farness::infinity(); // closeness only
    std::size_t rank = 0;
};

/**
 * Ranked top-k answer. entries holds every node whose score ties or beats the
 * k-th best one, sorted by score (best first) and by label within a tie.
 */
struct TopKResult {
    Measure measure = Measure::Closeness;
    Variant variant = Variant::Textbook;
    std::size_t k = 0;
    std::vector<TopKEntry> entries;
    double kthValue = 0.0;
    Farness kthFarness = Farness::infinity(); // closeness only
    count visitedArcs = 0;                    // m_vis
    count prunedCount = 0;
    count bfsCount = 0;
};

/// True when two scores of the given measure are considered equal.
bool sameScore(Measure m, const TopKEntry &a, const TopKEntry &b);

/// Sorts entries best-first, labels ascending within ties, and assigns
/// competition ranks (1, 2, 2, 4, ...).
void rankEntries(Measure m, std::vector<TopKEntry> &entries);

/// Ranks the finalized candidates and keeps the k best plus every entry tying
/// the k-th one; fills entries, kthValue and kthFarness.
void selectTopK(TopKResult &result, std::vector<TopKEntry> candidates);

/// mn / m_vis for directed graphs, 2mn / m_vis for undirected ones.
double improvementFactor(const TopKResult &result, const Graph &g);

} // namespace tkc
