#include "tkc/level_bound.hpp"

#include <cstdlib>
#include <stdexcept>

namespace tkc {

LevelProfile::LevelProfile(std::vector<count> levelCounts, bool directed)
    : gamma_(std::move(levelCounts)), directed_(directed) {
    if (gamma_.empty())
        throw std::invalid_argument("level profile needs at least the source level");
    maxD_ = static_cast<std::uint32_t>(gamma_.size() - 1);
    // undirected bounds count levels from 1; the source is left out
    if (!directed_)
        gamma_[0] = 0;

    prefix_.resize(gamma_.size());
    count acc = 0;
    for (std::size_t i = 0; i < gamma_.size(); ++i)
        prefix_[i] = acc += gamma_[i];

    bounds_.assign(maxD_ + 1, 0);
    if (maxD_ == 0)
        return;
    if (directed_) {
        bounds_[0] = directBound(0);
        for (std::uint32_t i = 1; i <= maxD_; ++i)
            bounds_[i] = bounds_[i - 1] - static_cast<std::int64_t>(cumGt(i + 1));
    } else {
        bounds_[1] = directBound(1);
        for (std::uint32_t i = 2; i <= maxD_; ++i)
            bounds_[i] = bounds_[i - 1] + static_cast<std::int64_t>(cumLeq(std::int64_t{i} - 3)) -
                         static_cast<std::int64_t>(cumGt(i + 1));
    }
}

count LevelProfile::gamma(std::int64_t i) const {
    if (i < 0 || i > static_cast<std::int64_t>(maxD_))
        return 0;
    return gamma_[static_cast<std::size_t>(i)];
}

count LevelProfile::cumLeq(std::int64_t i) const {
    if (i < 0)
        return 0;
    if (i >= static_cast<std::int64_t>(maxD_))
        return prefix_.back();
    return prefix_[static_cast<std::size_t>(i)];
}

count LevelProfile::cumGt(std::int64_t i) const { return prefix_.back() - cumLeq(i); }

std::int64_t LevelProfile::directBound(std::uint32_t i) const {
    std::int64_t total = -2;
    for (std::uint32_t j = 0; j <= maxD_; ++j) {
        const auto g = static_cast<std::int64_t>(gamma(j));
        const std::int64_t gap = static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i);
        if (directed_)
            total += gap <= 1 ? 2 * g : g * gap;
        else
            total += std::llabs(gap) <= 1 ? 2 * g : g * std::llabs(gap);
    }
    return total;
}

std::vector<std::pair<node, Farness>> levelLowerBounds(const Graph &g, node s,
                                                       const std::vector<node> &order,
                                                       const std::vector<std::uint32_t> &dist,
                                                       const std::vector<count> &levelCounts,
                                                       const ReachInfo &reach) {
    std::vector<std::pair<node, Farness>> out;
    if (levelCounts.size() < 2)
        return out;
    const LevelProfile profile(levelCounts, g.isDirected());
    const auto &bounds = profile.bounds();
    const count r = order.size();
    out.reserve(order.size());
    for (node v : order) {
        if (v == s)
            continue;
        if (g.isDirected() && reach.component[v] != reach.component[s])
            continue;
        const std::int64_t sum = bounds[dist[v]] - static_cast<std::int64_t>(g.degree(v));
        out.emplace_back(v, farnessBound(sum, r));
    }
    return out;
}

std::vector<std::pair<node, Farness>> levelLowerBounds(const Graph &g, node s,
                                                       const ReachInfo &reach) {
    BfsScratch scratch(g.numberOfNodes());
    const LevelSummary summary = bfsLevels(g, s, scratch);
    auto out = levelLowerBounds(g, s, scratch.queue, scratch.dist, summary.levelCounts, reach);
    scratch.clear();
    return out;
}

} // namespace tkc
