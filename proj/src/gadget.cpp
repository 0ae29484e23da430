#include "tkc/gadget.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include "tkc/topk.hpp"

namespace tkc {

std::string GadgetGraph::roleName(node v) const {
    switch (role[v]) {
    case GadgetRole::Z:
        return "Z";
    case GadgetRole::Y:
        return "Y";
    case GadgetRole::C0:
        return "C0";
    case GadgetRole::X1:
        return "X1";
    case GadgetRole::X2:
        return "X2";
    case GadgetRole::Chain:
        return "C" + std::to_string(layer[v]);
    }
    return "?";
}

namespace {

std::vector<std::vector<std::size_t>> elementIndices(const TdsInstance &inst) {
    std::unordered_map<int, std::size_t> index;
    for (std::size_t i = 0; i < inst.ground.size(); ++i)
        if (!index.emplace(inst.ground[i], i).second)
            throw std::invalid_argument("repeated ground element " +
                                        std::to_string(inst.ground[i]));
    std::vector<std::vector<std::size_t>> out;
    out.reserve(inst.sets.size());
    for (const auto &set : inst.sets) {
        std::vector<std::size_t> members;
        for (int x : set) {
            auto it = index.find(x);
            if (it == index.end())
                throw std::invalid_argument("set element " + std::to_string(x) +
                                            " is not in the ground set");
            members.push_back(it->second);
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool intersects(const std::vector<std::size_t> &a, const std::vector<std::size_t> &b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j])
            return true;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return false;
}

} // namespace

GadgetGraph buildGadget(const TdsInstance &inst, std::uint32_t p, std::uint32_t q) {
    if (inst.sets.empty())
        throw std::invalid_argument("the collection is empty");
    if (p < 1 || q < 1)
        throw std::invalid_argument("p and q must be positive");
    const auto members = elementIndices(inst);
    const std::size_t c = inst.sets.size();
    const std::size_t x = inst.ground.size();

    const node zBase = 0;
    const node yBase = static_cast<node>(zBase + q * c);
    const node c0Base = yBase + q;
    const node x1Base = static_cast<node>(c0Base + c);
    const node x2Base = static_cast<node>(x1Base + x);
    const node chainBase = static_cast<node>(x2Base + x);
    const std::size_t n = chainBase + p * c;
    auto chain = [&](std::uint32_t i, std::size_t set) {
        return static_cast<node>(chainBase + (i - 1) * c + set);
    };

    GadgetGraph out;
    out.p = p;
    out.q = q;
    out.role.resize(n);
    out.layer.assign(n, 0);
    out.item.assign(n, 0);
    for (node v = zBase; v < yBase; ++v)
        out.role[v] = GadgetRole::Z;
    for (node v = yBase; v < c0Base; ++v)
        out.role[v] = GadgetRole::Y;
    for (std::size_t s = 0; s < c; ++s) {
        out.role[c0Base + s] = GadgetRole::C0;
        out.item[c0Base + s] = static_cast<std::uint32_t>(s);
        for (std::uint32_t i = 1; i <= p; ++i) {
            out.role[chain(i, s)] = GadgetRole::Chain;
            out.layer[chain(i, s)] = i;
            out.item[chain(i, s)] = static_cast<std::uint32_t>(s);
        }
    }
    for (std::size_t e = 0; e < x; ++e) {
        out.role[x1Base + e] = GadgetRole::X1;
        out.role[x2Base + e] = GadgetRole::X2;
        out.item[x1Base + e] = out.item[x2Base + e] = static_cast<std::uint32_t>(e);
    }

    std::vector<std::pair<node, node>> arcs;
    for (std::uint32_t y = 0; y < q; ++y)
        for (std::size_t j = 0; j < c; ++j)
            arcs.emplace_back(yBase + y, static_cast<node>(zBase + y * c + j));
    for (std::size_t s = 0; s < c; ++s) {
        const node c0 = static_cast<node>(c0Base + s);
        for (std::uint32_t y = 0; y < q; ++y)
            arcs.emplace_back(c0, yBase + y);
        std::vector<bool> inSet(x, false);
        for (std::size_t e : members[s]) {
            inSet[e] = true;
            arcs.emplace_back(c0, static_cast<node>(x1Base + e));
            arcs.emplace_back(static_cast<node>(x1Base + e), chain(1, s));
        }
        for (std::size_t e = 0; e < x; ++e)
            if (!inSet[e])
                arcs.emplace_back(c0, static_cast<node>(x2Base + e));
        for (std::uint32_t i = 1; i < p; ++i)
            arcs.emplace_back(chain(i, s), chain(i + 1, s));
    }
    out.graph = Graph::fromEdges(n, arcs, true);
    return out;
}

std::size_t intersectingSets(const TdsInstance &inst, std::size_t c) {
    const auto members = elementIndices(inst);
    std::size_t meets = 0;
    for (const auto &other : members)
        meets += intersects(members.at(c), other) ? 1 : 0;
    return meets;
}

Farness gadgetFarness(const TdsInstance &inst, std::size_t meets, std::uint32_t p,
                      std::uint32_t q) {
    const count c = inst.sets.size();
    const count x = inst.ground.size();
    const count g = static_cast<count>(p + 1) * (p + 2) / 2 - 1;
    // Y at distance 1, Z at 2, every element at 1, C_i at i+1 for meeting sets
    const count sum = q * (1 + 2 * c) + x + g * meets;
    const count reached = 1 + q * (1 + c) + x + static_cast<count>(p) * meets;
    return Farness(sum, reached);
}

bool bruteTwoDisjointSets(const TdsInstance &inst) {
    const auto members = elementIndices(inst);
    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b)
            if (!intersects(members[a], members[b]))
                return true;
    return false;
}

bool decideViaCentrality(const TdsInstance &inst) {
    const std::size_t c = inst.sets.size();
    const std::size_t x = inst.ground.size();
    if (c < 2 || x == 0 || x > c)
        return bruteTwoDisjointSets(inst);
    const GadgetGraph gadget = buildGadget(inst);
    const TopKResult best = topk(gadget.graph, 1, Variant::NBCut, Measure::Closeness);
    return best.kthFarness != gadgetFarness(inst, c, gadget.p, gadget.q);
}

void writeGadget(const GadgetGraph &gadget, std::ostream &edges, std::ostream &roles) {
    writeEdgeList(gadget.graph, edges);
    for (node v = 0; v < gadget.graph.numberOfNodes(); ++v)
        roles << gadget.graph.label(v) << ' ' << gadget.roleName(v) << '\n';
}

} // namespace tkc
