#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tkc/farness.hpp"
#include "tkc/graph.hpp"

namespace tkc {

/// A collection of subsets of a ground set; asks whether two members are
/// disjoint.
struct TdsInstance {
    std::vector<int> ground;
    std::vector<std::vector<int>> sets;
};

enum class GadgetRole : std::uint8_t { Z, Y, C0, X1, X2, Chain };

/**
 * Directed graph in which the most closeness-central node is a copy of the
 * set meeting the fewest other sets.
 *
 * Every node of C0 (one per set) points to all q nodes of Y, and each Y node
 * to |C| private nodes of Z. A set points to its elements in X1 and to the
 * other elements in X2. An element x in X1 points to every set containing
 * it in C1, and C1 continues through chains C1 -> C2 -> ... -> Cp.
 */
struct GadgetGraph {
    Graph graph;
    std::vector<GadgetRole> role;
    std::vector<std::uint32_t> layer; // i for nodes of C_i, 0 otherwise
    std::vector<std::uint32_t> item;  // set or element index where meaningful
    std::uint32_t p = 7;
    std::uint32_t q = 36;

    /// "Z", "Y", "C0", "X1", "X2" or "C<i>".
    std::string roleName(node v) const;
};

/// Throws std::invalid_argument on an empty collection, a repeated ground
/// element, a set element outside the ground set, or p, q < 1.
GadgetGraph buildGadget(const TdsInstance &inst, std::uint32_t p = 7, std::uint32_t q = 36);

/// Number of sets (itself included) that share an element with sets[c].
std::size_t intersectingSets(const TdsInstance &inst, std::size_t c);

/// Exact farness pair of a C0 node whose set meets `meets` sets.
Farness gadgetFarness(const TdsInstance &inst, std::size_t meets, std::uint32_t p = 7,
                      std::uint32_t q = 36);

/// Pairwise intersection test.
bool bruteTwoDisjointSets(const TdsInstance &inst);

/**
 * Decides the instance from the top-1 closeness node of its gadget: two
 * disjoint sets exist iff that node is not at the farness of a set meeting
 * every set. Outside 0 < |X| <= |C|, |C| >= 2 the gadget argument does not
 * apply and the pairwise test answers instead.
 */
bool decideViaCentrality(const TdsInstance &inst);

/// Edge list of the gadget plus "node role" lines.
void writeGadget(const GadgetGraph &gadget, std::ostream &edges, std::ostream &roles);

} // namespace tkc
