#ifndef DSTAB_DIAGRAM_HPP
#define DSTAB_DIAGRAM_HPP

#include "dstab/family.hpp"

#include <compare>
#include <cstddef>
#include <vector>

namespace dstab {

// A partition of {-n,...,-1} u {1,...,n} into nonempty blocks.  Negative
// labels are the left column of the picture, positive labels the right
// column.  Canonical form: elements ascending within each block, blocks
// ascending by first element; equality is structural.
struct PartitionDiagram {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    auto operator<=>(const PartitionDiagram&) const = default;
};

// Validates and canonicalizes.  Throws std::invalid_argument unless the
// blocks partition {-n,...,-1} u {1,...,n} exactly.
PartitionDiagram make_diagram(int n, std::vector<std::vector<int>> blocks);

PartitionDiagram identity(int n);

// Every block is {-i, j}: the diagram of a permutation.
bool is_invertible(const PartitionDiagram& d);

// Every block has exactly two elements.
bool is_matching(const PartitionDiagram& d);

// Planarity of a matching.  Boundary order: -1,...,-n down the left side,
// then n,...,1 up the right side; planar means no two chords interleave in
// this order.  Throws unless is_matching(d).
bool is_noncrossing(const PartitionDiagram& d);

// P accepts every diagram, Br the matchings, TL the noncrossing matchings.
bool family_valid(Family family, const PartitionDiagram& d);

struct CompositionResult {
    int loops = 0;            // exponent of the scalar factor
    PartitionDiagram diagram; // the surviving outer diagram
};

// Glue the right dots of p to the left dots of r (j to -j), join the two
// partitions across the tripled dot set, and restrict to the outer dots.
// Middle-only connected components are counted as loops.
CompositionResult compose(const PartitionDiagram& p, const PartitionDiagram& r);

// p on top of q: q keeps its shape, its labels shifted outward by p.n.
PartitionDiagram tensor(const PartitionDiagram& p, const PartitionDiagram& q);

// All family-valid diagrams on n dots, ascending in the diagram order
// (blocks compared lexicographically); cached after the first call.  The
// order is a public contract: basis indices elsewhere refer to it.
const std::vector<PartitionDiagram>& enumerate_diagrams(Family family, int n);

// Position of d in enumerate_diagrams(family, d.n); throws if d is not
// valid for the family.
std::size_t diagram_index(Family family, const PartitionDiagram& d);

// The permutation x -> x+b (x <= a), x -> x-a (x > a) as a diagram on a+b
// dots; swaps a leading block of size a past a trailing block of size b.
PartitionDiagram block_transposition(int a, int b);

} // namespace dstab

#endif
