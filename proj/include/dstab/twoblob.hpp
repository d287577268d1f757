#ifndef DSTAB_TWOBLOB_HPP
#define DSTAB_TWOBLOB_HPP

#include <compare>
#include <optional>
#include <vector>

#include "dstab/hom.hpp"

namespace dstab {

// Basis element of the double quotient  triv ⊗_{A_n} A_{n+a} ⊗_{A_{n+a-m}} triv,
// drawn as a diagram with a valence-n blob on the left column and a valence-
// (n+a-m) blob on the right.  Collapsing the bottom n left dots and the bottom
// n+a-m right dots of an (n+a)-diagram leaves blocks over the kept dots
// -1..-a and 1..m; a block remembers whether it reached into either collapsed
// region via the two mark lists.  Blocks that consisted of one dot from each
// collapsed region vanish entirely and are interchangeable, so only their
// number survives: `pure` counts the blob-to-blob strands.
//
// Valences: left_marked.size() + pure == n,
//           right_marked.size() + pure == n + a - m.
struct TwoBlobDiagram {
    Family family = Family::TL;
    int n = 0;
    int a = 0;
    int m = 0;
    int pure = 0;
    std::vector<std::vector<int>> blocks;
    std::vector<int> left_marked;
    std::vector<int> right_marked;

    auto operator<=>(const TwoBlobDiagram&) const = default;
};

// Validates and canonicalizes: blocks partition {-a..-1} u {1..m}, sorted
// internally and ordered by least element, mark indices remapped accordingly.
// TL/Br additionally require marked blocks to be singletons, unmarked blocks
// to be pairs, and no block to carry both marks (a both-marked pair is a pure
// strand and belongs in `pure`); P allows both marks on one block.  TL
// requires the canonical lift to be planar.  Throws std::invalid_argument.
TwoBlobDiagram make_two_blob(Family family, int n, int a, int m, int pure,
                             std::vector<std::vector<int>> blocks,
                             std::vector<int> left_marked,
                             std::vector<int> right_marked);

// Collapses d (an (a+n)-diagram, n = d.n - a) on both sides: left dots
// -(a+1)..-d.n and right dots m+1..d.n.  nullopt when d dies in either
// quotient: a block holding two dots from the same collapsed region, or a
// collapsed dot alone in a singleton.  Requires 0 <= a <= d.n, 0 <= m <= d.n.
std::optional<TwoBlobDiagram> two_blob_project(Family family,
                                               const PartitionDiagram& d,
                                               int a, int m);

// Canonical preimage of t under two_blob_project: the k-th left-marked block
// receives dot -(a+1+k), the k-th right-marked block receives dot (n+a-pure)-k,
// and the j-th pure strand becomes {-(n+a-j), n+a-j} hugging the bottom edge.
// For TL this is the unique planar candidate (swapping any two reattachments
// makes their chords interleave), so t is TL-valid iff the lift is planar.
PartitionDiagram two_blob_lift(const TwoBlobDiagram& t);

// All distinct projections of the diagram basis of A_{n+a}, sorted.  Cached;
// the returned reference stays valid.  Empty when m > n + a.
const std::vector<TwoBlobDiagram>& two_blob_basis(Family family, int n, int a,
                                                  int m);

// The stabilization map on basis elements: adds one pure blob-to-blob strand,
// landing at (n+1, a, m).  Injective; surjective onto the pure >= 1 elements.
TwoBlobDiagram phi_star(const TwoBlobDiagram& t);

}  // namespace dstab

#endif
