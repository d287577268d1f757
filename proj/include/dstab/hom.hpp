#ifndef DSTAB_HOM_HPP
#define DSTAB_HOM_HPP

#include "dstab/algebra.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace dstab {

// Basis element of Hom(m, n), m <= n: a partition of {-n,...,-1} u {1,...,m}
// with exactly n - m marked blocks recording where the collapsed right dots
// m+1..n used to attach.  For TL and Br every unmarked block is a pair and
// every marked block is a singleton (one strand into the blob); for P marked
// blocks may have any size.  Markings are an unordered set of distinct
// blocks.  Canonical form: blocks as in PartitionDiagram, `marked` holding
// sorted indices into `blocks`.
struct HomDiagram {
    Family family = Family::TL;
    int n = 0;
    int m = 0;
    std::vector<std::vector<int>> blocks;
    std::vector<int> marked;

    auto operator<=>(const HomDiagram&) const = default;
};

// Validates and canonicalizes; `marked` refers to positions in the `blocks`
// argument and is remapped.  Throws std::invalid_argument on a malformed
// partition, a wrong mark count, family-invalid block shapes, or (TL) a
// marked structure whose canonical lift crosses.
HomDiagram make_hom_diagram(Family family, int n, int m,
                            std::vector<std::vector<int>> blocks,
                            std::vector<int> marked);

// Collapse the right dots m+1..n of d.  Returns nullopt exactly when d dies
// in the quotient: for TL/Br when some pair lies inside {m+1,...,n}, for P
// when some block meets {m+1,...,n} twice or is a singleton {i} with i > m.
// Otherwise each block keeps its other elements and becomes marked.
std::optional<HomDiagram> project_diagram(Family family,
                                          const PartitionDiagram& d, int m);

// Section of project_diagram: rebuild an n-diagram by reattaching the right
// dots m+1..n to the marked blocks, the k-th marked block in block order
// receiving dot n-k.  Sends the stabilization element to the identity; for
// TL this nested routing is the unique planar one.
PartitionDiagram canonical_lift(const HomDiagram& h);

// All basis elements of Hom(m, n), ascending, cached; empty when m > n.
const std::vector<HomDiagram>& hom_basis(Family family, int m, int n);

// Element of Hom(source, target); zero iff terms is empty.  Morphisms with
// source > target exist only as zero.
struct Morphism {
    Family family = Family::TL;
    int source = 0;
    int target = 0;
    std::map<HomDiagram, DeltaPolynomial> terms;

    bool operator==(const Morphism&) const = default;
    bool is_zero() const { return terms.empty(); }
    void add_term(const HomDiagram& h, const DeltaPolynomial& coeff);
};

Morphism zero_morphism(Family family, int m, int n);
Morphism basis_morphism(const HomDiagram& h);
Morphism add(const Morphism& a, const Morphism& b);
Morphism scale(const Morphism& h, const DeltaPolynomial& c);

// Linear extension of project_diagram; the result has source m, target x.n.
// Throws std::invalid_argument if m > x.n or m < 0.
Morphism project(const AlgebraElement& x, int m);

// The stabilization morphism m -> n: project(identity(n), m).
Morphism phi(Family family, int m, int n);

Morphism identity_morphism(Family family, int n);

// g after f.  Basis terms are lifted, multiplied in the target algebra (the
// lift of f padded with identity strands), and projected; delta powers from
// closed loops are carried.  Zero whenever f or g is zero (in particular
// when the objects only admit the zero morphism).  Throws on family mismatch
// or f.target != g.source.
Morphism compose_morphisms(const Morphism& g, const Morphism& f);

// The A_n-module structure on Hom(m, n): multiply x against the lift of
// each basis term, then project.  Throws unless x.n == h.target.
Morphism left_action(const AlgebraElement& x, const Morphism& h);

// Monoidal sum of f: a -> a+b and g: c -> c+d, a morphism a+c -> a+b+c+d:
// stack the lifts, then braid the b new strands of f past the c source
// strands of g before projecting.  Br and P only; throws for TL, whose
// strand crossings leave the family.
Morphism monoidal_sum(const Morphism& f, const Morphism& g);

}  // namespace dstab

#endif
