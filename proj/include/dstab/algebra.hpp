#ifndef DSTAB_ALGEBRA_HPP
#define DSTAB_ALGEBRA_HPP

#include "dstab/delta_poly.hpp"
#include "dstab/diagram.hpp"

#include <map>
#include <vector>

namespace dstab {

// Element of the diagram algebra on n dots: a finite sum of family-valid
// diagrams with polynomial coefficients.  Terms are kept sorted by the
// canonical diagram order and never store a zero coefficient.
struct AlgebraElement {
    Family family = Family::TL;
    int n = 0;
    std::map<PartitionDiagram, DeltaPolynomial> terms;

    bool operator==(const AlgebraElement& o) const = default;
    bool is_zero() const { return terms.empty(); }

    // terms[d] += c, erasing the entry if it cancels to zero
    void add_term(const PartitionDiagram& d, const DeltaPolynomial& c);
};

AlgebraElement zero_element(Family family, int n);
AlgebraElement unit(Family family, int n);

// Single diagram with coefficient one; rejects diagrams outside the family.
AlgebraElement basis_element(Family family, const PartitionDiagram& d);

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement subtract(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement scale(const AlgebraElement& x, const DeltaPolynomial& c);

// Bilinear extension of diagram composition; loops become powers of the
// parameter.
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

// Coefficient vector over enumerate_diagrams(family, n) with the parameter
// evaluated at delta0.
std::vector<Rational> specialize(const AlgebraElement& x, const Rational& delta0);

// 1 on permutation diagrams, 0 on everything else; extended linearly this
// is the algebra map onto the trivial one-dimensional module.
int trivial_action(const PartitionDiagram& d);

} // namespace dstab

#endif
