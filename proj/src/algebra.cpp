#include "dstab/algebra.hpp"

#include <stdexcept>

namespace dstab {

void AlgebraElement::add_term(const PartitionDiagram& d,
                              const DeltaPolynomial& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(d, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

AlgebraElement zero_element(Family family, int n) {
    return AlgebraElement{family, n, {}};
}

AlgebraElement unit(Family family, int n) {
    AlgebraElement e = zero_element(family, n);
    e.add_term(identity(n), 1);
    return e;
}

AlgebraElement basis_element(Family family, const PartitionDiagram& d) {
    if (!family_valid(family, d))
        throw std::invalid_argument("basis_element: diagram not valid for " +
                                    std::string(family_name(family)));
    AlgebraElement e = zero_element(family, d.n);
    e.add_term(d, 1);
    return e;
}

static void require_compatible(const AlgebraElement& x, const AlgebraElement& y,
                               const char* who) {
    if (x.family != y.family || x.n != y.n)
        throw std::invalid_argument(std::string(who) +
                                    ": family or size mismatch");
}

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
    require_compatible(x, y, "add");
    AlgebraElement out = x;
    for (const auto& [d, c] : y.terms) out.add_term(d, c);
    return out;
}

AlgebraElement subtract(const AlgebraElement& x, const AlgebraElement& y) {
    require_compatible(x, y, "subtract");
    AlgebraElement out = x;
    for (const auto& [d, c] : y.terms) out.add_term(d, -c);
    return out;
}

AlgebraElement scale(const AlgebraElement& x, const DeltaPolynomial& c) {
    AlgebraElement out = zero_element(x.family, x.n);
    for (const auto& [d, p] : x.terms) out.add_term(d, p * c);
    return out;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
    require_compatible(x, y, "multiply");
    AlgebraElement out = zero_element(x.family, x.n);
    for (const auto& [dx, cx] : x.terms) {
        for (const auto& [dy, cy] : y.terms) {
            CompositionResult pr = compose(dx, dy);
            out.add_term(pr.diagram,
                         cx * cy * DeltaPolynomial::monomial(pr.loops));
        }
    }
    return out;
}

std::vector<Rational> specialize(const AlgebraElement& x, const Rational& delta0) {
    const auto& basis = enumerate_diagrams(x.family, x.n);
    std::vector<Rational> out(basis.size(), Rational(0));
    for (const auto& [d, c] : x.terms)
        out[diagram_index(x.family, d)] = c.evaluate(delta0);
    return out;
}

int trivial_action(const PartitionDiagram& d) {
    return is_invertible(d) ? 1 : 0;
}

} // namespace dstab
