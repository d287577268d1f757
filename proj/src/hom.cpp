#include "dstab/hom.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace dstab {

namespace {

// Reattach the collapsed right dots m+1..n to the marked blocks: the k-th
// marked block in block order gets dot n-k.  This sends the stabilization
// element to the identity, and for TL it is the only routing that can come
// out planar: swapping any two legs makes their chords interleave.
PartitionDiagram lift_diagram(const HomDiagram& h) {
    std::vector<std::vector<int>> blocks = h.blocks;
    int dot = h.n;
    for (int idx : h.marked) blocks[std::size_t(idx)].push_back(dot--);
    return make_diagram(h.n, std::move(blocks));
}

}  // namespace

HomDiagram make_hom_diagram(Family family, int n, int m,
                            std::vector<std::vector<int>> blocks,
                            std::vector<int> marked) {
    if (n < 0 || m < 0 || m > n)
        throw std::invalid_argument("make_hom_diagram: need 0 <= m <= n");
    std::vector<char> seen(std::size_t(n + m), 0);
    for (auto& block : blocks) {
        if (block.empty())
            throw std::invalid_argument("make_hom_diagram: empty block");
        for (int e : block) {
            if (e == 0 || e < -n || e > m)
                throw std::invalid_argument(
                    "make_hom_diagram: label out of range");
            std::size_t slot = std::size_t(e < 0 ? e + n : n + e - 1);
            if (seen[slot])
                throw std::invalid_argument(
                    "make_hom_diagram: repeated label");
            seen[slot] = 1;
        }
        std::sort(block.begin(), block.end());
    }
    for (char s : seen)
        if (!s)
            throw std::invalid_argument("make_hom_diagram: labels not covered");

    // Canonical block order; marks follow their blocks.
    std::vector<int> order(blocks.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return blocks[std::size_t(i)] < blocks[std::size_t(j)];
    });
    std::vector<int> rank(blocks.size());
    for (std::size_t k = 0; k < order.size(); ++k)
        rank[std::size_t(order[k])] = int(k);

    HomDiagram h;
    h.family = family;
    h.n = n;
    h.m = m;
    h.blocks.resize(blocks.size());
    for (std::size_t k = 0; k < order.size(); ++k)
        h.blocks[k] = std::move(blocks[std::size_t(order[k])]);

    if (int(marked.size()) != n - m)
        throw std::invalid_argument("make_hom_diagram: need n - m marks");
    for (int& idx : marked) {
        if (idx < 0 || idx >= int(h.blocks.size()))
            throw std::invalid_argument("make_hom_diagram: mark out of range");
        idx = rank[std::size_t(idx)];
    }
    std::sort(marked.begin(), marked.end());
    if (std::adjacent_find(marked.begin(), marked.end()) != marked.end())
        throw std::invalid_argument("make_hom_diagram: block marked twice");
    h.marked = std::move(marked);

    if (family != Family::P) {
        std::vector<char> is_marked(h.blocks.size(), 0);
        for (int idx : h.marked) is_marked[std::size_t(idx)] = 1;
        for (std::size_t i = 0; i < h.blocks.size(); ++i) {
            std::size_t want = is_marked[i] ? 1 : 2;
            if (h.blocks[i].size() != want)
                throw std::invalid_argument(
                    "make_hom_diagram: matching families need marked "
                    "singletons and unmarked pairs");
        }
        if (family == Family::TL && !is_noncrossing(lift_diagram(h)))
            throw std::invalid_argument("make_hom_diagram: crossing TL legs");
    }
    return h;
}

std::optional<HomDiagram> project_diagram(Family family,
                                          const PartitionDiagram& d, int m) {
    if (m < 0 || m > d.n)
        throw std::invalid_argument("project_diagram: need 0 <= m <= n");
    std::vector<std::vector<int>> kept;
    std::vector<int> marks;
    for (const auto& block : d.blocks) {
        int collapsed = 0;
        std::vector<int> rest;
        for (int e : block) {
            if (e > m)
                ++collapsed;
            else
                rest.push_back(e);
        }
        if (family == Family::P) {
            if (collapsed >= 2) return std::nullopt;
            if (collapsed == 1 && rest.empty()) return std::nullopt;
        } else {
            if (collapsed >= 2) return std::nullopt;
        }
        if (collapsed > 0) marks.push_back(int(kept.size()));
        kept.push_back(std::move(rest));
    }
    return make_hom_diagram(family, d.n, m, std::move(kept), std::move(marks));
}

PartitionDiagram canonical_lift(const HomDiagram& h) { return lift_diagram(h); }

const std::vector<HomDiagram>& hom_basis(Family family, int m, int n) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("hom_basis: negative size");
    static std::map<std::tuple<Family, int, int>, std::vector<HomDiagram>>
        cache;
    static std::mutex mtx;
    std::tuple<Family, int, int> key{family, m, n};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::vector<HomDiagram> out;
    if (m <= n) {
        std::set<HomDiagram> distinct;
        for (const auto& d : enumerate_diagrams(family, n))
            if (auto h = project_diagram(family, d, m))
                distinct.insert(std::move(*h));
        out.assign(distinct.begin(), distinct.end());
    }
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

void Morphism::add_term(const HomDiagram& h, const DeltaPolynomial& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms.emplace(h, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms.erase(it);
    }
}

Morphism zero_morphism(Family family, int m, int n) {
    return Morphism{family, m, n, {}};
}

Morphism basis_morphism(const HomDiagram& h) {
    Morphism f = zero_morphism(h.family, h.m, h.n);
    f.add_term(h, 1);
    return f;
}

static void require_parallel(const Morphism& a, const Morphism& b,
                             const char* who) {
    if (a.family != b.family || a.source != b.source || a.target != b.target)
        throw std::invalid_argument(std::string(who) +
                                    ": family or object mismatch");
}

Morphism add(const Morphism& a, const Morphism& b) {
    require_parallel(a, b, "add");
    Morphism out = a;
    for (const auto& [h, c] : b.terms) out.add_term(h, c);
    return out;
}

Morphism scale(const Morphism& h, const DeltaPolynomial& c) {
    Morphism out = zero_morphism(h.family, h.source, h.target);
    for (const auto& [b, coeff] : h.terms) out.add_term(b, coeff * c);
    return out;
}

Morphism project(const AlgebraElement& x, int m) {
    if (m < 0 || m > x.n)
        throw std::invalid_argument("project: need 0 <= m <= n");
    Morphism out = zero_morphism(x.family, m, x.n);
    for (const auto& [d, c] : x.terms)
        if (auto h = project_diagram(x.family, d, m)) out.add_term(*h, c);
    return out;
}

Morphism phi(Family family, int m, int n) {
    if (m < 0 || n < 0 || m > n)
        throw std::invalid_argument("phi: need 0 <= m <= n");
    return project(unit(family, n), m);
}

Morphism identity_morphism(Family family, int n) {
    return phi(family, n, n);
}

Morphism compose_morphisms(const Morphism& g, const Morphism& f) {
    if (f.family != g.family)
        throw std::invalid_argument("compose_morphisms: family mismatch");
    if (f.target != g.source)
        throw std::invalid_argument("compose_morphisms: object mismatch");
    Morphism out = zero_morphism(f.family, f.source, g.target);
    if (f.terms.empty() || g.terms.empty()) return out;
    const int n = g.target, m = g.source, l = f.source;
    const PartitionDiagram pad = identity(n - m);
    for (const auto& [hg, cg] : g.terms) {
        const PartitionDiagram dg = canonical_lift(hg);
        for (const auto& [hf, cf] : f.terms) {
            auto pr = compose(dg, tensor(canonical_lift(hf), pad));
            if (auto h = project_diagram(f.family, pr.diagram, l))
                out.add_term(*h,
                             cg * cf * DeltaPolynomial::monomial(pr.loops));
        }
    }
    return out;
}

Morphism left_action(const AlgebraElement& x, const Morphism& h) {
    if (x.family != h.family)
        throw std::invalid_argument("left_action: family mismatch");
    if (x.n != h.target)
        throw std::invalid_argument("left_action: size mismatch");
    Morphism out = zero_morphism(h.family, h.source, h.target);
    for (const auto& [hb, cb] : h.terms) {
        const PartitionDiagram lb = canonical_lift(hb);
        for (const auto& [d, cx] : x.terms) {
            auto pr = compose(d, lb);
            if (auto ph = project_diagram(h.family, pr.diagram, h.source))
                out.add_term(*ph,
                             cx * cb * DeltaPolynomial::monomial(pr.loops));
        }
    }
    return out;
}

Morphism monoidal_sum(const Morphism& f, const Morphism& g) {
    if (f.family != g.family)
        throw std::invalid_argument("monoidal_sum: family mismatch");
    if (f.family == Family::TL)
        throw std::invalid_argument(
            "monoidal_sum: strand crossings leave TL; Br and P only");
    const int a = f.source, b = f.target - f.source;
    const int c = g.source, d = g.target - g.source;
    Morphism out =
        zero_morphism(f.family, a + c, f.target + g.target);
    if (f.terms.empty() || g.terms.empty()) return out;
    // The braid moves f's b new strands past g's c kept strands so the
    // result lists f's target block before g's.
    const PartitionDiagram braid =
        tensor(identity(a), tensor(block_transposition(b, c), identity(d)));
    for (const auto& [hf, cf] : f.terms) {
        const PartitionDiagram df = canonical_lift(hf);
        for (const auto& [hg, cg] : g.terms) {
            auto pr = compose(tensor(df, canonical_lift(hg)), braid);
            if (auto h = project_diagram(f.family, pr.diagram, a + c))
                out.add_term(*h,
                             cf * cg * DeltaPolynomial::monomial(pr.loops));
        }
    }
    return out;
}

}  // namespace dstab
