#include "dstab/verifier.hpp"

#include "dstab/hom.hpp"
#include "dstab/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace dstab {

namespace {

void require_admissible(Family family, const Rational& delta0, int size) {
    ParameterStatus status = check_parameter(family, delta0, size);
    if (!status.admissible)
        throw std::invalid_argument("parameter " + rational_string(delta0) +
                                    " is not admissible for " + family_name(family) +
                                    "_" + std::to_string(size) + ": " + status.reason);
}

// Installs the relation  delta^loops * e_{prod} - [unit] * e_b = 0.
void impose(BinomialQuotient& q, Family family, std::size_t b,
            const CompositionResult& res, bool unit, const Rational& delta0) {
    std::size_t c = diagram_index(family, res.diagram);
    Rational coeff = rational_pow(delta0, static_cast<unsigned>(res.loops));
    if (unit) {
        if (coeff == 0)
            q.kill(b);  // the product term vanished, leaving -e_b = 0
        else
            q.relate(c, b, Rational(1) / coeff);
    } else if (coeff != 0) {
        q.kill(c);
    }
}

// Free module on all n-dot diagrams modulo the right action of A_{n-m} on
// the trivial module: b*emb(w) ~ e(w)*b with e = 1 on permutation diagrams
// and 0 elsewhere.
BinomialQuotient hom_presentation(Family family, int m, int n,
                                  const Rational& delta0) {
    const auto& basis = enumerate_diagrams(family, n);
    BinomialQuotient q(basis.size());
    const PartitionDiagram one = identity(n);
    for (const auto& w : enumerate_diagrams(family, n - m)) {
        PartitionDiagram emb = tensor(identity(m), w);
        if (emb == one) continue;  // b*(1 - 1) = 0
        bool unit = is_invertible(w);
        for (std::size_t b = 0; b < basis.size(); ++b)
            impose(q, family, b, compose(basis[b], emb), unit, delta0);
    }
    return q;
}

// The two-sided version on (n+a)-dot diagrams: the right-embedded A_{n+a-m}
// as above, plus the left-embedded A_n (last n dots) acting from the left.
BinomialQuotient two_blob_presentation(Family family, int n, int a, int m,
                                       const Rational& delta0) {
    const auto& basis = enumerate_diagrams(family, n + a);
    BinomialQuotient q(basis.size());
    const PartitionDiagram one = identity(n + a);
    for (const auto& w : enumerate_diagrams(family, n + a - m)) {
        PartitionDiagram emb = tensor(identity(m), w);
        if (emb == one) continue;
        bool unit = is_invertible(w);
        for (std::size_t b = 0; b < basis.size(); ++b)
            impose(q, family, b, compose(basis[b], emb), unit, delta0);
    }
    for (const auto& w : enumerate_diagrams(family, n)) {
        PartitionDiagram emb = tensor(identity(a), w);
        if (emb == one) continue;
        bool unit = is_invertible(w);
        for (std::size_t b = 0; b < basis.size(); ++b)
            impose(q, family, b, compose(emb, basis[b]), unit, delta0);
    }
    return q;
}

Integer count_of(std::size_t s) { return Integer(static_cast<unsigned long>(s)); }

// Closed-form diagram counts, used to decide whether a presentation is small
// enough to cross-check without triggering a huge cached enumeration.
Integer diagram_count(Family family, int k) {
    if (k < 0) return 0;
    switch (family) {
    case Family::TL: {
        Integer c;
        mpz_bin_uiui(c.get_mpz_t(), 2 * static_cast<unsigned long>(k),
                     static_cast<unsigned long>(k));
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(),
                        static_cast<unsigned long>(k) + 1);
        return c;
    }
    case Family::Br: {
        Integer c = 1;
        for (int i = 3; i <= 2 * k - 1; i += 2) c *= i;
        return c;
    }
    case Family::P: {
        // Bell number of 2k dots, by the Bell triangle.
        std::vector<Integer> row{1};
        for (int i = 1; i <= 2 * k; ++i) {
            std::vector<Integer> next{row.back()};
            for (const Integer& x : row) next.push_back(next.back() + x);
            row = std::move(next);
        }
        return row.front();
    }
    }
    throw std::logic_error("unreachable");
}

// Presentations beyond this many diagrams are not re-derived per cell.
constexpr long kOracleBudget = 450;
// Dense rank cross-checks are skipped past this basis size.
constexpr std::size_t kRankBudget = 600;

std::size_t basis_position(const std::vector<TwoBlobDiagram>& basis,
                           const TwoBlobDiagram& t) {
    auto it = std::lower_bound(basis.begin(), basis.end(), t);
    if (it == basis.end() || *it != t)
        throw std::logic_error("stabilization image escapes the target basis");
    return static_cast<std::size_t>(it - basis.begin());
}

}  // namespace

Integer oracle_hom_rank(Family family, int m, int n, const Rational& delta0) {
    if (m < 0 || n < 0 || m > n)
        throw std::invalid_argument("need 0 <= m <= n");
    require_admissible(family, delta0, n);
    return count_of(hom_presentation(family, m, n, delta0).dimension());
}

RankReport hom_rank_report(Family family, int m, int n, const Rational& delta0) {
    RankReport rep;
    rep.family = family;
    rep.m = m;
    rep.n = n;
    rep.delta0 = delta0;
    rep.rank = oracle_hom_rank(family, m, n, delta0);
    rep.count = count_of(hom_basis(family, m, n).size());
    rep.agree = (rep.rank == rep.count);
    return rep;
}

Integer oracle_two_blob_rank(Family family, int n, int a, int m,
                             const Rational& delta0) {
    if (n < 0 || a < 0 || m < 0)
        throw std::invalid_argument("need n, a, m >= 0");
    require_admissible(family, delta0, n + a);
    if (m > n + a) return 0;  // nothing of that valence exists to quotient
    return count_of(two_blob_presentation(family, n, a, m, delta0).dimension());
}

RankReport two_blob_rank_report(Family family, int n, int a, int m,
                                const Rational& delta0) {
    RankReport rep;
    rep.family = family;
    rep.m = m;
    rep.n = n;
    rep.a = a;
    rep.delta0 = delta0;
    rep.rank = oracle_two_blob_rank(family, n, a, m, delta0);
    rep.count = count_of(two_blob_basis(family, n, a, m).size());
    rep.agree = (rep.rank == rep.count);
    return rep;
}

std::vector<std::vector<Rational>> phi_star_matrix(Family family, int n, int a,
                                                   int m) {
    const auto& src = two_blob_basis(family, n, a, m);
    const auto& tgt = two_blob_basis(family, n + 1, a, m);
    std::vector<std::vector<Rational>> mat(
        tgt.size(), std::vector<Rational>(src.size(), Rational(0)));
    for (std::size_t j = 0; j < src.size(); ++j)
        mat[basis_position(tgt, phi_star(src[j]))][j] = 1;
    return mat;
}

std::vector<std::vector<Rational>> phi_star_matrix_oracle(Family family, int n,
                                                          int a, int m,
                                                          const Rational& delta0) {
    if (n < 0 || a < 0 || m < 0)
        throw std::invalid_argument("need n, a, m >= 0");
    require_admissible(family, delta0, n + 1 + a);
    const auto& src_basis = two_blob_basis(family, n, a, m);
    const auto& tgt_basis = two_blob_basis(family, n + 1, a, m);
    if (m > n + a)  // zero source space: a matrix with no columns
        return std::vector<std::vector<Rational>>(tgt_basis.size());

    BinomialQuotient sq = two_blob_presentation(family, n, a, m, delta0);
    BinomialQuotient tq = two_blob_presentation(family, n + 1, a, m, delta0);
    const auto& sdiag = enumerate_diagrams(family, n + a);
    const auto& tdiag = enumerate_diagrams(family, n + 1 + a);

    // Quotient classes must biject with the basis through projection: the
    // matrix is only meaningful over matched coordinates.
    auto class_map = [&](const BinomialQuotient& q,
                         const std::vector<PartitionDiagram>& diagrams,
                         const std::vector<TwoBlobDiagram>& basis) {
        std::vector<std::size_t> roots = q.representatives();
        if (roots.size() != basis.size())
            throw std::logic_error("quotient class count differs from the basis");
        std::map<std::size_t, std::size_t> to_basis;
        std::vector<char> seen(basis.size(), 0);
        for (std::size_t r : roots) {
            auto proj = two_blob_project(family, diagrams[r], a, m);
            if (!proj) throw std::logic_error("a live class projects to nothing");
            std::size_t pos = basis_position(basis, *proj);
            if (seen[pos])
                throw std::logic_error("two classes project to one basis element");
            seen[pos] = 1;
            to_basis.emplace(r, pos);
        }
        return to_basis;
    };
    auto src_map = class_map(sq, sdiag, src_basis);
    auto tgt_map = class_map(tq, tdiag, tgt_basis);

    std::vector<std::vector<Rational>> mat(
        tgt_basis.size(), std::vector<Rational>(src_basis.size(), Rational(0)));
    for (const auto& [root, col] : src_map) {
        PartitionDiagram image = tensor(sdiag[root], identity(1));
        auto canon = tq.canonical(diagram_index(family, image));
        if (!canon) continue;  // the image class is zero
        mat[tgt_map.at(canon->first)][col] = canon->second;
    }
    return mat;
}

StabilityReport measure_stability_degrees(Family family, int m, int a_max,
                                          int n_max, const Rational& delta0) {
    if (m < 0 || a_max < 0 || n_max < 1)
        throw std::invalid_argument("need m >= 0, a_max >= 0, n_max >= 1");
    require_admissible(family, delta0, n_max + a_max);

    StabilityReport rep;
    rep.family = family;
    rep.m = m;
    rep.n_max = n_max;
    rep.a_max = a_max;
    rep.predicted_injectivity = 0;
    rep.predicted_surjectivity = (family == Family::P) ? 2 * m : m;

    std::size_t vacuous = 0;
    std::size_t cross_checked = 0;
    for (int a = 0; a <= a_max; ++a) {
        for (int n = 0; n + 1 <= n_max; ++n) {
            const auto& src = two_blob_basis(family, n, a, m);
            const auto& tgt = two_blob_basis(family, n + 1, a, m);
            StabilityCell cell;
            cell.a = a;
            cell.n = n;
            cell.source_dim = count_of(src.size());
            cell.target_dim = count_of(tgt.size());
            cell.vacuous = src.empty() && tgt.empty();
            if (cell.vacuous) ++vacuous;

            std::vector<char> hit(tgt.size(), 0);
            std::size_t distinct = 0;
            for (const auto& s : src) {
                std::size_t pos = basis_position(tgt, phi_star(s));
                if (!hit[pos]) {
                    hit[pos] = 1;
                    ++distinct;
                }
            }
            cell.injective = (distinct == src.size());
            cell.surjective = (distinct == tgt.size());

            // The same two facts as a rank computation.
            if (!cell.vacuous && src.size() <= kRankBudget && tgt.size() <= kRankBudget) {
                auto rational_mat = phi_star_matrix(family, n, a, m);
                std::size_t rank = rational_matrix_rank(rational_mat);
                if ((rank == src.size()) != cell.injective ||
                    (rank == tgt.size()) != cell.surjective)
                    throw std::logic_error("matrix rank disagrees with the image census");
            }

            // And once more from the quotient presentation, where affordable.
            if (m <= n + a && diagram_count(family, n + 1 + a) <= kOracleBudget) {
                if (phi_star_matrix_oracle(family, n, a, m, delta0) !=
                    phi_star_matrix(family, n, a, m))
                    throw std::logic_error(
                        "presentation and combinatorial stabilization matrices differ");
                ++cross_checked;
            }

            rep.cells.push_back(std::move(cell));
        }
    }

    auto onset = [&](auto&& holds) {
        int best = kNotObserved;
        for (int n0 = n_max - 1; n0 >= 0; --n0) {
            bool all = true;
            for (const auto& c : rep.cells)
                if (c.n >= n0 && !holds(c)) {
                    all = false;
                    break;
                }
            if (!all) break;
            best = n0;
        }
        return best;
    };
    rep.injectivity_onset = onset([](const StabilityCell& c) { return c.injective; });
    rep.surjectivity_onset = onset([](const StabilityCell& c) { return c.surjective; });

    // Inside the predicted scope a violation can only mean a bug in this
    // code, never a genuine counterexample, so it must not pass silently.
    for (const auto& c : rep.cells) {
        if (!c.injective)
            throw std::logic_error("stabilization map not injective at a = " +
                                   std::to_string(c.a) + ", n = " + std::to_string(c.n));
        if (c.n >= rep.predicted_surjectivity && !c.surjective)
            throw std::logic_error("stabilization map not surjective at a = " +
                                   std::to_string(c.a) + ", n = " + std::to_string(c.n));
    }

    rep.conclusive = (n_max - 1 >= rep.predicted_surjectivity);
    rep.pass = rep.conclusive && rep.injectivity_onset == 0 &&
               rep.surjectivity_onset != kNotObserved &&
               rep.surjectivity_onset <= rep.predicted_surjectivity;
    if (vacuous > 0)
        rep.notes.push_back(std::to_string(vacuous) +
                            " vacuous cell(s): both spaces empty, no evidence");
    rep.notes.push_back(std::to_string(cross_checked) +
                        " cell(s) cross-checked against the quotient presentation at delta = " +
                        rational_string(delta0));
    if (!rep.conclusive)
        rep.notes.push_back("horizon stops before the predicted surjectivity onset");
    return rep;
}

StabilityReport verify_multiplicity_stability(Family family, int m, int n_max) {
    if (m < 0 || n_max < m)
        throw std::invalid_argument("need 0 <= m <= n_max");

    StabilityReport rep;
    rep.family = family;
    rep.m = m;
    rep.n_max = n_max;
    rep.predicted_stabilization = stable_range(family, m, 0);

    using Keyed = std::map<std::pair<int, Partition>, Integer>;
    std::map<int, Keyed> keyed;
    for (int n = m; n <= n_max; ++n) {
        MultiplicityTable table = decompose_M(family, m, n);
        if (!weight_bound_check(table, m)) {
            std::ostringstream msg;
            msg << "generation weight bound broken in " << family_name(family)
                << " at m = " << m << ", n = " << n;
            throw std::logic_error(msg.str());
        }
        Keyed k;
        for (const auto& [lambda, mult] : table.entries)
            k.emplace(stable_key({family, n, lambda}), mult);
        keyed.emplace(n, std::move(k));
        rep.tables.emplace(n, std::move(table));
    }

    // Tables are guaranteed frozen inside the predicted range; one moving
    // there is an implementation bug, not a data point.
    const int start = std::max(m, rep.predicted_stabilization);
    for (int n = start; n < n_max; ++n)
        if (keyed.at(n) != keyed.at(n + 1)) {
            std::ostringstream msg;
            msg << "multiplicities still moving past the stable range: "
                << family_name(family) << ", m = " << m << ", n = " << n
                << " -> " << n + 1;
            throw std::logic_error(msg.str());
        }

    int onset = kNotObserved;
    for (int n0 = n_max - 1; n0 >= m; --n0) {
        if (keyed.at(n0) == keyed.at(n0 + 1))
            onset = n0;
        else
            break;
    }
    rep.stabilization_onset = onset;
    rep.conclusive = (n_max >= start + 1);
    rep.pass = rep.conclusive && rep.stabilization_onset != kNotObserved &&
               rep.stabilization_onset <= start;
    if (!rep.conclusive)
        rep.notes.push_back("horizon below the stable range; nothing to conclude");
    return rep;
}

}  // namespace dstab
