#include "doctest.h"

#include "dstab/hom.hpp"
#include "dstab/linalg.hpp"
#include "dstab/verifier.hpp"

#include <map>
#include <random>
#include <vector>

using namespace dstab;

namespace {

const Rational kDelta1 = parse_rational("7/2");
const Rational kDelta2 = parse_rational("11/3");

Integer hom_count(Family f, int m, int n) {
    return Integer(static_cast<unsigned long>(hom_basis(f, m, n).size()));
}

Integer blob_count(Family f, int n, int a, int m) {
    return Integer(static_cast<unsigned long>(two_blob_basis(f, n, a, m).size()));
}

}  // namespace

TEST_CASE("fraction-free ranks and binomial quotients eliminate exactly") {
    auto I = [](long x) { return Integer(x); };

    CHECK(integer_matrix_rank({{I(1), I(0), I(0)},
                               {I(0), I(1), I(0)},
                               {I(0), I(0), I(1)}}) == 3);
    CHECK(integer_matrix_rank({{I(1), I(2)}, {I(2), I(4)}}) == 1);
    CHECK(integer_matrix_rank({{I(0), I(0)}, {I(0), I(0)}}) == 0);
    // det = 0 but no 2x2 minor pattern is degenerate
    CHECK(integer_matrix_rank({{I(2), I(3), I(5)},
                               {I(7), I(11), I(13)},
                               {I(9), I(14), I(18)}}) == 2);
    CHECK(integer_matrix_rank({}) == 0);
    CHECK_THROWS_AS(integer_matrix_rank({{I(1)}, {I(1), I(2)}}),
                    std::invalid_argument);

    CHECK(rational_matrix_rank({{Rational(1, 2), Rational(1, 3)},
                                {Rational(1, 4), Rational(1, 6)}}) == 1);
    CHECK(rational_matrix_rank({{Rational(1, 2), Rational(1, 3)},
                                {Rational(1, 5), Rational(1, 7)}}) == 2);

    BinomialQuotient q(5);
    CHECK(q.dimension() == 5);
    q.relate(0, 1, Rational(2));  // e_0 = 2 e_1
    CHECK(q.dimension() == 4);
    auto c1 = q.canonical(1);
    REQUIRE(c1.has_value());
    auto c0 = q.canonical(0);
    REQUIRE(c0.has_value());
    CHECK(c0->first == c1->first);
    CHECK(c0->second == 2 * c1->second);
    q.kill(1);  // kills the whole class of 0 and 1
    CHECK(q.dimension() == 3);
    CHECK_FALSE(q.canonical(0).has_value());
    CHECK(q.representatives() == std::vector<std::size_t>{2, 3, 4});

    // Two incompatible weights between the same pair collapse the class.
    BinomialQuotient q2(2);
    q2.relate(0, 1, Rational(2));
    q2.relate(0, 1, Rational(3));
    CHECK(q2.dimension() == 0);
    CHECK_FALSE(q2.canonical(1).has_value());

    // A relation with coefficient zero is a kill.
    BinomialQuotient q3(2);
    q3.relate(0, 1, Rational(0));
    CHECK(q3.dimension() == 1);
    CHECK_FALSE(q3.canonical(0).has_value());

    CHECK_THROWS_AS(q3.kill(7), std::out_of_range);
    CHECK_THROWS_AS(q3.relate(0, 9, Rational(1)), std::out_of_range);

    // Random binomial relation sets: the incremental quotient must agree
    // with honest elimination of the same rows.
    std::mt19937 gen(5);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<std::size_t> size_dist(1, 12);
        std::size_t size = size_dist(gen);
        std::uniform_int_distribution<std::size_t> index(0, size - 1);
        std::uniform_int_distribution<int> rel_count(0, 18);
        std::uniform_int_distribution<int> kind(0, 3);
        BinomialQuotient uf(size);
        std::vector<std::vector<Rational>> rows;
        int rels = rel_count(gen);
        for (int r = 0; r < rels; ++r) {
            std::vector<Rational> row(size, Rational(0));
            if (kind(gen) == 0) {
                std::size_t i = index(gen);
                uf.kill(i);
                row[i] = 1;
            } else {
                std::size_t i = index(gen);
                std::size_t j = index(gen);
                int p = num(gen);
                if (p == 0) p = 1;
                Rational c(p, den(gen));
                c.canonicalize();
                uf.relate(i, j, c);
                // e_i - c e_j = 0; i == j leaves a (1 - c) e_i row
                row[i] += 1;
                row[j] -= c;
            }
            rows.push_back(std::move(row));
        }
        CHECK(uf.dimension() == size - rational_matrix_rank(rows));
    }
}

TEST_CASE("hom ranks from the presentation match the marked bases") {
    for (const Rational& delta : {kDelta1, kDelta2}) {
        for (int n = 0; n <= 6; ++n)
            for (int m = 0; m <= n; ++m)
                CHECK(oracle_hom_rank(Family::TL, m, n, delta) ==
                      hom_count(Family::TL, m, n));
        for (int n = 0; n <= 5; ++n)
            for (int m = 0; m <= n; ++m)
                CHECK(oracle_hom_rank(Family::Br, m, n, delta) ==
                      hom_count(Family::Br, m, n));
        for (int n = 0; n <= 3; ++n)
            for (int m = 0; m <= n; ++m)
                CHECK(oracle_hom_rank(Family::P, m, n, delta) ==
                      hom_count(Family::P, m, n));
    }
    // one stretch point past the grid
    CHECK(oracle_hom_rank(Family::P, 1, 4, kDelta1) == hom_count(Family::P, 1, 4));

    RankReport rep = hom_rank_report(Family::Br, 1, 3, kDelta1);
    CHECK(rep.family == Family::Br);
    CHECK(rep.m == 1);
    CHECK(rep.n == 3);
    CHECK(rep.a == -1);
    CHECK(rep.delta0 == kDelta1);
    CHECK(rep.rank == rep.count);
    CHECK(rep.agree);

    CHECK_THROWS_AS(oracle_hom_rank(Family::TL, 1, 0, kDelta1),
                    std::invalid_argument);
    CHECK_THROWS_AS(oracle_hom_rank(Family::TL, -1, 2, kDelta1),
                    std::invalid_argument);
    // inadmissible parameters are refused, not worked around
    CHECK_THROWS_AS(oracle_hom_rank(Family::TL, 0, 2, Rational(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(oracle_hom_rank(Family::Br, 0, 3, Rational(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(oracle_hom_rank(Family::P, 0, 2, Rational(2)),
                    std::invalid_argument);
}

TEST_CASE("two blob ranks from the double quotient match the diagram counts") {
    for (const Rational& delta : {kDelta1, kDelta2})
        for (int total = 0; total <= 4; ++total)
            for (int n = 0; n <= total; ++n)
                for (int m = 0; m <= total + 1; ++m) {
                    int a = total - n;
                    CHECK(oracle_two_blob_rank(Family::TL, n, a, m, delta) ==
                          blob_count(Family::TL, n, a, m));
                    if (total <= 3)
                        CHECK(oracle_two_blob_rank(Family::P, n, a, m, delta) ==
                              blob_count(Family::P, n, a, m));
                }
    for (int total = 5; total <= 6; ++total)
        for (int n = 0; n <= total; ++n)
            for (int m = 0; m <= total; ++m)
                CHECK(oracle_two_blob_rank(Family::TL, n, total - n, m, kDelta1) ==
                      blob_count(Family::TL, n, total - n, m));
    for (int total = 0; total <= 5; ++total)
        for (int n = 0; n <= total; ++n)
            for (int m = 0; m <= 3; ++m) {
                int a = total - n;
                CHECK(oracle_two_blob_rank(Family::Br, n, a, m, kDelta1) ==
                      blob_count(Family::Br, n, a, m));
                if (total <= 4)
                    CHECK(oracle_two_blob_rank(Family::Br, n, a, m, kDelta2) ==
                          blob_count(Family::Br, n, a, m));
            }

    // pinned values
    CHECK(oracle_two_blob_rank(Family::P, 1, 1, 1, kDelta1) == 7);
    CHECK(blob_count(Family::P, 1, 1, 1) == 7);
    for (int n = 0; n <= 6; ++n)
        CHECK(oracle_two_blob_rank(Family::TL, n, 0, n, kDelta1) == 1);

    RankReport rep = two_blob_rank_report(Family::Br, 2, 1, 1, kDelta1);
    CHECK(rep.a == 1);
    CHECK(rep.n == 2);
    CHECK(rep.m == 1);
    CHECK(rep.rank == rep.count);
    CHECK(rep.agree);

    CHECK_THROWS_AS(oracle_two_blob_rank(Family::TL, -1, 0, 0, kDelta1),
                    std::invalid_argument);
    CHECK_THROWS_AS(oracle_two_blob_rank(Family::P, 1, 1, 1, Rational(2)),
                    std::invalid_argument);
}

TEST_CASE("presentation and combinatorial stabilization matrices agree") {
    // Br over every small cell, the families that allow twists included.
    for (int total = 0; total <= 3; ++total)  // total = n + a, target total + 1
        for (int n = 0; n <= total; ++n)
            for (int m = 0; m <= 3; ++m)
                CHECK(phi_star_matrix_oracle(Family::Br, n, total - n, m, kDelta1) ==
                      phi_star_matrix(Family::Br, n, total - n, m));
    // one larger spot, and the second parameter value
    CHECK(phi_star_matrix_oracle(Family::Br, 2, 2, 1, kDelta1) ==
          phi_star_matrix(Family::Br, 2, 2, 1));
    CHECK(phi_star_matrix_oracle(Family::Br, 1, 1, 2, kDelta2) ==
          phi_star_matrix(Family::Br, 1, 1, 2));

    for (int total = 0; total <= 5; ++total)
        for (int n = 0; n <= total; ++n)
            for (int m = 0; m <= 3; ++m)
                CHECK(phi_star_matrix_oracle(Family::TL, n, total - n, m, kDelta1) ==
                      phi_star_matrix(Family::TL, n, total - n, m));
    for (int total = 0; total <= 2; ++total)
        for (int n = 0; n <= total; ++n)
            for (int m = 0; m <= 2; ++m)
                CHECK(phi_star_matrix_oracle(Family::P, n, total - n, m, kDelta1) ==
                      phi_star_matrix(Family::P, n, total - n, m));

    // The combinatorial matrix is a column selection: each column hits one
    // row once, so its rank is full.
    auto mat = phi_star_matrix(Family::Br, 2, 1, 1);
    std::size_t cols = two_blob_basis(Family::Br, 2, 1, 1).size();
    REQUIRE(cols > 0);
    for (std::size_t j = 0; j < cols; ++j) {
        Rational sum = 0;
        for (const auto& row : mat) sum += row[j];
        CHECK(sum == 1);
    }
    CHECK(rational_matrix_rank(mat) == cols);
}

TEST_CASE("stability degrees match the predicted onsets") {
    for (int m = 0; m <= 2; ++m) {
        StabilityReport r = measure_stability_degrees(Family::TL, m, 2, 5, kDelta1);
        CHECK(r.conclusive);
        CHECK(r.pass);
        CHECK(r.injectivity_onset == 0);
        CHECK(r.surjectivity_onset == m);
        CHECK(r.predicted_surjectivity == m);
        CHECK(r.cells.size() == 15);  // a in 0..2, n in 0..4
    }
    for (int m = 0; m <= 2; ++m) {
        StabilityReport r = measure_stability_degrees(Family::Br, m, 2, 4, kDelta1);
        CHECK(r.conclusive);
        CHECK(r.pass);
        CHECK(r.injectivity_onset == 0);
        CHECK(r.surjectivity_onset == m);
    }
    for (int m = 0; m <= 1; ++m) {
        StabilityReport r = measure_stability_degrees(Family::P, m, 1, 3, kDelta1);
        CHECK(r.conclusive);
        CHECK(r.pass);
        CHECK(r.injectivity_onset == 0);
        CHECK(r.surjectivity_onset == 2 * m);
        CHECK(r.predicted_surjectivity == 2 * m);
    }
    // the parameter value must not matter
    StabilityReport alt = measure_stability_degrees(Family::Br, 1, 1, 3, kDelta2);
    CHECK(alt.pass);
    CHECK(alt.surjectivity_onset == 1);

    // horizon too short to reach the predicted onset
    StabilityReport shallow = measure_stability_degrees(Family::P, 2, 1, 2, kDelta1);
    CHECK_FALSE(shallow.conclusive);
    CHECK_FALSE(shallow.pass);

    CHECK_THROWS_AS(measure_stability_degrees(Family::TL, 1, 2, 0, kDelta1),
                    std::invalid_argument);
    CHECK_THROWS_AS(measure_stability_degrees(Family::Br, 1, 1, 3, Rational(2)),
                    std::invalid_argument);
}

TEST_CASE("multiplicity tables freeze inside the predicted range") {
    for (int m = 0; m <= 3; ++m) {
        StabilityReport r = verify_multiplicity_stability(Family::TL, m, 10);
        CHECK(r.conclusive);
        CHECK(r.pass);
        CHECK(r.predicted_stabilization == stable_range(Family::TL, m, 0));
        CHECK(r.stabilization_onset <= r.predicted_stabilization);
        CHECK(static_cast<int>(r.tables.size()) == 10 - m + 1);
    }
    for (int m = 0; m <= 2; ++m) {
        StabilityReport r = verify_multiplicity_stability(Family::Br, m, 8);
        CHECK(r.conclusive);
        CHECK(r.pass);
        CHECK(r.stabilization_onset <= r.predicted_stabilization);
    }
    for (int m = 0; m <= 1; ++m) {
        StabilityReport r = verify_multiplicity_stability(Family::P, m, 6);
        CHECK(r.conclusive);
        CHECK(r.pass);
    }

    // measured onsets for the hand-checked scans
    CHECK(verify_multiplicity_stability(Family::TL, 1, 10).stabilization_onset == 2);
    CHECK(verify_multiplicity_stability(Family::Br, 1, 8).stabilization_onset == 2);
    StabilityReport p1 = verify_multiplicity_stability(Family::P, 1, 6);
    CHECK(p1.stabilization_onset == 3);
    CHECK(p1.predicted_stabilization == 4);

    // a frozen table, in plain labels
    StabilityReport tl1 = verify_multiplicity_stability(Family::TL, 1, 6);
    CHECK(tl1.tables.at(4).entries ==
          std::map<Partition, Integer>{{{4}, 1}, {{3, 1}, 1}});

    // horizon below the stable range: inconclusive, not a failure
    StabilityReport shallow = verify_multiplicity_stability(Family::P, 2, 5);
    CHECK_FALSE(shallow.conclusive);
    CHECK_FALSE(shallow.pass);
    CHECK_FALSE(shallow.notes.empty());

    CHECK_THROWS_AS(verify_multiplicity_stability(Family::TL, 2, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_multiplicity_stability(Family::Br, -1, 3),
                    std::invalid_argument);
}
