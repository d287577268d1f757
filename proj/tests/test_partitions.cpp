#include "doctest.h"

#include "dstab/partitions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

using namespace dstab;

namespace {

// Counts partitions of n with parts <= k, by the standard two-variable
// recursion.  Deliberately shares no code with enumerate_partitions.
long count_parts_at_most(int n, int k) {
    if (n == 0) return 1;
    if (n < 0 || k == 0) return 0;
    static std::map<std::pair<int, int>, long> memo;
    auto it = memo.find({n, k});
    if (it != memo.end()) return it->second;
    long r = count_parts_at_most(n, k - 1) + count_parts_at_most(n - k, k);
    memo[{n, k}] = r;
    return r;
}

// <chi^lambda, Ind_{S_e x S_f}^{S_n}(chi^mu x chi^nu)> as an explicit class
// sum.  Independent of the tableau backtracking in lr_coefficient; only the
// character values are shared, and those are validated separately below.
unsigned long lr_by_characters(const Partition& lambda, const Partition& mu,
                               const Partition& nu) {
    int e = partition_size(mu), f = partition_size(nu);
    REQUIRE(partition_size(lambda) == e + f);
    Integer acc = 0;
    for (const Partition& rho : enumerate_partitions(e)) {
        for (const Partition& sigma : enumerate_partitions(f)) {
            Partition merged = rho;
            merged.insert(merged.end(), sigma.begin(), sigma.end());
            std::sort(merged.rbegin(), merged.rend());
            acc += class_size(rho) * class_size(sigma) *
                   Integer(sn_character(lambda, merged)) *
                   Integer(sn_character(mu, rho)) *
                   Integer(sn_character(nu, sigma));
        }
    }
    Integer denom = factorial(e) * factorial(f);
    Integer q = acc / denom;
    REQUIRE(q * denom == acc);
    REQUIRE(q >= 0);
    return q.get_ui();
}

// Character of the 2-dimensional standard representation of S_3, read off
// from actual permutations: chi(sigma) = #fixed points - 1.
std::map<Partition, long> s3_standard_character() {
    std::map<Partition, long> by_class;
    std::vector<int> p{0, 1, 2};
    do {
        std::vector<bool> seen(3, false);
        Partition type;
        int fixed = 0;
        for (int s = 0; s < 3; ++s) {
            if (seen[s]) continue;
            int len = 0;
            for (int j = s; !seen[j]; j = p[j]) {
                seen[j] = true;
                ++len;
            }
            type.push_back(len);
            if (len == 1) ++fixed;
        }
        std::sort(type.rbegin(), type.rend());
        auto it = by_class.find(type);
        if (it == by_class.end())
            by_class[type] = fixed - 1;
        else
            REQUIRE(it->second == fixed - 1); // constant on conjugacy classes
    } while (std::next_permutation(p.begin(), p.end()));
    REQUIRE(by_class.size() == 3);
    return by_class;
}

// Membership by the definition: mu fits inside lambda, the skew difference
// has |lambda|-|mu| = a boxes, and no column loses more than one box.
std::set<Partition> pieri_by_columns(const Partition& lambda, int a) {
    std::set<Partition> out;
    for (const Partition& mu : enumerate_partitions(partition_size(lambda) - a)) {
        if (!partition_contains(lambda, mu)) continue;
        bool ok = true;
        for (int c = 0; ok && c < partition_first(lambda); ++c) {
            int removed = 0;
            for (std::size_t i = 0; i < lambda.size(); ++i) {
                int mi = i < mu.size() ? mu[i] : 0;
                if (mi <= c && c < lambda[i]) ++removed;
            }
            if (removed > 1) ok = false;
        }
        if (ok) out.insert(mu);
    }
    return out;
}

// n! / (product of hook lengths); textbook formula, no recursion shared
// with the character evaluator.
Integer hook_dimension(const Partition& lambda) {
    int n = partition_size(lambda);
    std::vector<int> conj(partition_first(lambda), 0);
    for (int part : lambda)
        for (int c = 0; c < part; ++c) ++conj[c];
    Integer prod = 1;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (int j = 0; j < lambda[i]; ++j)
            prod *= (lambda[i] - j) + (conj[j] - int(i)) - 1;
    Integer num = factorial(n);
    Integer q = num / prod;
    REQUIRE(q * prod == num);
    return q;
}

std::vector<Partition> all_partitions_up_to(int nmax) {
    std::vector<Partition> out;
    for (int n = 0; n <= nmax; ++n)
        for (const Partition& p : enumerate_partitions(n)) out.push_back(p);
    return out;
}

// Partitions adjacent to lambda by adding or removing a single box.
std::set<Partition> box_neighbours(const Partition& lambda) {
    std::set<Partition> out;
    for (std::size_t i = 0; i <= lambda.size(); ++i) {
        Partition add = lambda;
        if (i == lambda.size())
            add.push_back(1);
        else
            ++add[i];
        if (is_partition(add)) out.insert(add);
        if (i < lambda.size()) {
            Partition rem = lambda;
            --rem[i];
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
            if (is_partition(rem)) out.insert(rem);
        }
    }
    return out;
}

} // namespace

TEST_CASE("partition enumeration: counts, order, exact small lists") {
    CHECK(enumerate_partitions(0) == std::vector<Partition>{{}});
    CHECK(enumerate_partitions(1) == std::vector<Partition>{{1}});
    CHECK(enumerate_partitions(4) ==
          std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    CHECK(enumerate_partitions(10).size() == 42);

    for (int n = 0; n <= 14; ++n) {
        auto parts = enumerate_partitions(n);
        CHECK(long(parts.size()) == count_parts_at_most(n, n == 0 ? 1 : n));
        for (std::size_t i = 0; i < parts.size(); ++i) {
            CHECK(is_partition(parts[i]));
            CHECK(partition_size(parts[i]) == n);
            if (i + 1 < parts.size()) CHECK(parts[i] > parts[i + 1]); // reverse lex
        }
        if (n >= 1) {
            CHECK(parts.front() == Partition{n});
            CHECK(parts.back() == Partition(n, 1));
        }
    }
}

TEST_CASE("class sizes partition the group") {
    for (int n = 0; n <= 8; ++n) {
        Integer total = 0;
        for (const Partition& rho : enumerate_partitions(n)) total += class_size(rho);
        CHECK(total == factorial(n));
    }
    CHECK(class_size({5}) == factorial(4));
    CHECK(class_size({1, 1, 1, 1}) == 1);
    CHECK(class_size({2, 1}) == 3);
}

TEST_CASE("characters: S3 standard representation from permutation matrices") {
    auto table = s3_standard_character();
    for (const auto& [rho, value] : table)
        CHECK(sn_character({2, 1}, rho) == value);
    CHECK(sn_character({2, 1}, {3}) == -1);
}

TEST_CASE("characters: trivial and sign rows, hook dimensions, orthogonality") {
    for (int n = 1; n <= 6; ++n)
        for (const Partition& rho : enumerate_partitions(n))
            CHECK(sn_character({n}, rho) == 1);
    CHECK(sn_character({1, 1, 1}, {1, 1, 1}) == 1);

    for (int n = 0; n <= 8; ++n) {
        Partition id(n, 1);
        for (const Partition& lam : enumerate_partitions(n))
            CHECK(Integer(sn_character(lam, id)) == hook_dimension(lam));
    }

    // first orthogonality: sum_rho |C_rho| chi^l(rho) chi^m(rho) = n! [l = m]
    for (int n = 0; n <= 6; ++n) {
        auto parts = enumerate_partitions(n);
        for (const Partition& l : parts) {
            for (const Partition& m : parts) {
                Integer acc = 0;
                for (const Partition& rho : parts)
                    acc += class_size(rho) * Integer(sn_character(l, rho)) *
                           Integer(sn_character(m, rho));
                CHECK(acc == (l == m ? factorial(n) : Integer(0)));
            }
        }
    }
}

TEST_CASE("Littlewood-Richardson: pinned values and character-sum oracle") {
    CHECK(lr_coefficient({2}, {1}, {1}) == 1);
    CHECK(lr_coefficient({1, 1}, {1}, {1}) == 1);
    CHECK(lr_coefficient({4, 2}, {2, 1}, {2, 1}) == 1);
    CHECK(lr_by_characters({4, 2}, {2, 1}, {2, 1}) == 1);
    for (const Partition& lam : all_partitions_up_to(5))
        CHECK(lr_coefficient(lam, lam, {}) == 1);

    // full cross-validation against the induced-character inner product
    for (int n = 0; n <= 6; ++n) {
        for (const Partition& lam : enumerate_partitions(n)) {
            for (int e = 0; e <= n; ++e) {
                for (const Partition& mu : enumerate_partitions(e))
                    for (const Partition& nu : enumerate_partitions(n - e))
                        CHECK(lr_coefficient(lam, mu, nu) ==
                              lr_by_characters(lam, mu, nu));
            }
        }
    }
}

TEST_CASE("Littlewood-Richardson: symmetry in the lower pair") {
    for (int n = 0; n <= 8; ++n)
        for (const Partition& lam : enumerate_partitions(n))
            for (int e = 0; e <= n; ++e)
                for (const Partition& mu : enumerate_partitions(e))
                    for (const Partition& nu : enumerate_partitions(n - e))
                        CHECK(lr_coefficient(lam, mu, nu) ==
                              lr_coefficient(lam, nu, mu));
}

TEST_CASE("Pieri targets: brute force over columns, and row-shape counts") {
    CHECK(pieri_targets({2, 1}, 2) == std::vector<Partition>{{1}});
    for (const Partition& lam : all_partitions_up_to(5)) {
        auto t = pieri_targets(lam, 0);
        CHECK(t == std::vector<Partition>{lam});
    }

    for (const Partition& lam : all_partitions_up_to(7)) {
        for (int a = 0; a <= partition_size(lam); ++a) {
            auto got = pieri_targets(lam, a);
            std::set<Partition> gotset(got.begin(), got.end());
            CHECK(gotset.size() == got.size());
            CHECK(gotset == pieri_by_columns(lam, a));
            CHECK(std::is_sorted(got.begin(), got.end(), std::greater<>()));
        }
    }

    // one-row lambda = (m): removing n-a boxes from (n-m, m) leaves the
    // two-row shapes (a-j, j); for a >= 2m-1 there are min(m, a/2)+1 of them
    for (auto [m, a, n] : std::vector<std::array<int, 3>>{
             {0, 3, 5}, {1, 1, 4}, {1, 2, 5}, {2, 3, 7}, {2, 4, 8}, {3, 6, 10}}) {
        Partition lam = padded(m ? Partition{m} : Partition{}, n);
        auto t = pieri_targets(lam, n - a);
        int expected = std::min(m, a / 2) + 1;
        CHECK(int(t.size()) == expected);
        for (int j = 0; j < expected; ++j) {
            Partition two = j ? Partition{a - j, j} : Partition{a};
            CHECK(std::find(t.begin(), t.end(), two) != t.end());
        }
    }

    // the general count bounds j by a-m as well (mu_1 >= m is forced)
    for (int m = 0; m <= 4; ++m) {
        for (int a = m; a <= 2 * m + 2; ++a) {
            int n = a + m + 2;
            Partition lam = padded(m ? Partition{m} : Partition{}, n);
            int expected = std::min({a - m, m, a / 2}) + 1;
            CHECK(int(pieri_targets(lam, n - a).size()) == expected);
        }
    }
}

TEST_CASE("Pieri targets agree with one-row Littlewood-Richardson columns") {
    for (const Partition& lam : all_partitions_up_to(6)) {
        int n = partition_size(lam);
        for (int a = 0; a <= n; ++a) {
            auto t = pieri_targets(lam, a);
            std::set<Partition> tset(t.begin(), t.end());
            Partition row = a ? Partition{a} : Partition{};
            for (const Partition& mu : enumerate_partitions(n - a)) {
                unsigned long c = lr_coefficient(lam, mu, row);
                CHECK(c == (tset.count(mu) ? 1u : 0u));
            }
        }
    }
}

TEST_CASE("Kronecker coefficients: S3 table, pinned values, symmetry, dim sum") {
    // hardcoded S3 character table: classes (1,1,1), (2,1), (3)
    const std::vector<Partition> cls{{1, 1, 1}, {2, 1}, {3}};
    const long sz[3] = {1, 3, 2};
    const std::map<Partition, std::array<long, 3>> chi{
        {{3}, {1, 1, 1}}, {{2, 1}, {2, 0, -1}}, {{1, 1, 1}, {1, -1, 1}}};
    for (const auto& [l, cl] : chi) {
        for (const auto& [m, cm] : chi) {
            for (const auto& [v, cv] : chi) {
                long acc = 0;
                for (int i = 0; i < 3; ++i) acc += sz[i] * cl[i] * cm[i] * cv[i];
                REQUIRE(acc % 6 == 0);
                CHECK(kronecker_coefficient(l, m, v) ==
                      (unsigned long)(acc / 6));
            }
        }
    }
    CHECK(kronecker_coefficient({2, 1}, {2, 1}, {2, 1}) == 1);
    CHECK(kronecker_coefficient({1, 1}, {1, 1}, {2}) == 1);

    for (int n = 0; n <= 6; ++n) {
        auto parts = enumerate_partitions(n);
        Partition id(n, 1);
        std::map<std::pair<Partition, Partition>, std::vector<unsigned long>> g;
        for (const Partition& l : parts)
            for (const Partition& m : parts) {
                auto& row = g[{l, m}];
                for (const Partition& v : parts)
                    row.push_back(kronecker_coefficient(l, m, v));
            }
        for (std::size_t i = 0; i < parts.size(); ++i) {
            for (std::size_t j = 0; j < parts.size(); ++j) {
                // tensoring with the trivial representation
                if (n >= 1)
                    CHECK(g[{parts[i], parts[j]}][0] == (i == j ? 1u : 0u));
                Integer lhs = 0;
                for (std::size_t k = 0; k < parts.size(); ++k) {
                    CHECK(g[{parts[i], parts[j]}][k] ==
                          g[{parts[j], parts[i]}][k]); // swap first pair
                    CHECK(g[{parts[i], parts[j]}][k] ==
                          g[{parts[i], parts[k]}][j]); // swap last pair
                    lhs += Integer(g[{parts[i], parts[j]}][k]) *
                           Integer(sn_character(parts[k], id));
                }
                CHECK(lhs == Integer(sn_character(parts[i], id)) *
                                 Integer(sn_character(parts[j], id)));
            }
        }
    }
}

TEST_CASE("Brauer branching coefficients: single box rule and pinned values") {
    for (const Partition& lam : all_partitions_up_to(4))
        CHECK(brauer_branching_coefficient(lam, lam, {}) == 1);
    CHECK(brauer_branching_coefficient({1}, {1}, {2}) == 1);

    // d(lambda, mu, (1)) counts mu reachable from lambda by one box move
    for (const Partition& lam : all_partitions_up_to(6)) {
        auto nb = box_neighbours(lam);
        int n = partition_size(lam);
        for (int delta : {-1, +1}) {
            if (n + delta < 0) continue;
            for (const Partition& mu : enumerate_partitions(n + delta))
                CHECK(brauer_branching_coefficient(lam, mu, {1}) ==
                      (nb.count(mu) ? 1u : 0u));
        }
    }
}

TEST_CASE("padded row extension") {
    CHECK(padded({2, 1}, 7) == Partition{4, 2, 1});
    CHECK(padded({}, 5) == Partition{5});
    CHECK(padded({}, 0) == Partition{});
    CHECK(padded({3}, 6) == Partition{3, 3});
    CHECK_THROWS_AS((void)padded({3}, 5), std::invalid_argument);
}

TEST_CASE("reduced Kronecker coefficients stabilize and delete to delta") {
    CHECK(reduced_kronecker({1}, {1}, {1}) == 1);
    CHECK(reduced_kronecker({1}, {1}, {}) == 1);
    for (const Partition& l : all_partitions_up_to(4))
        for (const Partition& m : all_partitions_up_to(4))
            CHECK(reduced_kronecker(l, m, {}) == (l == m ? 1u : 0u));
}

TEST_CASE("Chebyshev-style polynomial sequence") {
    CHECK(jones_polynomial(0) == std::vector<long>{1});
    CHECK(jones_polynomial(1) == std::vector<long>{1});
    CHECK(jones_polynomial(2) == std::vector<long>{1, -1});
    CHECK(jones_polynomial(4) == std::vector<long>{1, -3, 1});
    for (int k = 1; k <= 19; ++k) {
        auto pk = jones_polynomial(k), pk1 = jones_polynomial(k - 1);
        auto next = jones_polynomial(k + 1);
        std::vector<long> expect(std::max(pk.size(), pk1.size() + 1), 0);
        for (std::size_t j = 0; j < pk.size(); ++j) expect[j] += pk[j];
        for (std::size_t j = 0; j < pk1.size(); ++j) expect[j + 1] -= pk1[j];
        while (!expect.empty() && expect.back() == 0) expect.pop_back();
        CHECK(next == expect);
    }
}

TEST_CASE("parameter admissibility gate") {
    auto tl1 = check_parameter(Family::TL, Rational(1), 3);
    CHECK_FALSE(tl1.admissible);
    CHECK(tl1.reason.find("P_2") != std::string::npos);
    CHECK(tl1.reason.find("root-of-unity") != std::string::npos);

    CHECK(check_parameter(Family::Br, Rational(-1), 5).admissible);
    CHECK_FALSE(check_parameter(Family::Br, Rational(3), 6).admissible);
    CHECK(check_parameter(Family::Br, Rational(1) / 2, 6).admissible);

    CHECK_FALSE(check_parameter(Family::P, Rational(3), 3).admissible);
    CHECK(check_parameter(Family::P, Rational(3), 2).admissible);
    CHECK_FALSE(check_parameter(Family::P, Rational(0), 1).admissible);

    CHECK_FALSE(check_parameter(Family::TL, Rational(0), 2).admissible);
    CHECK_FALSE(check_parameter(Family::TL, Rational(2), 5).admissible);
    CHECK_FALSE(check_parameter(Family::TL, Rational(1), 2).admissible);
    for (int n = 0; n <= 8; ++n) {
        CHECK(check_parameter(Family::TL, Rational(7) / 2, n).admissible);
        CHECK(check_parameter(Family::TL, Rational(11) / 3, n).admissible);
        CHECK(check_parameter(Family::Br, Rational(7) / 2, n).admissible);
        CHECK(check_parameter(Family::P, Rational(7) / 2, n).admissible);
    }
}
