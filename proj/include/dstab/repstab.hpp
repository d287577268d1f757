#ifndef DSTAB_REPSTAB_HPP
#define DSTAB_REPSTAB_HPP

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dstab/partitions.hpp"

namespace dstab {

// Label of a simple A_n(delta)-module in the semisimple regime.
//   TL: partitions of n with at most two rows;
//   Br: partitions of n, n-2, n-4, ...  (defect i = (n-|lambda|)/2);
//   P:  partitions of 0, 1, ..., n.
struct SimpleLabel {
    Family family = Family::TL;
    int n = 0;
    Partition lambda;

    auto operator<=>(const SimpleLabel&) const = default;
};

bool label_valid(const SimpleLabel& label);

// (n - |lambda|)/2; Br only.
int brauer_defect(const SimpleLabel& label);

// The full label set, deterministically ordered: TL as filtered
// enumerate_partitions(n); Br by size n, n-2, ...; P by size 0, 1, ..., n;
// within one size in enumerate_partitions order.
std::vector<SimpleLabel> simple_labels(Family family, int n);

// Label of the one-dimensional trivial module (permutation diagrams act by
// 1, all other diagrams by 0): the one-row partition (n) in every family.
SimpleLabel trivial_label(Family family, int n);

// Stable coordinates of a label: (n - |lambda|, lambda minus its first
// row).  Labels with one stable key form a family lambda(n) across n — the
// second row is pinned for TL, the defect doubles the first component for
// Br — and multiplicity stability means table entries are eventually
// constant per key.
std::pair<int, Partition> stable_key(const SimpleLabel& label);

// Multiplicity of mu x nu in the restriction of lambda to
// A_{mu.n} x A_{nu.n}: Littlewood-Richardson for TL, the three-fold LR sum
// for Br, reduced Kronecker for P.  Requires one family and
// lambda.n == mu.n + nu.n.  Throws std::invalid_argument on invalid labels.
unsigned long restriction_multiplicity(const SimpleLabel& lambda,
                                       const SimpleLabel& mu,
                                       const SimpleLabel& nu);

// dim of the simple module, by peeling one strand at a time: restrict to
// A_{n-1} x A_1 and sum dimensions with multiplicities.  Memoized.
Integer simple_dimension(const SimpleLabel& label);

// Multiplicity of A_a(mu) in the trivial-isotypic compression of A_n(lambda)
// to A_a, i.e. restriction_multiplicity(lambda, mu, trivial at n-a).
unsigned long tau_simple_multiplicity(const SimpleLabel& lambda,
                                      const SimpleLabel& mu);

// Decomposition of a module of one algebra A_n into simples; entries hold
// the nonzero multiplicities only.
struct MultiplicityTable {
    Family family = Family::TL;
    int n = 0;
    std::string context;
    std::map<Partition, Integer> entries;
};

// Simple multiplicities of Hom(m, n) as an A_n-module: the regular module
// A_m contains each simple mu with multiplicity dim(mu), so
// c_lambda = sum_mu dim(mu) * restriction_multiplicity(lambda, mu, triv).
// Throws when m > n.
MultiplicityTable decompose_M(Family family, int m, int n);

// True iff every entry obeys the family's generation-weight bound:
// TL: |label| - label_1 <= g; Br: that plus half the defect <= g;
// P: n - |label| <= 2g.
bool weight_bound_check(const MultiplicityTable& table, int g);

// Stable range for a module generated in degree g with relations in degree
// r: TL g + max(g,r); Br 2g + max(g,r); P 2g + max(2g,2r).
int stable_range(Family family, int g, int r);

// Stability degree bound for the same data: max(g,r), doubled for P.
int stability_degree_bound(Family family, int g, int r);

}  // namespace dstab

#endif
