#ifndef DSTAB_PARTITIONS_HPP
#define DSTAB_PARTITIONS_HPP

#include <string>
#include <vector>

#include "dstab/family.hpp"
#include "dstab/rational.hpp"

namespace dstab {

// Integer partitions are weakly decreasing vectors of positive ints.
// The empty vector is the empty partition.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
int partition_size(const Partition& p);
int partition_first(const Partition& p); // 0 for the empty partition

// All partitions of n, reverse lexicographic: (n) first, (1^n) last.
std::vector<Partition> enumerate_partitions(int n);

// mu fits inside lambda (componentwise).
bool partition_contains(const Partition& lambda, const Partition& mu);

// Conjugacy classes of S_n are indexed by cycle types (partitions of n).
// class_size(rho) = n! / prod_j j^{m_j} m_j!  where m_j = multiplicity of j.
Integer factorial(int n);
Integer class_size(const Partition& rho);

// Littlewood-Richardson coefficient c^lambda_{mu,nu}, by backtracking over
// semistandard skew tableaux of shape lambda/mu and content nu whose reverse
// reading word is a ballot sequence. Memoized; thread safe.
unsigned long lr_coefficient(const Partition& lambda, const Partition& mu,
                             const Partition& nu);

// All mu obtained from lambda by removing a horizontal strip of size a,
// i.e. the mu with c^lambda_{mu,(a)} = 1. Sorted reverse lexicographically.
std::vector<Partition> pieri_targets(const Partition& lambda, int a);

// d^lambda_{mu,nu} = sum over (alpha,beta,gamma) of
//   c^lambda_{alpha,beta} c^mu_{alpha,gamma} c^nu_{beta,gamma},
// nonzero only when |lambda|+|mu|+|nu| is even and the derived sizes
// |alpha| = (|lambda|+|mu|-|nu|)/2 etc. are all nonnegative.
unsigned long brauer_branching_coefficient(const Partition& lambda,
                                           const Partition& mu,
                                           const Partition& nu);

// Irreducible S_n character chi^lambda(rho) via the Murnaghan-Nakayama rule
// on beta-sets. Requires |lambda| = |rho| <= 62. Memoized; thread safe.
long sn_character(const Partition& lambda, const Partition& rho);

// g(lambda,mu,nu) = (1/n!) sum_rho |C_rho| chi^lambda chi^mu chi^nu.
unsigned long kronecker_coefficient(const Partition& lambda,
                                    const Partition& mu, const Partition& nu);

// lambda[n] = (n-|lambda|, lambda_1, lambda_2, ...); requires n >= |lambda|+lambda_1.
Partition padded(const Partition& lambda, int n);

// Stable Kronecker coefficient: kronecker_coefficient(lambda[N],mu[N],nu[N])
// with N = |lambda|+lambda_1+|mu|+mu_1+|nu|+nu_1, evaluated at N and N+1.
// Throws std::logic_error if the two values disagree (never returns silently).
unsigned long reduced_kronecker(const Partition& lambda, const Partition& mu,
                                const Partition& nu);

// P_0 = P_1 = 1, P_{k+1} = P_k - X * P_{k-1}; coefficients ascending in X.
// deg P_k = floor((k-1)/2) for k >= 1.
std::vector<long> jones_polynomial(int k);

struct ParameterStatus {
    bool admissible = false;
    std::string reason; // empty when admissible; lists every failed check
};

// Semisimplicity gate for A_n(delta) over Q:
//   TL: delta != 0, P_k(delta^-2) != 0 for all k <= n-1, and delta^2 not in
//       {0,1,2,3,4} (the rational root-of-unity exclusion).
//   Br: delta not in {0,1,...,n-2}.
//   P:  delta not in {0,1,...,2n-2}.
ParameterStatus check_parameter(Family family, const Rational& delta, int n);

} // namespace dstab

#endif
