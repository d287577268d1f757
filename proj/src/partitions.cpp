#include "dstab/partitions.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace dstab {

bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

int partition_size(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

int partition_first(const Partition& p) { return p.empty() ? 0 : p[0]; }

static void check_partition(const Partition& p, const char* who) {
    if (!is_partition(p))
        throw std::invalid_argument(std::string(who) + ": not a partition");
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n < 0");
    std::vector<Partition> out;
    Partition cur;
    // reverse lexicographic: always place the largest admissible next part
    auto rec = [&](auto&& self, int rest, int cap) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(rest, cap); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

bool partition_contains(const Partition& lambda, const Partition& mu) {
    if (mu.size() > lambda.size()) return false;
    for (std::size_t i = 0; i < mu.size(); ++i)
        if (mu[i] > lambda[i]) return false;
    return true;
}

Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Integer class_size(const Partition& rho) {
    check_partition(rho, "class_size");
    int n = partition_size(rho);
    Integer z = 1;
    int i = 0;
    while (i < (int)rho.size()) {
        int j = i;
        while (j < (int)rho.size() && rho[j] == rho[i]) ++j;
        int mult = j - i;
        for (int t = 0; t < mult; ++t) z *= rho[i];
        z *= factorial(mult);
        i = j;
    }
    return factorial(n) / z;
}

// ---- packed keys for memo tables ------------------------------------------
// A partition with |p| <= 62 is encoded by its minimal beta-set as a 64-bit
// mask: bit p[i] + (len-1-i) for each row i. Injective (popcount = length).

static std::uint64_t pack_partition(const Partition& p) {
    std::uint64_t code = 0;
    int len = (int)p.size();
    for (int i = 0; i < len; ++i) {
        int pos = p[i] + (len - 1 - i);
        if (pos > 63) throw std::invalid_argument("partition too large to pack");
        code |= (std::uint64_t)1 << pos;
    }
    return code;
}

namespace {

struct U64PairHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
        std::uint64_t x = k.first * 0x9e3779b97f4a7c15ULL ^ (k.second + 0xbf58476d1ce4e5b9ULL);
        x ^= x >> 31;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 29;
        return (std::size_t)x;
    }
};

struct U64TripleHash {
    std::size_t operator()(const std::array<std::uint64_t, 3>& k) const {
        std::uint64_t x = k[0];
        x = x * 0x9e3779b97f4a7c15ULL ^ k[1];
        x ^= x >> 32;
        x = x * 0xbf58476d1ce4e5b9ULL ^ k[2];
        x ^= x >> 29;
        x *= 0x94d049bb133111ebULL;
        return (std::size_t)(x ^ (x >> 32));
    }
};

} // namespace

// ---- Littlewood-Richardson -------------------------------------------------

static unsigned long lr_backtrack(const Partition& lambda, const Partition& mu,
                                  const Partition& nu) {
    int rows = (int)lambda.size();
    int vmax = (int)nu.size();
    std::vector<int> need(nu.begin(), nu.end()); // remaining content
    std::vector<int> placed(vmax + 1, 0);        // occurrences in the word so far
    // grid[i][j] for mu_i <= j < lambda_i
    std::vector<std::vector<int>> grid(rows);
    for (int i = 0; i < rows; ++i) grid[i].assign(lambda[i], 0);
    auto mu_at = [&](int i) { return i < (int)mu.size() ? mu[i] : 0; };

    unsigned long count = 0;
    // cells in reading order: rows top to bottom, right to left within a row
    auto rec = [&](auto&& self, int i, int j) -> void {
        while (i < rows && (lambda[i] == mu_at(i))) { ++i; }
        if (i == rows) {
            ++count;
            return;
        }
        if (j < 0) j = lambda[i] - 1; // entering row i from the right
        int lo = 1, hi = vmax;
        if (j + 1 < lambda[i]) hi = std::min(hi, grid[i][j + 1]); // row weakly incr
        if (i > 0 && j < lambda[i - 1] && j >= mu_at(i - 1))
            lo = std::max(lo, grid[i - 1][j] + 1); // column strictly incr
        for (int v = lo; v <= hi; ++v) {
            if (need[v - 1] == 0) continue;
            if (v > 1 && placed[v] + 1 > placed[v - 1]) continue; // ballot
            grid[i][j] = v;
            --need[v - 1];
            ++placed[v];
            int ni = i, nj = j - 1;
            if (nj < mu_at(i)) { ni = i + 1; nj = -1; }
            self(self, ni, nj);
            ++need[v - 1];
            --placed[v];
            grid[i][j] = 0;
        }
    };
    rec(rec, 0, -1);
    return count;
}

unsigned long lr_coefficient(const Partition& lambda, const Partition& mu,
                             const Partition& nu) {
    check_partition(lambda, "lr_coefficient");
    check_partition(mu, "lr_coefficient");
    check_partition(nu, "lr_coefficient");
    if (partition_size(mu) + partition_size(nu) != partition_size(lambda)) return 0;
    if (!partition_contains(lambda, mu)) return 0;
    if (!partition_contains(lambda, nu)) return 0;

    static std::unordered_map<std::array<std::uint64_t, 3>, unsigned long, U64TripleHash> cache;
    static std::mutex mtx;
    std::array<std::uint64_t, 3> key{pack_partition(lambda), pack_partition(mu),
                                     pack_partition(nu)};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    unsigned long v = lr_backtrack(lambda, mu, nu);
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(key, v);
    return v;
}

std::vector<Partition> pieri_targets(const Partition& lambda, int a) {
    check_partition(lambda, "pieri_targets");
    if (a < 0 || a > partition_size(lambda)) return {};
    std::vector<Partition> out;
    Partition cur;
    int rows = (int)lambda.size();
    auto low = [&](int i) { return i + 1 < rows ? lambda[i + 1] : 0; };
    auto rec = [&](auto&& self, int i, int removed) -> void {
        if (i == rows) {
            if (removed == a) {
                Partition p = cur;
                while (!p.empty() && p.back() == 0) p.pop_back();
                out.push_back(p);
            }
            return;
        }
        for (int v = lambda[i]; v >= low(i); --v) {
            int rem = removed + (lambda[i] - v);
            if (rem > a) break;
            cur.push_back(v);
            self(self, i + 1, rem);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) {
        return std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end());
    });
    return out;
}

unsigned long brauer_branching_coefficient(const Partition& lambda,
                                           const Partition& mu,
                                           const Partition& nu) {
    check_partition(lambda, "brauer_branching_coefficient");
    check_partition(mu, "brauer_branching_coefficient");
    check_partition(nu, "brauer_branching_coefficient");
    int sl = partition_size(lambda), sm = partition_size(mu), sn = partition_size(nu);
    if ((sl + sm + sn) % 2 != 0) return 0;
    int a = (sl + sm - sn) / 2, b = (sl + sn - sm) / 2, c = (sm + sn - sl) / 2;
    if (a < 0 || b < 0 || c < 0) return 0;

    static std::unordered_map<std::array<std::uint64_t, 3>, unsigned long, U64TripleHash> cache;
    static std::mutex mtx;
    std::array<std::uint64_t, 3> key{pack_partition(lambda), pack_partition(mu),
                                     pack_partition(nu)};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    unsigned long total = 0;
    for (const Partition& alpha : enumerate_partitions(a)) {
        if (!partition_contains(lambda, alpha) || !partition_contains(mu, alpha)) continue;
        for (const Partition& beta : enumerate_partitions(b)) {
            unsigned long clab = lr_coefficient(lambda, alpha, beta);
            if (clab == 0) continue;
            for (const Partition& gamma : enumerate_partitions(c)) {
                unsigned long cmag = lr_coefficient(mu, alpha, gamma);
                if (cmag == 0) continue;
                unsigned long cnbg = lr_coefficient(nu, beta, gamma);
                if (cnbg == 0) continue;
                total += clab * cmag * cnbg;
            }
        }
    }
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(key, total);
    return total;
}

// ---- Murnaghan-Nakayama -----------------------------------------------------

// Beta-set of lambda with k = len(lambda): {lambda_i + (k-i)}, i = 1..k.
// Removing a border strip of length r corresponds to replacing some b in B
// (b >= r, b-r not in B) by b-r; the strip height contributes the sign
// (-1)^{#elements of B strictly between b-r and b}.
static long mn_char(const Partition& lambda, const Partition& rho,
                         std::size_t rho_from);

static long mn_char_memo(const Partition& lambda, const Partition& rho,
                              std::size_t rho_from) {
    static std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, long,
                              U64PairHash>
        cache;
    static std::mutex mtx;
    Partition tail(rho.begin() + rho_from, rho.end());
    std::pair<std::uint64_t, std::uint64_t> key{pack_partition(lambda),
                                                pack_partition(tail)};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    long v = mn_char(lambda, rho, rho_from);
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(key, v);
    return v;
}

static long mn_char(const Partition& lambda, const Partition& rho,
                         std::size_t rho_from) {
    if (lambda.empty()) return 1;
    int r = rho[rho_from];
    int k = (int)lambda.size();
    std::vector<int> beta(k);
    for (int i = 0; i < k; ++i) beta[i] = lambda[i] + (k - 1 - i); // descending
    long total = 0;
    for (int i = 0; i < k; ++i) {
        int b = beta[i];
        if (b < r) break;
        int target = b - r;
        bool occupied = false;
        int between = 0;
        for (int j = 0; j < k; ++j) {
            if (j == i) continue;
            if (beta[j] == target) { occupied = true; break; }
            if (beta[j] > target && beta[j] < b) ++between;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        Partition nl(k);
        for (int j = 0; j < k; ++j) nl[j] = nb[j] - (k - 1 - j);
        while (!nl.empty() && nl.back() == 0) nl.pop_back();
        long sub = (rho_from + 1 < rho.size() || !nl.empty())
                            ? mn_char_memo(nl, rho, rho_from + 1)
                            : 1;
        total += (between % 2 == 0) ? sub : -sub;
    }
    return total;
}

long sn_character(const Partition& lambda, const Partition& rho) {
    check_partition(lambda, "sn_character");
    check_partition(rho, "sn_character");
    if (partition_size(lambda) != partition_size(rho))
        throw std::invalid_argument("sn_character: |lambda| != |rho|");
    if (partition_size(lambda) > 62)
        throw std::invalid_argument("sn_character: size beyond supported range");
    if (lambda.empty()) return 1;
    return mn_char_memo(lambda, rho, 0);
}

unsigned long kronecker_coefficient(const Partition& lambda, const Partition& mu,
                                    const Partition& nu) {
    int n = partition_size(lambda);
    if (partition_size(mu) != n || partition_size(nu) != n)
        throw std::invalid_argument("kronecker_coefficient: sizes differ");
    Integer sum = 0;
    for (const Partition& rho : enumerate_partitions(n)) {
        long a = sn_character(lambda, rho);
        if (a == 0) continue;
        long b = sn_character(mu, rho);
        if (b == 0) continue;
        long c = sn_character(nu, rho);
        if (c == 0) continue;
        Integer term = class_size(rho);
        term *= static_cast<long>(a);
        term *= static_cast<long>(b);
        term *= static_cast<long>(c);
        sum += term;
    }
    Integer nf = factorial(n);
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), sum.get_mpz_t(), nf.get_mpz_t());
    if (r != 0 || q < 0)
        throw std::logic_error("kronecker_coefficient: inner product not a "
                               "nonnegative integer");
    if (!q.fits_ulong_p())
        throw std::logic_error("kronecker_coefficient: value out of range");
    return q.get_ui();
}

Partition padded(const Partition& lambda, int n) {
    check_partition(lambda, "padded");
    int head = n - partition_size(lambda);
    if (head < partition_first(lambda))
        throw std::invalid_argument("padded: n < |lambda| + lambda_1");
    Partition out;
    out.reserve(lambda.size() + 1);
    out.push_back(head);
    out.insert(out.end(), lambda.begin(), lambda.end());
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

unsigned long reduced_kronecker(const Partition& lambda, const Partition& mu,
                                const Partition& nu) {
    check_partition(lambda, "reduced_kronecker");
    check_partition(mu, "reduced_kronecker");
    check_partition(nu, "reduced_kronecker");
    int N = partition_size(lambda) + partition_first(lambda) + partition_size(mu) +
            partition_first(mu) + partition_size(nu) + partition_first(nu);
    if (N + 1 > 62)
        throw std::invalid_argument("reduced_kronecker: stabilization size "
                                    "exceeds supported range");
    unsigned long atN =
        kronecker_coefficient(padded(lambda, N), padded(mu, N), padded(nu, N));
    unsigned long atN1 = kronecker_coefficient(padded(lambda, N + 1),
                                               padded(mu, N + 1), padded(nu, N + 1));
    if (atN != atN1)
        throw std::logic_error("reduced_kronecker: values at N and N+1 disagree");
    return atN;
}

std::vector<long> jones_polynomial(int k) {
    if (k < 0) throw std::invalid_argument("jones_polynomial: k < 0");
    std::vector<long> prev{1}, cur{1}; // P_0, P_1
    if (k == 0) return prev;
    for (int i = 1; i < k; ++i) {
        // next = cur - X * prev
        std::vector<long> next(std::max(cur.size(), prev.size() + 1), 0);
        for (std::size_t j = 0; j < cur.size(); ++j) next[j] += cur[j];
        for (std::size_t j = 0; j < prev.size(); ++j) next[j + 1] -= prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

static Rational eval_poly(const std::vector<long>& coeffs, const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + Rational(coeffs[i]);
    return acc;
}

ParameterStatus check_parameter(Family family, const Rational& delta, int n) {
    if (n < 0) throw std::invalid_argument("check_parameter: n < 0");
    ParameterStatus st;
    std::string reasons;
    auto fail = [&](const std::string& r) {
        if (!reasons.empty()) reasons += "; ";
        reasons += r;
    };
    switch (family) {
    case Family::TL: {
        if (delta == 0) {
            fail("delta = 0");
        } else {
            Rational x = 1 / (delta * delta);
            for (int k = 2; k <= n - 1; ++k) {
                if (eval_poly(jones_polynomial(k), x) == 0)
                    fail("P_" + std::to_string(k) + "(delta^-2) = 0");
            }
        }
        Rational d2 = delta * delta;
        for (int t = 0; t <= 4; ++t) {
            if (d2 == t) {
                fail("delta^2 = " + std::to_string(t) +
                     " (root-of-unity exclusion)");
                break;
            }
        }
        break;
    }
    case Family::Br:
        for (int t = 0; t <= n - 2; ++t)
            if (delta == t) fail("delta = " + std::to_string(t));
        break;
    case Family::P:
        for (int t = 0; t <= 2 * n - 2; ++t)
            if (delta == t) fail("delta = " + std::to_string(t));
        break;
    }
    st.admissible = reasons.empty();
    st.reason = reasons;
    return st;
}

} // namespace dstab
