#include "dstab/repstab.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace dstab {

namespace {

[[noreturn]] void bad(const char* msg) { throw std::invalid_argument(msg); }

void require_valid(const SimpleLabel& label) {
    if (!label_valid(label)) bad("invalid simple label");
}

}  // namespace

bool label_valid(const SimpleLabel& label) {
    if (label.n < 0 || !is_partition(label.lambda)) return false;
    int size = partition_size(label.lambda);
    switch (label.family) {
        case Family::TL:
            return size == label.n && label.lambda.size() <= 2;
        case Family::Br:
            return size <= label.n && (label.n - size) % 2 == 0;
        default:
            return size <= label.n;
    }
}

int brauer_defect(const SimpleLabel& label) {
    if (label.family != Family::Br) bad("defect is a Brauer notion");
    require_valid(label);
    return (label.n - partition_size(label.lambda)) / 2;
}

std::vector<SimpleLabel> simple_labels(Family family, int n) {
    if (n < 0) bad("negative algebra size");
    std::vector<SimpleLabel> labels;
    switch (family) {
        case Family::TL:
            for (auto& p : enumerate_partitions(n))
                if (p.size() <= 2) labels.push_back({family, n, std::move(p)});
            break;
        case Family::Br:
            for (int size = n; size >= 0; size -= 2)
                for (auto& p : enumerate_partitions(size))
                    labels.push_back({family, n, std::move(p)});
            break;
        default:
            for (int size = 0; size <= n; ++size)
                for (auto& p : enumerate_partitions(size))
                    labels.push_back({family, n, std::move(p)});
            break;
    }
    return labels;
}

SimpleLabel trivial_label(Family family, int n) {
    if (n < 0) bad("negative algebra size");
    // The one-dimensional module on which permutation diagrams act by 1 and
    // every other diagram by 0 carries the full one-row label in all three
    // families: it is the pullback of the trivial S_n-representation along
    // A_n ->> A_n/J = RS_n.  (The label with empty tail is a different,
    // higher-dimensional simple for P.)
    Partition lambda;
    if (n > 0) lambda.push_back(n);
    return {family, n, std::move(lambda)};
}

std::pair<int, Partition> stable_key(const SimpleLabel& label) {
    require_valid(label);
    Partition tail(label.lambda.begin() + (label.lambda.empty() ? 0 : 1),
                   label.lambda.end());
    return {label.n - partition_size(label.lambda), std::move(tail)};
}

unsigned long restriction_multiplicity(const SimpleLabel& lambda,
                                       const SimpleLabel& mu,
                                       const SimpleLabel& nu) {
    if (lambda.family != mu.family || lambda.family != nu.family)
        bad("family mismatch");
    if (lambda.n != mu.n + nu.n) bad("restriction sizes must split n");
    require_valid(lambda);
    require_valid(mu);
    require_valid(nu);
    switch (lambda.family) {
        case Family::TL:
            return lr_coefficient(lambda.lambda, mu.lambda, nu.lambda);
        case Family::Br:
            return brauer_branching_coefficient(lambda.lambda, mu.lambda,
                                                nu.lambda);
        default:
            return reduced_kronecker(lambda.lambda, mu.lambda, nu.lambda);
    }
}

Integer simple_dimension(const SimpleLabel& label) {
    require_valid(label);
    static std::map<SimpleLabel, Integer> cache;
    static std::mutex lock;
    {
        std::lock_guard<std::mutex> guard(lock);
        auto it = cache.find(label);
        if (it != cache.end()) return it->second;
    }
    Integer dim;
    if (label.n == 0) {
        dim = 1;
    } else {
        dim = 0;
        for (const auto& mu : simple_labels(label.family, label.n - 1)) {
            unsigned long strands = 0;
            for (const auto& nu : simple_labels(label.family, 1))
                strands += restriction_multiplicity(label, mu, nu);
            if (strands) dim += Integer(strands) * simple_dimension(mu);
        }
    }
    std::lock_guard<std::mutex> guard(lock);
    return cache.emplace(label, std::move(dim)).first->second;
}

unsigned long tau_simple_multiplicity(const SimpleLabel& lambda,
                                      const SimpleLabel& mu) {
    if (lambda.family != mu.family) bad("family mismatch");
    if (mu.n > lambda.n) bad("compression target exceeds the source size");
    return restriction_multiplicity(
        lambda, mu, trivial_label(lambda.family, lambda.n - mu.n));
}

MultiplicityTable decompose_M(Family family, int m, int n) {
    if (m < 0 || m > n) bad("module parameter out of range");
    MultiplicityTable table{family, n,
                            "M(" + std::to_string(m) + ")_" + std::to_string(n),
                            {}};
    SimpleLabel triv = trivial_label(family, n - m);
    for (const auto& lambda : simple_labels(family, n)) {
        Integer c = 0;
        for (const auto& mu : simple_labels(family, m)) {
            unsigned long mult = restriction_multiplicity(lambda, mu, triv);
            if (mult) c += Integer(mult) * simple_dimension(mu);
        }
        if (c != 0) table.entries.emplace(lambda.lambda, std::move(c));
    }
    return table;
}

bool weight_bound_check(const MultiplicityTable& table, int g) {
    for (const auto& [lambda, mult] : table.entries) {
        if (mult == 0) continue;
        int weight, bound = g;
        switch (table.family) {
            case Family::TL:
                weight = partition_size(lambda) - partition_first(lambda);
                break;
            case Family::Br:
                weight = partition_size(lambda) - partition_first(lambda) +
                         (table.n - partition_size(lambda)) / 2;
                break;
            default:
                // Constituents drift away from the one-row direction by at
                // most twice the generation degree: n - |λ| ≤ 2g.
                weight = table.n - partition_size(lambda);
                bound = 2 * g;
                break;
        }
        if (weight > bound) return false;
    }
    return true;
}

int stable_range(Family family, int g, int r) {
    if (g < 0 || r < 0) bad("degrees must be nonnegative");
    switch (family) {
        case Family::TL: return g + std::max(g, r);
        case Family::Br: return 2 * g + std::max(g, r);
        default: return 2 * g + std::max(2 * g, 2 * r);
    }
}

int stability_degree_bound(Family family, int g, int r) {
    if (g < 0 || r < 0) bad("degrees must be nonnegative");
    int scale = (family == Family::P) ? 2 : 1;
    return scale * std::max(g, r);
}

}  // namespace dstab
