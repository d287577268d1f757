#include "dstab/diagram.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace dstab {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int m) : parent(m) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

// Positions around the planar boundary: -k sits at k-1 going down the left
// side, +j at 2n-j coming back up the right side.
int boundary_position(int n, int e) { return e < 0 ? -e - 1 : 2 * n - e; }

void noncrossing_rec(int pos, int total, std::vector<int>& open,
                     std::vector<std::pair<int, int>>& pairs,
                     std::vector<std::vector<std::pair<int, int>>>& out) {
    if (pos == total) {
        if (open.empty()) out.push_back(pairs);
        return;
    }
    if (!open.empty()) {
        int top = open.back();
        open.pop_back();
        pairs.emplace_back(top, pos);
        noncrossing_rec(pos + 1, total, open, pairs, out);
        pairs.pop_back();
        open.push_back(top);
    }
    if (int(open.size()) + 1 <= total - pos - 1) {
        open.push_back(pos);
        noncrossing_rec(pos + 1, total, open, pairs, out);
        open.pop_back();
    }
}

std::vector<PartitionDiagram> build_diagrams(Family family, int n) {
    std::vector<PartitionDiagram> out;
    std::vector<int> labels;
    for (int k = -n; k <= n; ++k)
        if (k != 0) labels.push_back(k);

    switch (family) {
    case Family::TL: {
        std::vector<std::vector<std::pair<int, int>>> matchings;
        std::vector<int> open;
        std::vector<std::pair<int, int>> pairs;
        noncrossing_rec(0, 2 * n, open, pairs, matchings);
        for (const auto& m : matchings) {
            std::vector<std::vector<int>> blocks;
            for (auto [i, j] : m) {
                int a = i < n ? -(i + 1) : 2 * n - i;
                int b = j < n ? -(j + 1) : 2 * n - j;
                blocks.push_back({a, b});
            }
            out.push_back(make_diagram(n, std::move(blocks)));
        }
        break;
    }
    case Family::Br: {
        std::vector<std::vector<int>> blocks;
        std::vector<bool> used(labels.size(), false);
        auto rec = [&](auto&& self, std::size_t first) -> void {
            while (first < labels.size() && used[first]) ++first;
            if (first == labels.size()) {
                out.push_back(make_diagram(n, blocks));
                return;
            }
            used[first] = true;
            for (std::size_t j = first + 1; j < labels.size(); ++j) {
                if (used[j]) continue;
                used[j] = true;
                blocks.push_back({labels[first], labels[j]});
                self(self, first + 1);
                blocks.pop_back();
                used[j] = false;
            }
            used[first] = false;
        };
        rec(rec, 0);
        break;
    }
    case Family::P: {
        // restricted growth strings over the 2n labels
        std::vector<int> group(labels.size(), 0);
        auto rec = [&](auto&& self, std::size_t i, int maxg) -> void {
            if (i == labels.size()) {
                std::vector<std::vector<int>> blocks(maxg + 1);
                for (std::size_t j = 0; j < labels.size(); ++j)
                    blocks[group[j]].push_back(labels[j]);
                out.push_back(make_diagram(n, std::move(blocks)));
                return;
            }
            for (int g = 0; g <= maxg + 1; ++g) {
                group[i] = g;
                self(self, i + 1, std::max(maxg, g));
            }
        };
        if (n == 0)
            out.push_back(make_diagram(0, {}));
        else {
            group[0] = 0;
            rec(rec, 1, 0);
        }
        break;
    }
    }
    return out;
}

} // namespace

PartitionDiagram make_diagram(int n, std::vector<std::vector<int>> blocks) {
    if (n < 0) throw std::invalid_argument("diagram: n < 0");
    std::vector<char> seen(2 * std::size_t(n), 0);
    auto slot = [n](int e) { return e < 0 ? e + n : n + e - 1; };
    for (auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("diagram: empty block");
        for (int e : b) {
            if (e == 0 || e < -n || e > n)
                throw std::invalid_argument("diagram: element " +
                                            std::to_string(e) +
                                            " out of range for n = " +
                                            std::to_string(n));
            if (seen[slot(e)])
                throw std::invalid_argument("diagram: element " +
                                            std::to_string(e) + " repeated");
            seen[slot(e)] = 1;
        }
        std::sort(b.begin(), b.end());
    }
    if (!std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; }))
        throw std::invalid_argument("diagram: blocks do not cover all dots");
    std::sort(blocks.begin(), blocks.end());
    return PartitionDiagram{n, std::move(blocks)};
}

PartitionDiagram identity(int n) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(n);
    for (int k = 1; k <= n; ++k) blocks.push_back({-k, k});
    return make_diagram(n, std::move(blocks));
}

bool is_invertible(const PartitionDiagram& d) {
    for (const auto& b : d.blocks)
        if (b.size() != 2 || b[0] >= 0 || b[1] <= 0) return false;
    return true;
}

bool is_matching(const PartitionDiagram& d) {
    for (const auto& b : d.blocks)
        if (b.size() != 2) return false;
    return true;
}

bool is_noncrossing(const PartitionDiagram& d) {
    if (!is_matching(d))
        throw std::invalid_argument("is_noncrossing: not a matching");
    const int n = d.n;
    std::vector<int> partner(2 * std::size_t(n), -1);
    for (const auto& b : d.blocks) {
        int i = boundary_position(n, b[0]), j = boundary_position(n, b[1]);
        partner[i] = j;
        partner[j] = i;
    }
    std::vector<int> stack;
    for (int i = 0; i < 2 * n; ++i) {
        if (partner[i] > i) {
            stack.push_back(i);
        } else {
            if (stack.empty() || stack.back() != partner[i]) return false;
            stack.pop_back();
        }
    }
    return true;
}

bool family_valid(Family family, const PartitionDiagram& d) {
    switch (family) {
    case Family::P: return true;
    case Family::Br: return is_matching(d);
    case Family::TL: return is_matching(d) && is_noncrossing(d);
    }
    return false;
}

CompositionResult compose(const PartitionDiagram& p, const PartitionDiagram& r) {
    if (p.n != r.n) throw std::invalid_argument("compose: size mismatch");
    const int n = p.n;
    // node layout: 0..n-1 outer left, n..2n-1 glued middle, 2n..3n-1 outer right
    UnionFind uf(3 * n);
    auto pnode = [n](int e) { return e < 0 ? -e - 1 : n + e - 1; };
    auto rnode = [n](int e) { return e < 0 ? n - e - 1 : 2 * n + e - 1; };
    for (const auto& b : p.blocks)
        for (std::size_t i = 1; i < b.size(); ++i)
            uf.unite(pnode(b[0]), pnode(b[i]));
    for (const auto& b : r.blocks)
        for (std::size_t i = 1; i < b.size(); ++i)
            uf.unite(rnode(b[0]), rnode(b[i]));

    std::map<int, std::vector<int>> outer;
    for (int k = 1; k <= n; ++k) {
        outer[uf.find(k - 1)].push_back(-k);
        outer[uf.find(2 * n + k - 1)].push_back(k);
    }
    std::set<int> middle_roots;
    for (int j = 0; j < n; ++j) middle_roots.insert(uf.find(n + j));
    int loops = 0;
    for (int root : middle_roots)
        if (!outer.count(root)) ++loops;

    std::vector<std::vector<int>> blocks;
    blocks.reserve(outer.size());
    for (auto& [root, elems] : outer) blocks.push_back(std::move(elems));
    return CompositionResult{loops, make_diagram(n, std::move(blocks))};
}

PartitionDiagram tensor(const PartitionDiagram& p, const PartitionDiagram& q) {
    std::vector<std::vector<int>> blocks = p.blocks;
    blocks.reserve(p.blocks.size() + q.blocks.size());
    for (const auto& b : q.blocks) {
        std::vector<int> shifted;
        shifted.reserve(b.size());
        for (int e : b) shifted.push_back(e < 0 ? e - p.n : e + p.n);
        blocks.push_back(std::move(shifted));
    }
    return make_diagram(p.n + q.n, std::move(blocks));
}

const std::vector<PartitionDiagram>& enumerate_diagrams(Family family, int n) {
    if (n < 0) throw std::invalid_argument("enumerate_diagrams: n < 0");
    static std::map<std::pair<Family, int>, std::vector<PartitionDiagram>> cache;
    static std::mutex mtx;
    std::pair<Family, int> key{family, n};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::vector<PartitionDiagram> out = build_diagrams(family, n);
    std::sort(out.begin(), out.end());
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

std::size_t diagram_index(Family family, const PartitionDiagram& d) {
    const auto& all = enumerate_diagrams(family, d.n);
    auto it = std::lower_bound(all.begin(), all.end(), d);
    if (it == all.end() || !(*it == d))
        throw std::invalid_argument(
            "diagram_index: diagram is not in the family basis");
    return std::size_t(it - all.begin());
}

PartitionDiagram block_transposition(int a, int b) {
    if (a < 0 || b < 0)
        throw std::invalid_argument("block_transposition: negative size");
    std::vector<std::vector<int>> blocks;
    blocks.reserve(a + b);
    for (int x = 1; x <= a + b; ++x)
        blocks.push_back({-x, x <= a ? x + b : x - a});
    return make_diagram(a + b, std::move(blocks));
}

} // namespace dstab
