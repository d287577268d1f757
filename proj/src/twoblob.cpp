#include "dstab/twoblob.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace dstab {

namespace {

[[noreturn]] void bad(const char* msg) { throw std::invalid_argument(msg); }

// Reattach collapsed dots.  Left arc: marked blocks take -(a+1).. in block
// order, pure strands fill the deep end -(n+a)..; right arc mirrors the hom
// rule, marked blocks take (n+a-pure).. descending, pure strands sit above.
// The j-th pure strand is {-(n+a-j), n+a-j}, so strands nest around the
// bottom of the picture with j = 0 innermost.
PartitionDiagram lift_diagram(const TwoBlobDiagram& t) {
    int total = t.n + t.a;
    std::vector<std::vector<int>> blocks = t.blocks;
    int left_dot = t.a + 1;
    for (int idx : t.left_marked) blocks[std::size_t(idx)].push_back(-left_dot++);
    int right_dot = total - t.pure;
    for (int idx : t.right_marked) blocks[std::size_t(idx)].push_back(right_dot--);
    for (int j = 0; j < t.pure; ++j) blocks.push_back({-(total - j), total - j});
    return make_diagram(total, std::move(blocks));
}

}  // namespace

TwoBlobDiagram make_two_blob(Family family, int n, int a, int m, int pure,
                             std::vector<std::vector<int>> blocks,
                             std::vector<int> left_marked,
                             std::vector<int> right_marked) {
    if (n < 0 || a < 0 || m < 0) bad("blob parameters must be nonnegative");
    if (pure < 0) bad("negative pure strand count");
    if (int(left_marked.size()) + pure != n)
        bad("left blob valence must equal n");
    if (int(right_marked.size()) + pure != n + a - m)
        bad("right blob valence must equal n+a-m");

    std::vector<char> seen(std::size_t(a + m), 0);
    for (auto& block : blocks) {
        if (block.empty()) bad("empty block");
        for (int e : block) {
            int slot = -1;
            if (e < 0 && e >= -a) slot = e + a;
            if (e > 0 && e <= m) slot = a + e - 1;
            if (slot < 0) bad("element outside {-a..-1} u {1..m}");
            if (seen[std::size_t(slot)]) bad("repeated element");
            seen[std::size_t(slot)] = 1;
        }
        std::sort(block.begin(), block.end());
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        bad("blocks must cover all kept dots");

    std::vector<int> order(blocks.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return blocks[std::size_t(i)] < blocks[std::size_t(j)]; });
    std::vector<int> rank(blocks.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos)
        rank[std::size_t(order[pos])] = int(pos);
    std::vector<std::vector<int>> sorted_blocks(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i)
        sorted_blocks[std::size_t(rank[i])] = std::move(blocks[i]);

    auto remap = [&](std::vector<int>& marks, const char* side) {
        for (int& idx : marks) {
            if (idx < 0 || idx >= int(sorted_blocks.size())) bad(side);
            idx = rank[std::size_t(idx)];
        }
        std::sort(marks.begin(), marks.end());
        if (std::adjacent_find(marks.begin(), marks.end()) != marks.end())
            bad(side);
    };
    remap(left_marked, "bad left mark index");
    remap(right_marked, "bad right mark index");

    if (family != Family::P) {
        std::size_t li = 0, ri = 0;
        for (int b = 0; b < int(sorted_blocks.size()); ++b) {
            bool lm = li < left_marked.size() && left_marked[li] == b;
            bool rm = ri < right_marked.size() && right_marked[ri] == b;
            if (lm) ++li;
            if (rm) ++ri;
            if (lm && rm) bad("a matching block cannot touch both blobs");
            std::size_t want = (lm || rm) ? 1 : 2;
            if (sorted_blocks[std::size_t(b)].size() != want)
                bad("marked blocks are singletons, unmarked blocks are pairs");
        }
    }

    TwoBlobDiagram t{family, n,    a,
                     m,      pure, std::move(sorted_blocks),
                     std::move(left_marked), std::move(right_marked)};
    if (family == Family::TL && !is_noncrossing(lift_diagram(t)))
        bad("crossing TL strands");
    return t;
}

PartitionDiagram two_blob_lift(const TwoBlobDiagram& t) {
    return lift_diagram(t);
}

std::optional<TwoBlobDiagram> two_blob_project(Family family,
                                               const PartitionDiagram& d,
                                               int a, int m) {
    if (a < 0 || a > d.n) bad("kept left count out of range");
    if (m < 0 || m > d.n) bad("kept right count out of range");
    int n = d.n - a;

    int pure = 0;
    std::vector<std::vector<int>> kept;
    std::vector<int> left_marked;
    std::vector<int> right_marked;
    for (const auto& block : d.blocks) {
        int left = 0, right = 0;
        std::vector<int> rest;
        for (int e : block) {
            if (e < -a)
                ++left;
            else if (e > m)
                ++right;
            else
                rest.push_back(e);
        }
        if (left >= 2 || right >= 2) return std::nullopt;
        if (left + right == 1 && rest.empty()) return std::nullopt;
        if (rest.empty()) {
            if (left == 1) ++pure;  // left == right == 1: a blob-to-blob strand
            continue;
        }
        if (left == 1) left_marked.push_back(int(kept.size()));
        if (right == 1) right_marked.push_back(int(kept.size()));
        kept.push_back(std::move(rest));
    }
    return make_two_blob(family, n, a, m, pure, std::move(kept),
                         std::move(left_marked), std::move(right_marked));
}

const std::vector<TwoBlobDiagram>& two_blob_basis(Family family, int n, int a,
                                                  int m) {
    if (n < 0 || a < 0 || m < 0) bad("blob parameters must be nonnegative");
    static std::map<std::tuple<Family, int, int, int>, std::vector<TwoBlobDiagram>>
        cache;
    static std::mutex lock;
    std::lock_guard<std::mutex> guard(lock);
    auto [it, inserted] = cache.try_emplace({family, n, a, m});
    if (!inserted) return it->second;
    if (m > n + a) return it->second;
    std::set<TwoBlobDiagram> seen;
    for (const auto& d : enumerate_diagrams(family, n + a))
        if (auto t = two_blob_project(family, d, a, m)) seen.insert(std::move(*t));
    it->second.assign(seen.begin(), seen.end());
    return it->second;
}

TwoBlobDiagram phi_star(const TwoBlobDiagram& t) {
    return make_two_blob(t.family, t.n + 1, t.a, t.m, t.pure + 1, t.blocks,
                         t.left_marked, t.right_marked);
}

}  // namespace dstab
