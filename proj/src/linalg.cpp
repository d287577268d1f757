#include "dstab/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace dstab {

std::size_t integer_matrix_rank(std::vector<std::vector<Integer>> rows) {
    const std::size_t nrows = rows.size();
    const std::size_t ncols = nrows == 0 ? 0 : rows[0].size();
    for (const auto& row : rows)
        if (row.size() != ncols) throw std::invalid_argument("ragged matrix");

    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t pivot = rank;
        while (pivot < nrows && rows[pivot][col] == 0) ++pivot;
        if (pivot == nrows) continue;
        std::swap(rows[rank], rows[pivot]);
        // Bareiss step: every updated entry is a minor of the original
        // matrix on the pivot rows/columns plus (i, j), so the division by
        // the previous pivot is exact; mpz_divexact aborts if that breaks.
        for (std::size_t i = rank + 1; i < nrows; ++i) {
            for (std::size_t j = col + 1; j < ncols; ++j) {
                Integer t = rows[i][j] * rows[rank][col] - rows[i][col] * rows[rank][j];
                mpz_divexact(rows[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            rows[i][col] = 0;
        }
        prev = rows[rank][col];
        ++rank;
    }
    return rank;
}

std::size_t rational_matrix_rank(const std::vector<std::vector<Rational>>& rows) {
    std::vector<std::vector<Integer>> scaled;
    scaled.reserve(rows.size());
    for (const auto& row : rows) {
        Integer lcm = 1;
        for (const auto& x : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
        std::vector<Integer> out;
        out.reserve(row.size());
        for (const auto& x : row) out.push_back(Integer(x.get_num() * (lcm / x.get_den())));
        scaled.push_back(std::move(out));
    }
    return integer_matrix_rank(std::move(scaled));
}

BinomialQuotient::BinomialQuotient(std::size_t size)
    : parent_(size), weight_(size, Rational(1)), rank_(size, 0), dead_(size, 0) {
    for (std::size_t i = 0; i < size; ++i) parent_[i] = i;
}

std::size_t BinomialQuotient::find(std::size_t i) const {
    std::vector<std::size_t> path;
    std::size_t root = i;
    while (parent_[root] != root) {
        path.push_back(root);
        root = parent_[root];
    }
    // Compress nearest-to-root first, so each node composes its weight with
    // an already-compressed parent; afterwards e_j = weight_[j] * e_root for
    // every j on the path.  Roots keep weight 1.
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        std::size_t p = parent_[*it];
        if (p != root) weight_[*it] *= weight_[p];
        parent_[*it] = root;
    }
    return root;
}

void BinomialQuotient::kill(std::size_t i) {
    if (i >= parent_.size()) throw std::out_of_range("index past the basis");
    dead_[find(i)] = 1;
}

void BinomialQuotient::relate(std::size_t i, std::size_t j, const Rational& c) {
    if (i >= parent_.size() || j >= parent_.size())
        throw std::out_of_range("index past the basis");
    if (c == 0) {
        kill(i);
        return;
    }
    std::size_t ri = find(i);
    std::size_t rj = find(j);
    const Rational& wi = weight_[i];  // e_i = wi * e_ri (1 when i is a root)
    const Rational& wj = weight_[j];
    if (ri == rj) {
        // The class already fixes e_i = (wi/wj) e_j; a different ratio
        // collapses it to zero, exactly as elimination would.
        if (wi != c * wj) dead_[ri] = 1;
        return;
    }
    bool dead = dead_[ri] || dead_[rj];
    std::size_t child, root;
    if (rank_[ri] < rank_[rj]) {
        child = ri;
        root = rj;
        weight_[ri] = c * wj / wi;  // e_ri = (c wj / wi) e_rj
    } else {
        child = rj;
        root = ri;
        weight_[rj] = wi / (c * wj);  // e_rj = (wi / (c wj)) e_ri
        if (rank_[ri] == rank_[rj]) ++rank_[ri];
    }
    parent_[child] = root;
    if (dead) dead_[root] = 1;
}

std::size_t BinomialQuotient::dimension() const {
    std::size_t live = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i)
        if (parent_[i] == i && !dead_[i]) ++live;
    return live;
}

std::optional<std::pair<std::size_t, Rational>> BinomialQuotient::canonical(
    std::size_t i) const {
    if (i >= parent_.size()) throw std::out_of_range("index past the basis");
    std::size_t root = find(i);
    if (dead_[root]) return std::nullopt;
    return std::make_pair(root, weight_[i]);
}

std::vector<std::size_t> BinomialQuotient::representatives() const {
    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < parent_.size(); ++i)
        if (parent_[i] == i && !dead_[i]) roots.push_back(i);
    return roots;
}

}  // namespace dstab
