#ifndef DSTAB_LINALG_HPP
#define DSTAB_LINALG_HPP

#include "dstab/rational.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace dstab {

// Rank by fraction-free (Bareiss) elimination: every intermediate entry is a
// minor of the input, so each division is exact and nothing ever leaves Z.
// Rows must all have the same length; the matrix is consumed.
std::size_t integer_matrix_rank(std::vector<std::vector<Integer>> rows);

// Clears denominators row by row (scaling rows leaves the rank alone), then
// eliminates over Z.
std::size_t rational_matrix_rank(const std::vector<std::vector<Rational>>& rows);

// Incremental quotient of a free module by relations with at most two
// nonzero coordinates: kill(i) imposes e_i = 0, relate(i, j, c) imposes
// e_i = c * e_j.  This is exact elimination specialized to such rows,
// maintained as a union-find with rational edge weights; a diagram times a
// diagram is a delta-power times a single diagram, so the tensor-product
// relation spans of the verifier are made entirely of rows of this shape.
// Two inconsistent weights between already-joined coordinates force the
// whole class to zero, exactly as elimination would.
class BinomialQuotient {
  public:
    explicit BinomialQuotient(std::size_t size);

    void kill(std::size_t i);
    void relate(std::size_t i, std::size_t j, const Rational& c);

    // Number of live classes = dimension of the quotient.
    std::size_t dimension() const;

    // e_i = weight * e_root with the root live, or nullopt when e_i = 0.
    std::optional<std::pair<std::size_t, Rational>> canonical(std::size_t i) const;

    // Ascending live roots, one per class.
    std::vector<std::size_t> representatives() const;

    std::size_t size() const { return parent_.size(); }

  private:
    std::size_t find(std::size_t i) const;

    // e_i = weight_[i] * e_{parent_[i]}; roots carry weight 1.
    mutable std::vector<std::size_t> parent_;
    mutable std::vector<Rational> weight_;
    std::vector<std::size_t> rank_;  // union-by-rank, meaningful at roots
    std::vector<char> dead_;         // meaningful at roots
};

}  // namespace dstab

#endif
