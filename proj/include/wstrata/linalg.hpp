#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wstrata/grc_algebra.hpp"

namespace wstrata {

/* Sparse exact linear algebra over Q.
 *
 * Vectors are sorted (index, coefficient) pairs with no zero entries.
 * RowSpace keeps a reduced echelon basis with unit pivots, inserting one
 * vector at a time with first-nonzero-column pivoting; the resulting basis
 * is the (unique) reduced echelon basis of the span, so every downstream
 * representative and witness is reproducible. */

using SparseVec = std::vector<std::pair<int, Rational>>;

// a + c*b, merged and pruned of zeros.
SparseVec sparse_axpy(const SparseVec& a, const Rational& c, const SparseVec& b);

class RowSpace {
public:
    explicit RowSpace(bool track_combinations = false) : track_(track_combinations) {}

    // Adds v to the span. Returns true when the rank grew. With tracking on,
    // each echelon row remembers its expression in the inserted vectors.
    bool insert(SparseVec v);

    // Residual of v modulo the current span and, when tracking, coefficients
    // c with v = residual + sum_k c[k] * inserted[k].
    std::pair<SparseVec, SparseVec> reduce(SparseVec v) const;

    bool contains(const SparseVec& v) const { return reduce(v).first.empty(); }

    int rank() const { return static_cast<int>(rows_.size()); }
    int inserted_count() const { return inserted_; }
    const std::vector<SparseVec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

private:
    bool track_;
    int inserted_ = 0;
    std::vector<SparseVec> rows_;    // sorted by pivot column
    std::vector<int> pivots_;
    std::vector<SparseVec> combos_;  // rows_[i] = sum combos_[i][k] * inserted k
};

// Reduced echelon basis of the span of the given vectors.
std::vector<SparseVec> echelon_basis(const std::vector<SparseVec>& vectors);

/* Kernel of the linear map sending basis vector e_i to rows[i], i.e. all x
 * with sum_i x[i]*rows[i] = 0, returned as a reduced echelon basis of
 * coefficient vectors. rank + kernel dimension = rows.size(). */
std::vector<SparseVec> kernel_basis(const std::vector<SparseVec>& rows);

// Coefficients c with sum_k c[k]*generators[k] = target, if target lies in
// the span. The witness is the canonical one produced by echelon reduction.
std::optional<SparseVec> solve_in_span(const std::vector<SparseVec>& generators,
                                       const SparseVec& target);

}  // namespace wstrata
