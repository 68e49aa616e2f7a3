#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "nha/sparsevec.hpp"

namespace nha {

/// Incremental Gaussian elimination over sorted sparse rows.
///
/// Rows are kept in echelon form: each stored row has a distinguished pivot
/// column (the least column if `pivot_low`, the greatest otherwise) with
/// coefficient 1, and no stored row's pivot occurs in a later inserted row.
/// `finalize()` back-substitutes to the unique fully reduced form and orders
/// rows by pivot, which is the canonical subspace representative.
class Rref {
public:
    Rref(Field f, bool pivot_low = true) : field_(f), pivot_low_(pivot_low) {}

    Field field() const { return field_; }
    size_t rank() const { return rows_.size(); }
    bool pivot_low() const { return pivot_low_; }

    /// Residual of v modulo the row span: eliminates every pivot column.
    /// The residual is the canonical coset representative.
    SparseVec reduce(SparseVec v) const;

    /// reduce(), also accumulating elimination coefficients per stored row.
    SparseVec reduce_tracked(SparseVec v, std::vector<Scalar>& coeffs) const;

    /// Inserts v's residual if nonzero (pivot normalized to 1). Returns
    /// whether the rank grew.
    bool insert(SparseVec v);

    /// Coordinates of v over the stored rows, or nullopt if v is outside.
    std::optional<std::vector<Scalar>> solve(const SparseVec& v) const;

    bool has_pivot(uint64_t col) const { return pivot_of_col_.count(col) != 0; }

    /// Full back-substitution + deterministic row order (pivots ascending).
    void finalize();

    const std::vector<SparseVec>& rows() const { return rows_; }
    uint64_t pivot(size_t row) const {
        return pivot_low_ ? rows_[row].front().col : rows_[row].back().col;
    }

private:
    size_t eliminate_once(SparseVec& v, size_t hint, std::vector<Scalar>* coeffs) const;

    Field field_;
    bool pivot_low_;
    std::vector<SparseVec> rows_;
    std::unordered_map<uint64_t, size_t> pivot_of_col_;
};

/// Rank of a streamed family of rows.
class RankAcc {
public:
    explicit RankAcc(Field f, bool pivot_low = true) : r_(f, pivot_low) {}
    void add(SparseVec v) { r_.insert(std::move(v)); }
    size_t rank() const { return r_.rank(); }
    const Rref& rref() const { return r_; }

private:
    Rref r_;
};

}  // namespace nha
