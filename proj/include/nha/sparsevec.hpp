#pragma once

#include <cstdint>
#include <vector>

#include "nha/scalar.hpp"

namespace nha {

struct Entry {
    uint64_t col;
    Scalar c;
};

/// Sparse coordinate row: entries sorted by column, no stored zeros.
using SparseVec = std::vector<Entry>;

inline SparseVec unit_vec(Field f, uint64_t col) { return SparseVec{{col, Scalar::one(f)}}; }

/// dst := dst + a*src (merge of sorted rows; drops cancelled entries).
void axpy(SparseVec& dst, const Scalar& a, const SparseVec& src);

SparseVec scaled(const SparseVec& v, const Scalar& a);
void scale_in_place(SparseVec& v, const Scalar& a);

/// Coefficient at a column (zero if absent).
Scalar coeff_at(const SparseVec& v, uint64_t col, Field f);

bool sparse_equal(const SparseVec& a, const SparseVec& b);

/// Lexicographic compare by (col, value) pairs; total order for canonical sets.
int sparse_cmp(const SparseVec& a, const SparseVec& b);

/// Re-index columns: col -> col*stride + offset (keeps ordering when stride>0).
SparseVec shifted(const SparseVec& v, uint64_t stride, uint64_t offset);

}  // namespace nha
