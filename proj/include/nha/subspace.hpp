#pragma once

#include <optional>
#include <vector>

#include "nha/rank.hpp"
#include "nha/wordspace.hpp"

namespace nha {

/// A subspace of a word space, held as the canonical reduced row echelon
/// basis (pivot columns ascending).  Immutable after construction; equal
/// subspaces have identical basis matrices.
class Subspace {
public:
    Subspace(WordSpace ambient, Field f) : ambient_(ambient), rref_(f, true) {}

    static Subspace zero(WordSpace ambient, Field f) { return Subspace(ambient, f); }
    static Subspace full(WordSpace ambient, Field f);
    static Subspace span(WordSpace ambient, Field f, std::vector<SparseVec> vectors);

    const WordSpace& ambient() const { return ambient_; }
    Field field() const { return rref_.field(); }
    uint64_t dim() const { return rref_.rank(); }
    bool is_zero() const { return dim() == 0; }
    const std::vector<SparseVec>& basis() const { return rref_.rows(); }

    bool equals(const Subspace& o) const;
    bool contains(const Subspace& o) const;
    bool contains_vector(const SparseVec& v) const { return rref_.reduce(v).empty(); }

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;

    /// R^perp under the tensor-of-forms pairing (coordinatewise on words).
    Subspace annihilator() const;

    /// V^{(x)i} (x) this (x) V^{(x)j} inside the degree-(i+deg+j) word space.
    Subspace embed_block(uint32_t i, uint32_t j) const;

    SparseVec reduce(SparseVec v) const { return rref_.reduce(std::move(v)); }
    std::optional<std::vector<Scalar>> coords(const SparseVec& v) const { return rref_.solve(v); }

    /// Total order on subspaces of one ambient (for deterministic sets).
    int cmp(const Subspace& o) const;

private:
    void check_ambient(const Subspace& o) const;

    WordSpace ambient_;
    Rref rref_;
};

}  // namespace nha
