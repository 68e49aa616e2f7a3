#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "nha/rewrite.hpp"

namespace nha {

/// Per-degree quotient data for an N-homogeneous algebra: monomial bases,
/// normal-form projectors and multiplication, extended lazily degree by
/// degree (single-writer; concurrent reads of materialized degrees are safe).
///
/// Two routes compute the same data: a rewriting route when the presentation
/// is confluent for its monomial order, and a reducer route (row echelon of
/// I_n, greatest-word pivots) in general.
class AlgebraView {
public:
    explicit AlgebraView(Presentation p);

    const Presentation& pres() const { return pres_; }
    Field field() const { return pres_.field(); }
    uint32_t dim_v() const { return pres_.dim_v(); }
    uint32_t N() const { return pres_.degree(); }
    bool confluent() const { return confluent_; }
    RewriteSystem& rewrite() { return rs_; }

    uint32_t max_degree() const { return static_cast<uint32_t>(degs_.size()) - 1; }
    void extend_to(uint32_t m);

    uint64_t dim(uint32_t m);
    const std::vector<uint64_t>& basis_words(uint32_t m);
    uint64_t basis_word(uint32_t m, uint32_t idx);
    std::optional<uint32_t> basis_index(uint32_t m, uint64_t word);

    /// class(word_a) * e_g, coordinates in the degree-(m+1) basis.
    const SparseVec& mul_gen(uint32_t m, uint32_t a_idx, uint32_t g);

    /// Right-multiply a degree-m class vector by a degree-wdeg word.
    SparseVec mul_word(uint32_t m, SparseVec a, uint64_t word, uint32_t wdeg);
    SparseVec mul_basis(uint32_t m, uint32_t a_idx, uint32_t n, uint32_t b_idx);
    SparseVec mul(uint32_t m, const SparseVec& a, uint32_t n, const SparseVec& b);
    /// e_g * class(basis word), via multiplication of classes.
    SparseVec lmul_gen(uint32_t g, uint32_t m, uint32_t a_idx);

    /// Normal-form projection V^{(x)m} ->> A_m in basis coordinates.
    SparseVec project(uint32_t m, const SparseVec& word_vec);
    SparseVec project_word(uint32_t m, uint64_t word);

    std::vector<uint64_t> hilbert(uint32_t up_to);

    /// dim I_m through the echelon code path (used to cross-check the
    /// rewriting route; identical to d^m - dim A_m).
    uint64_t ideal_dim(uint32_t m);

private:
    struct Deg {
        std::vector<uint64_t> words;
        std::unordered_map<uint64_t, uint32_t> index;
        std::vector<std::vector<SparseVec>> mul;   // [g][a_idx]
        std::vector<std::vector<uint8_t>> known;   // 0 = no, 1 = yes, 2 = in progress
    };

    void build_degree(uint32_t m);
    void ensure_mul_storage(uint32_t m);
    Rref& ensure_reducer(uint32_t m);
    SparseVec chain_apply(uint32_t deg0, uint32_t idx, uint64_t word, uint32_t wdeg);

    Presentation pres_;
    RewriteSystem rs_;
    bool confluent_;
    std::vector<Deg> degs_;
    std::vector<std::unique_ptr<Rref>> reducers_;
    std::vector<SparseVec> remapped_relations_;
};

}  // namespace nha
