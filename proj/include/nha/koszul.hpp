#pragma once

#include <optional>
#include <string>

#include "nha/algebra_view.hpp"
#include "nha/subspace.hpp"

namespace nha {

/// Jump map: n(2q) = qN, n(2q+1) = qN + 1.
uint32_t jump(uint32_t i, uint32_t N);

/// The syzygy spaces W_n = intersection of all V^{(x)i} (x) R (x) V^{(x)j},
/// i+j+N = n, computed incrementally: W_{n+1} = (V (x) W_n) cap (R (x) V^{(x)(n+1-N)}).
class WChain {
public:
    explicit WChain(Presentation p) : pres_(std::move(p)) {}

    const Presentation& pres() const { return pres_; }
    const Subspace& W(uint32_t n);
    uint64_t dim(uint32_t n) { return W(n).dim(); }

private:
    Presentation pres_;
    std::vector<Subspace> ws_;
};

struct SparseMat {
    uint64_t n_rows = 0;
    uint64_t n_cols = 0;
    std::vector<SparseVec> rows;  // rows[r] = image of source basis vector r
};

/// A chain complex restricted to one internal degree: spaces for homological
/// indices 0..top and differentials delta[i]: C_i -> C_{i-1}.
struct ComplexSlice {
    std::vector<uint64_t> dims;
    std::vector<SparseMat> delta;  // delta[0] unused

    int64_t euler() const;
    std::vector<uint64_t> ranks() const;     // rank of delta[i]
    std::vector<uint64_t> homology() const;  // h_i from dims and ranks
    bool composites_vanish() const;          // delta_i o delta_{i+1} = 0
};

/// Koszul 2-complex slice at internal degree j: C_i = (A (x) W_{n(i)})_j.
ComplexSlice koszul_slice(AlgebraView& view, WChain& wch, uint32_t j, uint32_t i_max);

/// Same slice data built through the dual-algebra contraction K'_l(A)
/// (components A (x) A^!*_{n(i)}, differential via A^! multiplication).
ComplexSlice koszul_slice_via_dual(AlgebraView& view, AlgebraView& dual, uint32_t j,
                                   uint32_t i_max);

struct KoszulVerdict {
    enum class Status { certified, up_to, not_koszul };
    Status status = Status::up_to;
    std::string method;   // "confluence+extra" or "truncated_exactness"
    uint32_t bound = 0;   // internal-degree budget actually checked
    // not_koszul witness: nonzero homology at homological degree >= 2
    uint32_t witness_i = 0;
    uint32_t witness_j = 0;
    uint64_t witness_dim = 0;
    bool confluent = false;
    bool extra_ok = false;

    bool positive() const { return status != Status::not_koszul; }
};

KoszulVerdict koszulity_verdict(AlgebraView& view, WChain& wch, uint32_t j_budget);

struct ExtraConditionResult {
    bool holds = true;
    uint32_t failing_m = 0;  // valid when !holds
};

/// (V^{(x)m} (x) R) cap (R (x) V^{(x)m}) = W_{N+m} for m = 1..N-1
/// (void for N = 2).
ExtraConditionResult extra_condition(WChain& wch);

struct ConfluenceResult {
    bool confluent = true;
    uint64_t witness_word = 0;  // unresolved ambiguity
    uint32_t witness_length = 0;
};

ConfluenceResult confluence_check(const Presentation& p);
ConfluenceResult confluence_check(const Presentation& p, const MonomialOrder& order);

struct DistributivityResult {
    enum class Status { distributive, violation, budget_exceeded };
    Status status = Status::distributive;
    size_t lattice_size = 0;
    // violating triple, as indices into the closure list
    size_t x = 0, y = 0, z = 0;
};

DistributivityResult distributivity_check(const Presentation& p, uint32_t n,
                                          size_t lattice_budget);

struct GlobalDimResult {
    bool exact = false;
    uint32_t value = 0;  // exact D, or the verified lower bound
};

/// gl.dim A = sup { i : W_{n(i)} != 0 }; exact once some W_m = 0 appears
/// while probing m <= probe_bound (monotone vanishing).
GlobalDimResult global_dimension(WChain& wch, uint32_t probe_bound);

/// dim Tor_i^A(k,k)_j from the normalized bar complex, streamed ranks.
struct BarTorTable {
    uint32_t i_max = 0, j_max = 0;
    // value[i][j] = dim, or -1 if skipped (slice beyond cap)
    std::vector<std::vector<int64_t>> value;
    int64_t at(uint32_t i, uint32_t j) const { return value[i][j]; }
};

BarTorTable bar_tor_dims(AlgebraView& view, uint32_t i_max, uint32_t j_max,
                         uint64_t slice_cap = 0);

/// d^N = 0 (and the contracted composites) on the one-sided Koszul
/// N-complex A (x) A^!* up to the given internal degree.
bool n_differential_check(AlgebraView& view, AlgebraView& dual, uint32_t up_to);

}  // namespace nha
