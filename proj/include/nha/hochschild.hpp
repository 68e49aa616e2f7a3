#pragma once

#include "nha/gorenstein.hpp"

namespace nha {

/// Exactness of K'_{l-r}(A) -> A -> 0, slice by internal degree (Theorem 4.4).
struct BimoduleExactness {
    bool exact = true;
    uint32_t bound = 0;
    uint32_t fail_i = 0;   // homological index of the first nonzero homology
    uint32_t fail_j = 0;   // internal degree
    uint64_t fail_dim = 0;
};

BimoduleExactness bimodule_exactness(AlgebraView& view, WChain& wch, uint32_t j_budget);

/// Largest i with A^!_{n(i)} != 0 (length of the bimodule Koszul resolution,
/// computed from the dual quotient dims, not from the W chain).
GlobalDimResult hochschild_dimension(AlgebraView& dual, uint32_t probe_bound);

/// Dimension tables indexed by (homological index, internal degree).
struct HHTable {
    uint32_t i_max = 0;
    int64_t j_lo = 0, j_hi = 0;
    std::vector<std::vector<int64_t>> v;  // v[i][j - j_lo]; -1 = not computed
    int64_t at(uint32_t i, int64_t j) const {
        if (j < j_lo || j > j_hi) return 0;
        return v[i][static_cast<size_t>(j - j_lo)];
    }
};

/// HH^i(A, M)_j for M = A twisted by sigma (left) and tau (right); cochain
/// components A^!_{n(i)} (x) M with A^!_m in degree -m.
HHTable hh_cohomology_dims(AlgebraView& primal, AlgebraView& dual, const DenseMat& sigma1,
                           const DenseMat& tau1, uint32_t i_max, int64_t j_hi,
                           uint64_t slice_cap = 0);

/// HH_i(A, M)_j, chain components M (x) W_{n(i)} with W_n in degree +n.
HHTable hh_homology_dims(AlgebraView& primal, WChain& wch, const DenseMat& sigma1,
                         const DenseMat& tau1, uint32_t i_max, int64_t j_hi,
                         uint64_t slice_cap = 0);

/// Truncated normalized Hochschild bar complex of M = sigma-A-tau
/// (independent oracle for small fixtures).
HHTable hh_homology_bar(AlgebraView& primal, const DenseMat& sigma1, const DenseMat& tau1,
                        uint32_t i_max, int64_t j_hi);

struct Lemma62Result {
    bool passes = true;
    uint32_t fail_degree = 0;  // total A-degree p+q of the failing source cell
    std::vector<int64_t> coker_dims;      // cokernel at the top slot, degree j
    std::vector<int64_t> expected_dims;   // dim A_{j - n(D)}
    int64_t coker_j_lo = 0;
    bool coker_matches = true;
};

/// mu_u^phi o (del_r + (-1)^D del_l) = 0 into the top slot of (the contraction
/// of) L_{r-l}(A), with the twist epsilon^{D+1} phi; also the cokernel table.
/// `twist1` is the degree-1 matrix of the map applied to the left factor.
Lemma62Result lemma62_check(AlgebraView& primal, AlgebraView& dual,
                            const GorensteinCertificate& cert, const DenseMat& twist1,
                            uint32_t degree_budget);

struct DualityReport {
    bool computed = false;
    bool all_match = true;
    int shift_direction = +1;  // chain degree = cochain degree + shift*n(D)
    HHTable cohomology;        // HH^i(A, A)
    HHTable homology;          // HH_{D-i}(A, twisted A)
    struct Cell {
        uint32_t i;
        int64_t j;
        int64_t lhs, rhs;
    };
    std::vector<Cell> mismatches;
};

/// Theorem 6.3 at desk scale: dimension tables of HH^i(A,A) against
/// HH_{D-i}(A, eps^{D+1} phi-twisted A) under a once-calibrated degree shift.
DualityReport duality_check(AlgebraView& primal, AlgebraView& dual, WChain& wch,
                            const GorensteinCertificate& cert, const DenseMat& twist1,
                            int64_t j_hi, int shift_direction, uint64_t slice_cap = 0);

/// Calibrates the duality shift sign on k[x,y]; returns +1 or -1.
int calibrate_duality_shift();

}  // namespace nha
