#pragma once

#include <map>
#include <string>

#include "nha/graded_map.hpp"
#include "nha/yoneda.hpp"

namespace nha {

struct GorensteinCertificate {
    enum class Status { gorenstein, not_gorenstein, inconclusive };
    Status status = Status::inconclusive;
    std::string reason;  // set when not gorenstein / inconclusive

    uint32_t D = 0;       // global dimension (exact when status != inconclusive)
    uint32_t n_D = 0;     // jump(D)
    uint64_t top_dim = 0; // dim A^!_{n(D)}

    // data below valid when status == gorenstein
    uint64_t u_word = 0;             // monomial word of the generator u
    std::vector<DenseMat> phi_bar;   // phi_bar[i] = matrix of Phi-bar_{n(i)}:
                                     // entry [h][f] = u-coefficient of h.f,
                                     // h over A^!_{n(i)}, f over A^!_{n(D-i)}
    SparseVec w;                     // the dual element in V^{(x)n(D)} coords

    bool verdict() const { return status == Status::gorenstein; }
};

/// Theorem-5.4 test: pick u spanning A^!_{n(D)}, check every
/// Phi-bar_{n(i)} : A^!_{n(D-i)} -> A^!*_{n(i)}, f -> f.u*, is bijective.
GorensteinCertificate gorenstein_verdict(AlgebraView& primal, AlgebraView& dual, WChain& wch,
                                         uint32_t gldim_probe_bound);

/// dim Ext_A^i(k,A)_j as cohomology of the contraction L'_r(A);
/// components A^!_{n(i)} (x) A, with A^!_m placed in degree -m.
/// Table rows are i = 0..i_max, columns internal degree j with an offset.
struct ExtKATable {
    uint32_t i_max = 0;
    int64_t j_lo = 0, j_hi = 0;
    std::vector<std::vector<int64_t>> h;  // h[i][j - j_lo]
    int64_t at(uint32_t i, int64_t j) const { return h[i][static_cast<size_t>(j - j_lo)]; }
};

ExtKATable ext_kA_dims(AlgebraView& primal, AlgebraView& dual, uint32_t i_max,
                       uint32_t a_degree_budget);

struct FrobeniusData {
    std::vector<DenseMat> pairing;  // pairing[i] : E_i x E_{D-i} -> k
    std::vector<DenseMat> nu;       // nu[i] row-action matrix on E_i
    DenseMat nu1;                   // = nu[1]
    DenseMat phi1;                  // transpose of nu1
    enum class Symmetry { symmetric, graded_symmetric, neither } symmetry;
};

FrobeniusData frobenius_data(const GorensteinCertificate& cert, YonedaAlgebra& ya, WChain& wch);

/// Frobenius pairing of two component vectors (zero unless i + j = D).
Scalar frobenius_pairing(const GorensteinCertificate& cert, YonedaAlgebra& ya, uint32_t i,
                         const SparseVec& x, uint32_t j, const SparseVec& y);

/// phi on A: Tens(nu1^t); the extension gate is Lemma 6.1 dualized.
GradedMap phi_automorphism(const GorensteinCertificate& cert, const FrobeniusData& fd,
                           AlgebraView& primal);

struct TwistVerdict {
    bool trivial = false;  // nu1 == (-1)^{D+1} id
    DenseMat composite1;   // degree-1 matrix of epsilon^{D+1} phi
};

TwistVerdict twist_verdict(const GorensteinCertificate& cert, const FrobeniusData& fd,
                           AlgebraView& primal);

/// E(A) -> E(A)*(-D), phi_i = (-1)^{i(D-i)} Phi-bar_{n(D-i)}, must be a map
/// of left E(A)-modules (the Corollary-5.12 bridge).
bool frobenius_ea_check(const GorensteinCertificate& cert, YonedaAlgebra& ya);

struct QMatrixResult {
    bool ok = false;
    std::string error;
    DenseMat q;
    bool nu1_matches = false;   // nu1 = Q^{-1}
    bool nu2_matches = false;   // nu2 on the w-adapted dual basis = Q^t
    bool phi1_matches = false;  // phi1 = (Q^{-1})^t
    bool type_a = false;        // E(A) symmetric
    bool q_identity = false;
};

/// Cubic (N=3, dim V=2, D=3) Artin-Schelter Q-matrix from the two
/// decompositions w = x f1 + y f2 = g1 x + g2 y.
QMatrixResult q_matrix_cubic(const GorensteinCertificate& cert, const FrobeniusData& fd,
                             YonedaAlgebra& ya, AlgebraView& primal, WChain& wch);

}  // namespace nha
