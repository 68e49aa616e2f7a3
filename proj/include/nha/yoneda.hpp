#pragma once

#include "nha/algebra_view.hpp"
#include "nha/densemat.hpp"
#include "nha/koszul.hpp"

namespace nha {

/// The Yoneda algebra E(A): components E(A)_i = A^!_{n(i)} with the
/// sign-twisted product f . g = (-1)^{ij} fg, zero when N > 2 with i and j
/// both odd.
class YonedaAlgebra {
public:
    YonedaAlgebra(AlgebraView& primal, AlgebraView& dual)
        : primal_(&primal), dual_(&dual) {}

    AlgebraView& dual_view() const { return *dual_; }
    uint32_t N() const { return primal_->N(); }

    uint64_t component_dim(uint32_t i) { return dual_->dim(jump(i, N())); }
    const std::vector<uint64_t>& component_basis(uint32_t i) {
        return dual_->basis_words(jump(i, N()));
    }

    /// Yoneda product of coordinate vectors over the A^! monomial bases.
    SparseVec product(uint32_t i, const SparseVec& f, uint32_t j, const SparseVec& g);

    /// The identification A^!_m ~ W_m^*: entry [h][k] = value of the h-th
    /// basis functional on the k-th basis vector of W_m.  Invertible for all
    /// m with A^!_m != 0 when A is Koszul.
    DenseMat koszul_quillen_pairing(WChain& wch, uint32_t m);

private:
    AlgebraView* primal_;
    AlgebraView* dual_;
};

}  // namespace nha
