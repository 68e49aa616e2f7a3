#include "nha/yoneda.hpp"

namespace nha {

SparseVec YonedaAlgebra::product(uint32_t i, const SparseVec& f, uint32_t j, const SparseVec& g) {
    uint32_t n = N();
    if (n > 2 && i % 2 == 1 && j % 2 == 1) return {};
    SparseVec prod = dual_->mul(jump(i, n), f, jump(j, n), g);
    if ((static_cast<uint64_t>(i) * j) % 2 == 1)
        scale_in_place(prod, -Scalar::one(dual_->field()));
    return prod;
}

DenseMat YonedaAlgebra::koszul_quillen_pairing(WChain& wch, uint32_t m) {
    const Subspace& w = wch.W(m);
    const auto& words = dual_->basis_words(m);
    Field f = dual_->field();
    DenseMat p(words.size(), w.dim(), f);
    for (size_t h = 0; h < words.size(); ++h)
        for (size_t k = 0; k < w.basis().size(); ++k)
            p[h][k] = coeff_at(w.basis()[k], words[h], f);
    return p;
}

}  // namespace nha
