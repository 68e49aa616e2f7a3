#pragma once

#include <memory>
#include <optional>

#include "nha/algebra_view.hpp"
#include "nha/densemat.hpp"

namespace nha {

/// A degree-0 graded linear endomap of A.  Most maps here are Tens(phi1) for
/// a degree-1 component preserving R (then multiplicativity is automatic);
/// explicit per-degree matrices are also supported and can be verified
/// multiplicative.
class GradedMap {
public:
    /// Extends phi1 whenever phi1^{(x)N}(R) <= R; nullopt otherwise.
    static std::optional<GradedMap> extend_degree1(AlgebraView& view, DenseMat phi1);
    static GradedMap identity(AlgebraView& view);
    /// epsilon: multiplication by (-1)^m on A_m (equals Tens(-id)).
    static GradedMap epsilon(AlgebraView& view);
    static GradedMap from_components(AlgebraView& view, std::vector<DenseMat> per_degree);

    bool tensor_extended() const { return components_.empty(); }
    const DenseMat& degree1() const { return phi1_; }

    SparseVec apply_basis(uint32_t m, uint32_t idx) const;
    SparseVec apply(uint32_t m, const SparseVec& v) const;
    DenseMat component_matrix(uint32_t m) const;

    /// this after inner (for tensor-extended maps, composes the degree-1 parts).
    GradedMap compose(const GradedMap& inner) const;
    GradedMap power(uint32_t k) const;

    bool is_identity(uint32_t up_to) const;
    bool equals(const GradedMap& o, uint32_t up_to) const;

    /// phi(a.b) = phi(a).phi(b) on basis pairs A_1 x A_m, m < up_to.
    bool multiplicative(uint32_t up_to) const;

    AlgebraView& view() const { return *view_; }

private:
    explicit GradedMap(AlgebraView& view) : view_(&view) {}

    AlgebraView* view_;
    DenseMat phi1_;                          // tensor-extended representation
    std::vector<DenseMat> components_;       // explicit per-degree matrices (if nonempty)
    mutable std::vector<std::vector<std::optional<SparseVec>>> cache_;
};

}  // namespace nha
