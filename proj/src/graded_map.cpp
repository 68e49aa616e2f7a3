#include "nha/graded_map.hpp"

#include <stdexcept>

namespace nha {

namespace {

// phi1^{(x)m}(word) as a vector over degree-m words
SparseVec tensor_image(Field f, const DenseMat& phi1, const WordSpace& ws, uint64_t word) {
    SparseVec cur{{0, Scalar::one(f)}};
    uint32_t d = ws.alphabet;
    for (uint32_t k = 0; k < ws.degree; ++k) {
        uint32_t g = ws.letter_at(word, k);
        SparseVec next;
        for (const auto& e : cur)
            for (uint32_t h = 0; h < d; ++h) {
                if (phi1[g][h].is_zero()) continue;
                next.push_back({e.col * d + h, e.c * phi1[g][h]});
            }
        std::sort(next.begin(), next.end(),
                  [](const Entry& x, const Entry& y) { return x.col < y.col; });
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

std::optional<GradedMap> GradedMap::extend_degree1(AlgebraView& view, DenseMat phi1) {
    Field f = view.field();
    uint32_t d = view.dim_v();
    if (phi1.rows() != d || phi1.cols() != d)
        throw std::invalid_argument("degree-1 matrix has wrong shape");
    // gate: phi1^{(x)N}(R) must stay inside R
    const Subspace& rel = view.pres().relations();
    WordSpace wsN = view.pres().word_space(view.N());
    for (const auto& row : rel.basis()) {
        SparseVec image;
        for (const auto& e : row) axpy(image, e.c, tensor_image(f, phi1, wsN, e.col));
        if (!rel.contains_vector(image)) return std::nullopt;
    }
    GradedMap g(view);
    g.phi1_ = std::move(phi1);
    return g;
}

GradedMap GradedMap::identity(AlgebraView& view) {
    GradedMap g(view);
    g.phi1_ = DenseMat::identity(view.dim_v(), view.field());
    return g;
}

GradedMap GradedMap::epsilon(AlgebraView& view) {
    GradedMap g(view);
    g.phi1_ = DenseMat::identity(view.dim_v(), view.field()).scaled(-Scalar::one(view.field()));
    return g;
}

GradedMap GradedMap::from_components(AlgebraView& view, std::vector<DenseMat> per_degree) {
    if (per_degree.size() < 2) throw std::invalid_argument("need components for degrees 0 and 1");
    GradedMap g(view);
    g.phi1_ = per_degree[1];
    g.components_ = std::move(per_degree);
    return g;
}

SparseVec GradedMap::apply_basis(uint32_t m, uint32_t idx) const {
    if (!components_.empty()) {
        if (m >= components_.size()) throw std::out_of_range("graded map component missing");
        const DenseMat& mat = components_[m];
        SparseVec out;
        for (uint32_t j = 0; j < mat.cols(); ++j)
            if (!mat[idx][j].is_zero()) out.push_back({j, mat[idx][j]});
        return out;
    }
    if (cache_.size() <= m) cache_.resize(m + 1);
    if (cache_[m].empty()) cache_[m].resize(view_->dim(m));
    if (!cache_[m][idx]) {
        WordSpace ws = view_->pres().word_space(m);
        SparseVec img = tensor_image(view_->field(), phi1_, ws, view_->basis_word(m, idx));
        cache_[m][idx] = view_->project(m, img);
    }
    return *cache_[m][idx];
}

SparseVec GradedMap::apply(uint32_t m, const SparseVec& v) const {
    SparseVec out;
    for (const auto& e : v)
        axpy(out, e.c, apply_basis(m, static_cast<uint32_t>(e.col)));
    return out;
}

DenseMat GradedMap::component_matrix(uint32_t m) const {
    uint64_t n = view_->dim(m);
    DenseMat mat(n, n, view_->field());
    for (uint32_t a = 0; a < n; ++a)
        for (const auto& e : apply_basis(m, a)) mat[a][static_cast<size_t>(e.col)] = e.c;
    return mat;
}

GradedMap GradedMap::compose(const GradedMap& inner) const {
    if (tensor_extended() && inner.tensor_extended()) {
        GradedMap g(*view_);
        // (this o inner)(x) = this(inner(x)); with row-major action the
        // degree-1 matrix is inner.phi1 * this.phi1
        g.phi1_ = inner.phi1_.mul(phi1_);
        return g;
    }
    throw std::logic_error("compose supported for tensor-extended maps only");
}

GradedMap GradedMap::power(uint32_t k) const {
    GradedMap g = identity(*view_);
    for (uint32_t i = 0; i < k; ++i) g = g.compose(*this);
    return g;
}

bool GradedMap::is_identity(uint32_t up_to) const {
    if (tensor_extended()) return phi1_.is_identity();
    for (uint32_t m = 0; m <= up_to; ++m)
        if (!component_matrix(m).is_identity()) return false;
    return true;
}

bool GradedMap::equals(const GradedMap& o, uint32_t up_to) const {
    for (uint32_t m = 0; m <= up_to; ++m)
        if (!(component_matrix(m) == o.component_matrix(m))) return false;
    return true;
}

bool GradedMap::multiplicative(uint32_t up_to) const {
    Field f = view_->field();
    for (uint32_t m = 1; m < up_to; ++m) {
        for (uint32_t g = 0; g < view_->dim_v(); ++g) {
            SparseVec xg = apply_basis(1, g);
            for (uint32_t b = 0; b < view_->dim(m); ++b) {
                SparseVec lhs = apply(m + 1, view_->mul(1, unit_vec(f, g), m, unit_vec(f, b)));
                SparseVec rhs = view_->mul(1, xg, m, apply_basis(m, b));
                if (!sparse_equal(lhs, rhs)) return false;
            }
        }
    }
    return true;
}

}  // namespace nha
