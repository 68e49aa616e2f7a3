#include "nha/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace nha {

// ---------------------------------------------------------------------------
// SparseVec operations
// ---------------------------------------------------------------------------

void axpy(SparseVec& dst, const Scalar& a, const SparseVec& src) {
    if (a.is_zero() || src.empty()) return;
    SparseVec out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() && j < src.size()) {
        if (dst[i].col < src[j].col) {
            out.push_back(std::move(dst[i++]));
        } else if (dst[i].col > src[j].col) {
            out.push_back({src[j].col, a * src[j].c});
            ++j;
        } else {
            Scalar c = dst[i].c + a * src[j].c;
            if (!c.is_zero()) out.push_back({dst[i].col, std::move(c)});
            ++i;
            ++j;
        }
    }
    while (i < dst.size()) out.push_back(std::move(dst[i++]));
    for (; j < src.size(); ++j) out.push_back({src[j].col, a * src[j].c});
    dst = std::move(out);
}

SparseVec scaled(const SparseVec& v, const Scalar& a) {
    SparseVec out;
    if (a.is_zero()) return out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back({e.col, a * e.c});
    return out;
}

void scale_in_place(SparseVec& v, const Scalar& a) {
    if (a.is_zero()) {
        v.clear();
        return;
    }
    if (a.is_one()) return;
    for (auto& e : v) e.c *= a;
}

Scalar coeff_at(const SparseVec& v, uint64_t col, Field f) {
    auto it = std::lower_bound(v.begin(), v.end(), col,
                               [](const Entry& e, uint64_t c) { return e.col < c; });
    if (it != v.end() && it->col == col) return it->c;
    return Scalar::zero(f);
}

bool sparse_equal(const SparseVec& a, const SparseVec& b) {
    if (a.size() != b.size()) return false;
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k].col != b[k].col || a[k].c != b[k].c) return false;
    return true;
}

int sparse_cmp(const SparseVec& a, const SparseVec& b) {
    size_t n = std::min(a.size(), b.size());
    for (size_t k = 0; k < n; ++k) {
        if (a[k].col != b[k].col) return a[k].col < b[k].col ? -1 : 1;
        if (int c = a[k].c.cmp(b[k].c)) return c;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

SparseVec shifted(const SparseVec& v, uint64_t stride, uint64_t offset) {
    SparseVec out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back({e.col * stride + offset, e.c});
    return out;
}

// ---------------------------------------------------------------------------
// Rref
// ---------------------------------------------------------------------------

// Eliminates the pivot hit at scan position `hint` (entries before it in scan
// order are pivot-free).  Returns the next scan position.
size_t Rref::eliminate_once(SparseVec& v, size_t hint, std::vector<Scalar>* coeffs) const {
    // scan positions are indices into v in ascending-column order for
    // pivot_low, descending for pivot_high (hint counts processed entries
    // from the scan end).
    while (hint < v.size()) {
        size_t idx = pivot_low_ ? hint : v.size() - 1 - hint;
        auto it = pivot_of_col_.find(v[idx].col);
        if (it == pivot_of_col_.end()) {
            ++hint;
            continue;
        }
        const SparseVec& row = rows_[it->second];
        Scalar c = v[idx].c;  // row pivot coefficient is 1
        if (coeffs) (*coeffs)[it->second] += c;
        axpy(v, -c, row);
        // elimination at col c only introduces columns strictly beyond it in
        // scan order, so `hint` entries remain pivot-free
    }
    return hint;
}

SparseVec Rref::reduce(SparseVec v) const {
    eliminate_once(v, 0, nullptr);
    return v;
}

SparseVec Rref::reduce_tracked(SparseVec v, std::vector<Scalar>& coeffs) const {
    coeffs.assign(rows_.size(), Scalar::zero(field_));
    eliminate_once(v, 0, &coeffs);
    return v;
}

bool Rref::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const Entry& p = pivot_low_ ? v.front() : v.back();
    uint64_t pcol = p.col;
    Scalar inv = p.c.inverse();
    scale_in_place(v, inv);
    pivot_of_col_[pcol] = rows_.size();
    rows_.push_back(std::move(v));
    return true;
}

std::optional<std::vector<Scalar>> Rref::solve(const SparseVec& v) const {
    std::vector<Scalar> coeffs;
    SparseVec r = reduce_tracked(v, coeffs);
    if (!r.empty()) return std::nullopt;
    for (auto& c : coeffs) c = -c;
    return coeffs;
}

void Rref::finalize() {
    std::vector<size_t> order(rows_.size());
    for (size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return pivot(a) < pivot(b); });
    std::vector<SparseVec> sorted;
    sorted.reserve(rows_.size());
    for (size_t k : order) sorted.push_back(std::move(rows_[k]));
    rows_ = std::move(sorted);
    pivot_of_col_.clear();
    for (size_t k = 0; k < rows_.size(); ++k) pivot_of_col_[pivot(k)] = k;
    if (rows_.empty()) return;
    // Back-substitution: clear other rows' pivots from each row's tail.
    // Processing against the full set is safe: a row never contains its own
    // pivot in the tail positions being eliminated.
    for (size_t k = rows_.size(); k-- > 0;) {
        SparseVec row = std::move(rows_[k]);
        size_t start = 1;  // skip own pivot (scan-order first entry)
        while (start < row.size()) {
            size_t idx = pivot_low_ ? start : row.size() - 1 - start;
            auto it = pivot_of_col_.find(row[idx].col);
            if (it == pivot_of_col_.end() || it->second == k) {
                ++start;
                continue;
            }
            Scalar c = row[idx].c;
            axpy(row, -c, rows_[it->second]);
        }
        rows_[k] = std::move(row);
    }
}

// ---------------------------------------------------------------------------
// Subspace
// ---------------------------------------------------------------------------

void Subspace::check_ambient(const Subspace& o) const {
    if (!(ambient_ == o.ambient_))
        throw std::invalid_argument("subspace ambient word spaces differ");
    if (!(field() == o.field())) throw std::invalid_argument("subspace fields differ");
}

Subspace Subspace::full(WordSpace ambient, Field f) {
    Subspace s(ambient, f);
    for (uint64_t c = 0; c < ambient.dim(); ++c) s.rref_.insert(unit_vec(f, c));
    s.rref_.finalize();
    return s;
}

Subspace Subspace::span(WordSpace ambient, Field f, std::vector<SparseVec> vectors) {
    Subspace s(ambient, f);
    for (auto& v : vectors) s.rref_.insert(std::move(v));
    s.rref_.finalize();
    return s;
}

bool Subspace::equals(const Subspace& o) const {
    check_ambient(o);
    if (dim() != o.dim()) return false;
    for (size_t k = 0; k < basis().size(); ++k)
        if (!sparse_equal(basis()[k], o.basis()[k])) return false;
    return true;
}

bool Subspace::contains(const Subspace& o) const {
    check_ambient(o);
    if (o.dim() > dim()) return false;
    for (const auto& row : o.basis())
        if (!rref_.reduce(row).empty()) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& o) const {
    check_ambient(o);
    const Subspace& big = dim() >= o.dim() ? *this : o;
    const Subspace& small = dim() >= o.dim() ? o : *this;
    Subspace out(ambient_, field());
    out.rref_ = big.rref_;
    for (const auto& row : small.basis()) out.rref_.insert(row);
    out.rref_.finalize();
    return out;
}

Subspace Subspace::intersect(const Subspace& o) const {
    check_ambient(o);
    // Zassenhaus on U's rows pre-reduced mod Z: marker columns record the
    // combination; rows whose residual part dies give intersection elements.
    const Subspace& u = dim() <= o.dim() ? *this : o;
    const Subspace& z = dim() <= o.dim() ? o : *this;
    uint64_t offset = ambient_.dim();
    Field f = field();
    Rref work(f, true);
    for (size_t s = 0; s < u.basis().size(); ++s) {
        SparseVec row = z.reduce(u.basis()[s]);
        row.push_back({offset + s, Scalar::one(f)});
        work.insert(std::move(row));
    }
    std::vector<SparseVec> found;
    for (size_t k = 0; k < work.rows().size(); ++k) {
        if (work.pivot(k) < offset) continue;
        SparseVec combo;
        for (const auto& e : work.rows()[k]) {
            size_t s = static_cast<size_t>(e.col - offset);
            axpy(combo, e.c, u.basis()[s]);
        }
        if (!combo.empty()) found.push_back(std::move(combo));
    }
    return span(ambient_, f, std::move(found));
}

Subspace Subspace::annihilator() const {
    Field f = field();
    uint64_t n = ambient_.dim();
    // Null space of the basis matrix, read off the fully reduced rows.
    std::vector<bool> is_pivot(n, false);
    for (size_t k = 0; k < basis().size(); ++k) is_pivot[basis()[k].front().col] = true;
    std::vector<SparseVec> vectors;
    vectors.reserve(n - dim());
    for (uint64_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        SparseVec v;
        for (const auto& row : basis()) {
            Scalar a = coeff_at(row, c, f);
            if (!a.is_zero()) v.push_back({row.front().col, -a});
        }
        v.push_back({c, Scalar::one(f)});
        std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
        vectors.push_back(std::move(v));
    }
    return span(ambient_, f, std::move(vectors));
}

Subspace Subspace::embed_block(uint32_t i, uint32_t j) const {
    WordSpace target(ambient_.alphabet, i + ambient_.degree + j);
    uint64_t left = pow_u64(ambient_.alphabet, i);
    uint64_t right = pow_u64(ambient_.alphabet, j);
    Subspace out(target, field());
    // Embedded rows of the canonical basis are already a reduced echelon
    // family; emit them in ascending pivot order (prefix, pivot, suffix).
    for (uint64_t w1 = 0; w1 < left; ++w1) {
        for (const auto& row : basis()) {
            for (uint64_t w2 = 0; w2 < right; ++w2) {
                SparseVec r;
                r.reserve(row.size());
                for (const auto& e : row) r.push_back({(w1 * ambient_.dim() + e.col) * right + w2, e.c});
                out.rref_.insert(std::move(r));
            }
        }
    }
    out.rref_.finalize();
    return out;
}

int Subspace::cmp(const Subspace& o) const {
    if (dim() != o.dim()) return dim() < o.dim() ? -1 : 1;
    for (size_t k = 0; k < basis().size(); ++k)
        if (int c = sparse_cmp(basis()[k], o.basis()[k])) return c;
    return 0;
}

}  // namespace nha
