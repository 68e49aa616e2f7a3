#pragma once

#include <stdexcept>
#include <vector>

#include "nha/scalar.hpp"

namespace nha {

/// Small dense matrix; mat[i][j] with row-major action x_i -> sum_j mat[i][j] y_j.
struct DenseMat {
    std::vector<std::vector<Scalar>> m;

    DenseMat() = default;
    DenseMat(size_t rows, size_t cols, Field f)
        : m(rows, std::vector<Scalar>(cols, Scalar::zero(f))) {}

    size_t rows() const { return m.size(); }
    size_t cols() const { return m.empty() ? 0 : m[0].size(); }
    std::vector<Scalar>& operator[](size_t i) { return m[i]; }
    const std::vector<Scalar>& operator[](size_t i) const { return m[i]; }

    static DenseMat identity(size_t n, Field f) {
        DenseMat d(n, n, f);
        for (size_t i = 0; i < n; ++i) d[i][i] = Scalar::one(f);
        return d;
    }

    bool is_identity() const {
        if (rows() != cols()) return false;
        for (size_t i = 0; i < rows(); ++i)
            for (size_t j = 0; j < cols(); ++j) {
                if (i == j && !m[i][j].is_one()) return false;
                if (i != j && !m[i][j].is_zero()) return false;
            }
        return true;
    }

    bool operator==(const DenseMat& o) const { return m == o.m; }

    DenseMat transpose() const {
        Field f = rows() && cols() ? m[0][0].field() : Field{};
        DenseMat t(cols(), rows(), f);
        for (size_t i = 0; i < rows(); ++i)
            for (size_t j = 0; j < cols(); ++j) t[j][i] = m[i][j];
        return t;
    }

    DenseMat mul(const DenseMat& o) const {
        if (cols() != o.rows()) throw std::invalid_argument("dense matrix shape mismatch");
        Field f = m[0][0].field();
        DenseMat r(rows(), o.cols(), f);
        for (size_t i = 0; i < rows(); ++i)
            for (size_t k = 0; k < cols(); ++k) {
                if (m[i][k].is_zero()) continue;
                for (size_t j = 0; j < o.cols(); ++j) r[i][j] += m[i][k] * o[k][j];
            }
        return r;
    }

    DenseMat scaled(const Scalar& s) const {
        DenseMat r = *this;
        for (auto& row : r.m)
            for (auto& e : row) e *= s;
        return r;
    }

    /// Gauss-Jordan inverse; throws if singular.
    DenseMat inverse() const {
        if (rows() != cols()) throw std::invalid_argument("inverse of non-square matrix");
        size_t n = rows();
        Field f = n ? m[0][0].field() : Field{};
        DenseMat a = *this, inv = identity(n, f);
        for (size_t col = 0; col < n; ++col) {
            size_t piv = col;
            while (piv < n && a[piv][col].is_zero()) ++piv;
            if (piv == n) throw std::domain_error("singular matrix");
            std::swap(a.m[piv], a.m[col]);
            std::swap(inv.m[piv], inv.m[col]);
            Scalar d = a[col][col].inverse();
            for (size_t j = 0; j < n; ++j) {
                a[col][j] *= d;
                inv[col][j] *= d;
            }
            for (size_t i = 0; i < n; ++i) {
                if (i == col || a[i][col].is_zero()) continue;
                Scalar c = a[i][col];
                for (size_t j = 0; j < n; ++j) {
                    a[i][j] -= c * a[col][j];
                    inv[i][j] -= c * inv[col][j];
                }
            }
        }
        return inv;
    }

    bool invertible() const {
        if (rows() != cols()) return false;
        try {
            (void)inverse();
            return true;
        } catch (const std::domain_error&) {
            return false;
        }
    }
};

}  // namespace nha
