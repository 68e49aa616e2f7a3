#include "nha/gorenstein.hpp"

#include <stdexcept>

namespace nha {

GorensteinCertificate gorenstein_verdict(AlgebraView& primal, AlgebraView& dual, WChain& wch,
                                         uint32_t gldim_probe_bound) {
    GorensteinCertificate cert;
    uint32_t N = primal.N();
    auto gd = global_dimension(wch, gldim_probe_bound);
    if (!gd.exact) {
        cert.status = GorensteinCertificate::Status::inconclusive;
        cert.reason = "global dimension not resolved within probe bound";
        cert.D = gd.value;
        return cert;
    }
    cert.D = gd.value;
    cert.n_D = jump(cert.D, N);
    cert.top_dim = dual.dim(cert.n_D);
    if (N > 2 && cert.D % 2 == 0) {
        cert.status = GorensteinCertificate::Status::not_gorenstein;
        cert.reason = "N > 2 with even global dimension";
        return cert;
    }
    if (cert.top_dim != 1) {
        cert.status = GorensteinCertificate::Status::not_gorenstein;
        cert.reason = "dim A^!_{n(D)} = " + std::to_string(cert.top_dim) + ", not 1";
        return cert;
    }
    cert.u_word = dual.basis_word(cert.n_D, 0);
    Field f = primal.field();

    // Phi-bar_{n(i)}: A^!_{n(D-i)} -> A^!*_{n(i)}, entry [h][g] = u-coeff of h.g
    bool all_bijective = true;
    uint32_t bad_i = 0;
    for (uint32_t i = 0; i <= cert.D; ++i) {
        uint32_t m_lo = jump(i, N), m_hi = jump(cert.D - i, N);
        uint64_t rows = dual.dim(m_lo), cols = dual.dim(m_hi);
        DenseMat mat(rows, cols, f);
        for (uint32_t h = 0; h < rows; ++h)
            for (uint32_t g = 0; g < cols; ++g) {
                SparseVec prod = dual.mul_basis(m_lo, h, m_hi, g);
                mat[h][g] = coeff_at(prod, 0, f);  // A^!_{n(D)} is one-dimensional
            }
        if (rows != cols || !mat.invertible()) {
            all_bijective = false;
            bad_i = i;
        }
        cert.phi_bar.push_back(std::move(mat));
    }
    if (!all_bijective) {
        cert.status = GorensteinCertificate::Status::not_gorenstein;
        cert.reason = "Phi-bar not bijective at i = " + std::to_string(bad_i);
        return cert;
    }
    cert.status = GorensteinCertificate::Status::gorenstein;

    // consistency (Remark 5.5): Phi-bar_0, Phi-bar_{n(D)} bijective and
    // Phi-bar_1 surjective; rows of Phi-bar[1] must be independent
    if (cert.D >= 1) {
        RankAcc acc(f);
        const DenseMat& p1 = cert.phi_bar[1];
        for (size_t r = 0; r < p1.rows(); ++r) {
            SparseVec row;
            for (size_t c = 0; c < p1.cols(); ++c)
                if (!p1[r][c].is_zero()) row.push_back({c, p1[r][c]});
            acc.add(std::move(row));
        }
        if (acc.rank() != p1.rows())
            throw std::logic_error("internal consistency: Phi-bar_1 not surjective");
    }

    // w: the unique element of W_{n(D)} sending the representative of u to 1
    const Subspace& top = wch.W(cert.n_D);
    if (top.dim() != 1) throw std::logic_error("internal consistency: dim W_{n(D)} != 1");
    SparseVec w = top.basis()[0];
    Scalar pivot = coeff_at(w, cert.u_word, f);
    if (pivot.is_zero())
        throw std::logic_error("internal consistency: <u, w> = 0 on the top component");
    scale_in_place(w, pivot.inverse());
    cert.w = std::move(w);
    return cert;
}

ExtKATable ext_kA_dims(AlgebraView& primal, AlgebraView& dual, uint32_t i_max,
                       uint32_t a_degree_budget) {
    Field f = primal.field();
    uint32_t N = primal.N();
    uint32_t d = primal.dim_v();
    // one xi_r step: A^!_m (x) A_t -> A^!_{m+1} (x) A_{t+1}
    auto step = [&](uint32_t m, uint32_t t, const SparseVec& v) {
        SparseVec out;
        uint64_t lo = primal.dim(t);
        uint64_t lo_next = primal.dim(t + 1);
        for (const auto& e : v) {
            uint32_t fi = static_cast<uint32_t>(e.col / lo);
            uint32_t ai = static_cast<uint32_t>(e.col % lo);
            for (uint32_t s = 0; s < d; ++s) {
                SparseVec sf = dual.lmul_gen(s, m, fi);
                if (sf.empty()) continue;
                SparseVec sa = primal.lmul_gen(s, t, ai);
                if (sa.empty()) continue;
                for (const auto& ef : sf)
                    for (const auto& ea : sa) {
                        SparseVec term{{ef.col * lo_next + ea.col, e.c * ef.c * ea.c}};
                        axpy(out, Scalar::one(f), term);
                    }
            }
        }
        return out;
    };

    ExtKATable table;
    table.i_max = i_max;
    table.j_lo = -static_cast<int64_t>(jump(i_max, N));
    table.j_hi = static_cast<int64_t>(a_degree_budget);
    table.h.assign(i_max + 1,
                   std::vector<int64_t>(static_cast<size_t>(table.j_hi - table.j_lo + 1), 0));

    // rank of the arrow out of cohomological index i in internal degree j
    std::map<std::pair<uint32_t, int64_t>, uint64_t> rank_cache;
    auto rank_out = [&](uint32_t i, int64_t j) -> uint64_t {
        uint32_t m = jump(i, N);
        int64_t t = j + static_cast<int64_t>(m);
        if (t < 0) return 0;
        uint32_t steps = jump(i + 1, N) - m;
        auto key = std::make_pair(i, j);
        auto it = rank_cache.find(key);
        if (it != rank_cache.end()) return it->second;
        uint64_t total = dual.dim(m) * primal.dim(static_cast<uint32_t>(t));
        RankAcc acc(f);
        for (uint64_t r = 0; r < total; ++r) {
            SparseVec v{{r, Scalar::one(f)}};
            uint32_t mm = m;
            uint32_t tt = static_cast<uint32_t>(t);
            for (uint32_t s = 0; s < steps && !v.empty(); ++s) {
                v = step(mm, tt, v);
                ++mm;
                ++tt;
            }
            acc.add(std::move(v));
        }
        uint64_t rank = acc.rank();
        rank_cache.emplace(key, rank);
        return rank;
    };

    for (uint32_t i = 0; i <= i_max; ++i) {
        uint32_t m = jump(i, N);
        for (int64_t j = table.j_lo; j <= table.j_hi; ++j) {
            int64_t t = j + static_cast<int64_t>(m);
            if (t < 0) continue;
            // keep the incoming and outgoing A-degrees inside the budget
            int64_t t_next = j + static_cast<int64_t>(jump(i + 1, N));
            if (t_next > static_cast<int64_t>(a_degree_budget)) continue;
            uint64_t dim_ij = dual.dim(m) * primal.dim(static_cast<uint32_t>(t));
            uint64_t r_out = rank_out(i, j);
            uint64_t r_in = i > 0 ? rank_out(i - 1, j) : 0;
            table.h[i][static_cast<size_t>(j - table.j_lo)] =
                static_cast<int64_t>(dim_ij) - r_out - r_in;
        }
    }
    return table;
}

Scalar frobenius_pairing(const GorensteinCertificate& cert, YonedaAlgebra& ya, uint32_t i,
                         const SparseVec& x, uint32_t j, const SparseVec& y) {
    Field f = cert.w.empty() ? Field::rationals() : cert.w.front().c.field();
    if (i + j != cert.D) return Scalar::zero(f);
    uint32_t N = ya.N();
    const auto& wi = ya.component_basis(i);
    const auto& wj = ya.component_basis(j);
    uint64_t tail = pow_u64(ya.dual_view().dim_v(), jump(j, N));
    Scalar acc = Scalar::zero(f);
    for (const auto& ex : x)
        for (const auto& ey : y) {
            uint64_t word = wi[static_cast<size_t>(ex.col)] * tail + wj[static_cast<size_t>(ey.col)];
            acc += ex.c * ey.c * coeff_at(cert.w, word, f);
        }
    if ((static_cast<uint64_t>(i) * (cert.D - i)) % 2 == 1) acc = -acc;
    return acc;
}

FrobeniusData frobenius_data(const GorensteinCertificate& cert, YonedaAlgebra& ya, WChain& wch) {
    (void)wch;
    if (!cert.verdict()) throw std::invalid_argument("frobenius data needs a Gorenstein verdict");
    Field f = cert.w.front().c.field();
    FrobeniusData fd{.pairing = {}, .nu = {}, .nu1 = DenseMat(), .phi1 = DenseMat(),
                     .symmetry = FrobeniusData::Symmetry::neither};
    uint32_t D = cert.D;
    for (uint32_t i = 0; i <= D; ++i) {
        uint64_t rows = ya.component_dim(i), cols = ya.component_dim(D - i);
        DenseMat p(rows, cols, f);
        for (uint32_t a = 0; a < rows; ++a)
            for (uint32_t b = 0; b < cols; ++b)
                p[a][b] = frobenius_pairing(cert, ya, i, unit_vec(f, a), D - i, unit_vec(f, b));
        fd.pairing.push_back(std::move(p));
    }
    // nu_i from (x,y) = (y, nu(x)):  P_i = N_i * P_{D-i}^t
    for (uint32_t i = 0; i <= D; ++i)
        fd.nu.push_back(fd.pairing[i].mul(fd.pairing[D - i].transpose().inverse()));
    fd.nu1 = fd.nu[1];
    fd.phi1 = fd.nu1.transpose();
    bool sym = true, gsym = true;
    for (uint32_t i = 0; i <= D; ++i) {
        DenseMat t = fd.pairing[D - i].transpose();
        if (!(fd.pairing[i] == t)) sym = false;
        Scalar s = ((static_cast<uint64_t>(i) * (D - i)) % 2 == 1) ? -Scalar::one(f)
                                                                   : Scalar::one(f);
        if (!(fd.pairing[i] == t.scaled(s))) gsym = false;
    }
    fd.symmetry = sym ? FrobeniusData::Symmetry::symmetric
                      : (gsym ? FrobeniusData::Symmetry::graded_symmetric
                              : FrobeniusData::Symmetry::neither);
    return fd;
}

GradedMap phi_automorphism(const GorensteinCertificate& cert, const FrobeniusData& fd,
                           AlgebraView& primal) {
    if (!cert.verdict()) throw std::invalid_argument("phi needs a Gorenstein verdict");
    auto phi = GradedMap::extend_degree1(primal, fd.phi1);
    if (!phi)
        throw std::logic_error("internal consistency: phi_1 does not preserve R (Lemma 6.1)");
    return *phi;
}

TwistVerdict twist_verdict(const GorensteinCertificate& cert, const FrobeniusData& fd,
                           AlgebraView& primal) {
    Field f = primal.field();
    TwistVerdict tv;
    Scalar want = (cert.D + 1) % 2 == 1 ? -Scalar::one(f) : Scalar::one(f);
    tv.trivial = fd.nu1 == DenseMat::identity(primal.dim_v(), f).scaled(want);
    Scalar sign = want;  // epsilon^{D+1} acts by (-1)^{D+1} on degree 1
    tv.composite1 = fd.phi1.scaled(sign);
    return tv;
}

bool frobenius_ea_check(const GorensteinCertificate& cert, YonedaAlgebra& ya) {
    if (!cert.verdict()) return false;
    Field f = cert.w.front().c.field();
    uint32_t D = cert.D;
    // phi_i = (-1)^{i(D-i)} Phi-bar_{n(D-i)} : E_i -> (E_{D-i})*
    auto apply_phi = [&](uint32_t i, const SparseVec& x) {
        const DenseMat& mat = cert.phi_bar[D - i];
        std::vector<Scalar> out(mat.rows(), Scalar::zero(f));
        for (const auto& e : x)
            for (size_t h = 0; h < mat.rows(); ++h)
                out[h] += e.c * mat[h][static_cast<size_t>(e.col)];
        if ((static_cast<uint64_t>(i) * (D - i)) % 2 == 1)
            for (auto& c : out) c = -c;
        return out;  // coords over the dual basis of E_{D-i}
    };
    for (uint32_t i = 0; i <= D; ++i) {
        for (uint32_t j = 0; i + j <= D; ++j) {
            for (uint32_t a = 0; a < ya.component_dim(i); ++a) {
                SparseVec fa = unit_vec(f, a);
                for (uint32_t b = 0; b < ya.component_dim(j); ++b) {
                    SparseVec gb = unit_vec(f, b);
                    // lhs: phi(f . g) evaluated against E_{D-i-j} basis
                    std::vector<Scalar> lhs = apply_phi(i + j, ya.product(i, fa, j, gb));
                    // rhs: (f . phi(g))(h) = phi(g)(h . f)
                    std::vector<Scalar> alpha = apply_phi(j, gb);
                    std::vector<Scalar> rhs(ya.component_dim(D - i - j), Scalar::zero(f));
                    for (uint32_t h = 0; h < rhs.size(); ++h) {
                        SparseVec hf = ya.product(D - i - j, unit_vec(f, h), i, fa);
                        for (const auto& e : hf) rhs[h] += e.c * alpha[static_cast<size_t>(e.col)];
                    }
                    if (lhs != rhs) return false;
                }
            }
        }
    }
    return true;
}

QMatrixResult q_matrix_cubic(const GorensteinCertificate& cert, const FrobeniusData& fd,
                             YonedaAlgebra& ya, AlgebraView& primal, WChain& wch) {
    QMatrixResult res;
    if (primal.N() != 3 || primal.dim_v() != 2) {
        res.error = "Q-matrix analysis needs a cubic algebra on two generators";
        return res;
    }
    if (!cert.verdict() || cert.D != 3) {
        res.error = "Q-matrix analysis needs a Gorenstein verdict with D = 3";
        return res;
    }
    Field f = primal.field();
    // first-letter slices: w = x (x) rho_0 + y (x) rho_1
    uint64_t tail3 = pow_u64(2, 3);
    std::vector<SparseVec> rho(2), gam(2);
    for (const auto& e : cert.w) {
        rho[static_cast<size_t>(e.col / tail3)].push_back({e.col % tail3, e.c});
        gam[static_cast<size_t>(e.col % 2)].push_back({e.col / 2, e.c});
    }
    for (auto* v : {&rho, &gam})
        for (auto& sv : *v)
            std::sort(sv.begin(), sv.end(),
                      [](const Entry& a, const Entry& b) { return a.col < b.col; });
    Subspace rbasis = Subspace::span(primal.pres().word_space(3), f, {rho[0], rho[1]});
    if (primal.pres().relations().dim() != 2 || rbasis.dim() != 2 ||
        !primal.pres().relations().contains(rbasis)) {
        res.error = "degenerate decomposition: slices of w do not give a basis of R";
        return res;
    }
    // g_i = sum_j Q[i][j] rho_j, solved in coordinates over R
    res.q = DenseMat(2, 2, f);
    {
        // coordinates of rho and gam over a common basis of R
        const Subspace& rel = primal.pres().relations();
        auto c0 = rel.coords(rho[0]);
        auto c1 = rel.coords(rho[1]);
        DenseMat rc(2, rel.dim(), f);
        for (size_t k = 0; k < rel.dim(); ++k) {
            rc[0][k] = (*c0)[k];
            rc[1][k] = (*c1)[k];
        }
        DenseMat rc_inv = rc.inverse();  // 2x2 after the span check
        for (int i = 0; i < 2; ++i) {
            auto cg = rel.coords(gam[static_cast<size_t>(i)]);
            if (!cg) {
                res.error = "last-letter slices of w do not lie in R";
                return res;
            }
            // q-row = cg * rc^{-1}
            for (int j = 0; j < 2; ++j) {
                Scalar acc = Scalar::zero(f);
                for (size_t k = 0; k < cg->size(); ++k) acc += (*cg)[k] * rc_inv[k][j];
                res.q[i][j] = acc;
            }
        }
    }
    res.ok = true;
    DenseMat q_inv = res.q.inverse();
    res.nu1_matches = fd.nu1 == q_inv;
    res.phi1_matches = fd.phi1 == q_inv.transpose();
    // nu2 on the w-adapted dual basis (f1*, f2*): B^{-1} nu2 B with
    // B[h][i] = value of the h-th A^!_3 basis functional on rho_i
    {
        const auto& words3 = ya.component_basis(2);  // n(2) = 3
        DenseMat b(words3.size(), 2, f);
        for (size_t h = 0; h < words3.size(); ++h)
            for (int i = 0; i < 2; ++i) b[h][i] = coeff_at(rho[static_cast<size_t>(i)], words3[h], f);
        DenseMat nu2_adapted = b.inverse().mul(fd.nu[2]).mul(b);
        res.nu2_matches = nu2_adapted == res.q.transpose();
    }
    res.type_a = fd.symmetry == FrobeniusData::Symmetry::symmetric;
    res.q_identity = res.q.is_identity();
    (void)wch;
    return res;
}

}  // namespace nha
