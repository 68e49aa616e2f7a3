#include "nha/hochschild.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace nha {

namespace {

// Per W_n basis vector: first-letter and last-letter contraction tensors,
// coordinates over the W_{n-1} basis.
struct WSliceTensors {
    std::vector<std::vector<std::pair<uint32_t, SparseVec>>> first, last;
};

WSliceTensors w_slice_tensors(WChain& wch, uint32_t n) {
    const Subspace& hi = wch.W(n);
    const Subspace& lo = wch.W(n - 1);
    uint32_t d = hi.ambient().alphabet;
    uint64_t tail = pow_u64(d, n - 1);
    WSliceTensors out;
    out.first.resize(hi.dim());
    out.last.resize(hi.dim());
    Field f = hi.field();
    auto coords_sparse = [&](const SparseVec& v) {
        auto c = lo.coords(v);
        if (!c) throw std::logic_error("W chain slice leaves W_{n-1}");
        SparseVec sc;
        for (uint32_t k = 0; k < c->size(); ++k)
            if (!(*c)[k].is_zero()) sc.push_back({k, (*c)[k]});
        return sc;
    };
    for (size_t s = 0; s < hi.basis().size(); ++s) {
        std::map<uint32_t, SparseVec> by_first, by_last;
        for (const auto& e : hi.basis()[s]) {
            by_first[static_cast<uint32_t>(e.col / tail)].push_back({e.col % tail, e.c});
            by_last[static_cast<uint32_t>(e.col % d)].push_back({e.col / d, e.c});
        }
        for (auto& [t, v] : by_first) {
            std::sort(v.begin(), v.end(),
                      [](const Entry& a, const Entry& b) { return a.col < b.col; });
            out.first[s].push_back({t, coords_sparse(v)});
        }
        for (auto& [t, v] : by_last) {
            std::sort(v.begin(), v.end(),
                      [](const Entry& a, const Entry& b) { return a.col < b.col; });
            out.last[s].push_back({t, coords_sparse(v)});
        }
    }
    return out;
}

void add_term(SparseVec& acc, uint64_t col, const Scalar& c) {
    if (c.is_zero()) return;
    SparseVec term{{col, c}};
    axpy(acc, Scalar::one(c.field()), term);
}

}  // namespace

// ---------------------------------------------------------------------------
// Theorem 4.4: bimodule exactness
// ---------------------------------------------------------------------------

BimoduleExactness bimodule_exactness(AlgebraView& view, WChain& wch, uint32_t j_budget) {
    Field f = view.field();
    uint32_t N = view.N();
    std::map<uint32_t, WSliceTensors> tensors;
    auto tens = [&](uint32_t n) -> WSliceTensors& {
        auto it = tensors.find(n);
        if (it == tensors.end()) it = tensors.emplace(n, w_slice_tensors(wch, n)).first;
        return it->second;
    };

    // flattened basis of (A (x) W_n (x) A)_j: block p, then (a, s, b)
    struct Slice {
        std::vector<uint64_t> offsets;
        uint64_t total = 0;
    };
    auto slice_of = [&](uint32_t j, uint32_t n) {
        Slice s;
        uint64_t dw = wch.dim(n);
        if (n > j) return s;
        for (uint32_t p = 0; p + n <= j; ++p) {
            s.offsets.push_back(s.total);
            s.total += view.dim(p) * dw * view.dim(j - n - p);
        }
        return s;
    };

    // one d_l or d_r step from (j, n) to (j, n-1)
    auto apply_step = [&](uint32_t j, uint32_t n, const SparseVec& v, bool left) {
        Slice src = slice_of(j, n), dst = slice_of(j, n - 1);
        uint64_t dw = wch.dim(n), dw_lo = wch.dim(n - 1);
        WSliceTensors& wt = tens(n);
        SparseVec out;
        for (const auto& e : v) {
            // decode block p then (a, s, b)
            uint32_t p = 0;
            while (p + 1 < src.offsets.size() && src.offsets[p + 1] <= e.col) ++p;
            uint64_t rest = e.col - src.offsets[p];
            uint32_t q = j - n - p;
            uint64_t nb = view.dim(q);
            uint32_t b = static_cast<uint32_t>(rest % nb);
            uint64_t as = rest / nb;
            uint32_t s = static_cast<uint32_t>(as % dw);
            uint32_t a = static_cast<uint32_t>(as / dw);
            if (left) {
                for (const auto& [t, coords] : wt.first[s]) {
                    const SparseVec& ae = view.mul_gen(p, a, t);
                    for (const auto& ea : ae)
                        for (const auto& ck : coords)
                            add_term(out,
                                     dst.offsets[p + 1] +
                                         (ea.col * dw_lo + ck.col) * nb + b,
                                     e.c * ea.c * ck.c);
                }
            } else {
                for (const auto& [t, coords] : wt.last[s]) {
                    SparseVec eb = view.lmul_gen(t, q, b);
                    for (const auto& eb1 : eb)
                        for (const auto& ck : coords)
                            add_term(out,
                                     dst.offsets[p] +
                                         (static_cast<uint64_t>(a) * dw_lo + ck.col) *
                                             view.dim(q + 1) +
                                         eb1.col,
                                     e.c * eb1.c * ck.c);
                }
            }
        }
        return out;
    };

    // the contraction arrow out of homological index i at internal degree j
    auto apply_arrow = [&](uint32_t j, uint32_t i, const SparseVec& v) {
        uint32_t n = jump(i, N);
        if (i % 2 == 1) {
            SparseVec dl = apply_step(j, n, v, true);
            SparseVec dr = apply_step(j, n, v, false);
            axpy(dl, -Scalar::one(f), dr);
            return dl;
        }
        SparseVec acc;
        for (uint32_t a = 0; a <= N - 1; ++a) {
            uint32_t bl = a, br = N - 1 - a;
            SparseVec cur = v;
            for (uint32_t s = 0, n_cur = n; s < bl; ++s, --n_cur)
                cur = apply_step(j, n_cur, cur, true);
            for (uint32_t s = 0, n_cur = n - bl; s < br; ++s, --n_cur)
                cur = apply_step(j, n_cur, cur, false);
            axpy(acc, Scalar::one(f), cur);
        }
        return acc;
    };

    BimoduleExactness res;
    res.bound = j_budget;
    std::map<std::pair<uint32_t, uint32_t>, uint64_t> rank_cache;
    auto rank_out = [&](uint32_t j, uint32_t i) -> uint64_t {
        uint32_t n = jump(i, N);
        if (n > j || wch.dim(n) == 0) return 0;
        auto key = std::make_pair(j, i);
        auto it = rank_cache.find(key);
        if (it != rank_cache.end()) return it->second;
        Slice src = slice_of(j, n);
        RankAcc acc(f);
        if (i == 0) {
            // mu : (A (x) A)_j -> A_j
            for (uint32_t p = 0; p <= j; ++p) {
                for (uint64_t a = 0; a < view.dim(p); ++a)
                    for (uint64_t b = 0; b < view.dim(j - p); ++b)
                        acc.add(view.mul_basis(p, static_cast<uint32_t>(a), j - p,
                                               static_cast<uint32_t>(b)));
            }
        } else {
            for (uint64_t r = 0; r < src.total; ++r)
                acc.add(apply_arrow(j, i, unit_vec(f, r)));
        }
        rank_cache.emplace(key, acc.rank());
        return rank_cache.at(key);
    };

    for (uint32_t j = 0; j <= j_budget && res.exact; ++j) {
        for (uint32_t i = 0; jump(i, N) <= j; ++i) {
            uint64_t dim_ij = slice_of(j, jump(i, N)).total;
            if (dim_ij == 0) continue;
            uint64_t h = dim_ij - rank_out(j, i);
            if (jump(i + 1, N) <= j) h -= rank_out(j, i + 1);
            if (h != 0) {
                res.exact = false;
                res.fail_i = i;
                res.fail_j = j;
                res.fail_dim = h;
                break;
            }
        }
    }
    return res;
}

GlobalDimResult hochschild_dimension(AlgebraView& dual, uint32_t probe_bound) {
    GlobalDimResult res;
    uint32_t N = dual.N();
    std::optional<uint32_t> first_zero;
    for (uint32_t m = N; m <= probe_bound; ++m)
        if (dual.dim(m) == 0) {
            first_zero = m;
            break;
        }
    if (first_zero) {
        res.exact = true;
        uint32_t i = 0;
        while (jump(i + 1, N) < *first_zero) ++i;
        res.value = i;
    } else {
        res.exact = false;
        uint32_t i = 0;
        while (jump(i + 1, N) <= probe_bound) ++i;
        res.value = i;
    }
    return res;
}

// ---------------------------------------------------------------------------
// Hochschild (co)homology tables for twisted coefficients
// ---------------------------------------------------------------------------

HHTable hh_cohomology_dims(AlgebraView& primal, AlgebraView& dual, const DenseMat& sigma1,
                           const DenseMat& tau1, uint32_t i_max, int64_t j_hi,
                           uint64_t slice_cap) {
    Field f = primal.field();
    uint32_t N = primal.N();
    uint32_t d = primal.dim_v();

    // del_r(f (x) m) = sum_t (e_t*.f) (x) (sigma(e_t).m), A-degree and
    // dual degree both go up by one
    auto apply_dr = [&](uint32_t n, uint32_t t_deg, const SparseVec& v) {
        SparseVec out;
        uint64_t na = primal.dim(t_deg);
        uint64_t na_next = primal.dim(t_deg + 1);
        for (const auto& e : v) {
            uint32_t fi = static_cast<uint32_t>(e.col / na);
            uint32_t mi = static_cast<uint32_t>(e.col % na);
            for (uint32_t t = 0; t < d; ++t) {
                SparseVec tf = dual.lmul_gen(t, n, fi);
                if (tf.empty()) continue;
                SparseVec sm;
                for (uint32_t h = 0; h < d; ++h) {
                    if (sigma1[t][h].is_zero()) continue;
                    axpy(sm, sigma1[t][h], primal.lmul_gen(h, t_deg, mi));
                }
                for (const auto& ef : tf)
                    for (const auto& em : sm)
                        add_term(out, ef.col * na_next + em.col, e.c * ef.c * em.c);
            }
        }
        return out;
    };
    auto apply_dl = [&](uint32_t n, uint32_t t_deg, const SparseVec& v) {
        SparseVec out;
        uint64_t na = primal.dim(t_deg);
        uint64_t na_next = primal.dim(t_deg + 1);
        for (const auto& e : v) {
            uint32_t fi = static_cast<uint32_t>(e.col / na);
            uint32_t mi = static_cast<uint32_t>(e.col % na);
            for (uint32_t t = 0; t < d; ++t) {
                const SparseVec& ft = dual.mul_gen(n, fi, t);
                if (ft.empty()) continue;
                SparseVec mt;
                for (uint32_t h = 0; h < d; ++h) {
                    if (tau1[t][h].is_zero()) continue;
                    axpy(mt, tau1[t][h], primal.mul_gen(t_deg, mi, h));
                }
                for (const auto& ef : ft)
                    for (const auto& em : mt)
                        add_term(out, ef.col * na_next + em.col, e.c * ef.c * em.c);
            }
        }
        return out;
    };
    // arrow out of cohomological index i (single from even, grouped from odd)
    auto apply_arrow = [&](uint32_t i, int64_t j, const SparseVec& v) {
        uint32_t n = jump(i, N);
        uint32_t t_deg = static_cast<uint32_t>(j + n);
        if (i % 2 == 0) {
            SparseVec dr = apply_dr(n, t_deg, v);
            SparseVec dl = apply_dl(n, t_deg, v);
            axpy(dr, -Scalar::one(f), dl);
            return dr;
        }
        SparseVec acc;
        for (uint32_t a = 0; a <= N - 1; ++a) {
            SparseVec cur = v;
            uint32_t nn = n, tt = t_deg;
            for (uint32_t s = 0; s < N - 1 - a; ++s) {
                cur = apply_dl(nn, tt, cur);
                ++nn;
                ++tt;
            }
            for (uint32_t s = 0; s < a; ++s) {
                cur = apply_dr(nn, tt, cur);
                ++nn;
                ++tt;
            }
            axpy(acc, Scalar::one(f), cur);
        }
        return acc;
    };

    HHTable table;
    table.i_max = i_max;
    table.j_lo = -static_cast<int64_t>(jump(i_max, N));
    table.j_hi = j_hi;
    table.v.assign(i_max + 1,
                   std::vector<int64_t>(static_cast<size_t>(j_hi - table.j_lo + 1), -1));

    auto dim_at = [&](uint32_t i, int64_t j) -> uint64_t {
        int64_t t = j + static_cast<int64_t>(jump(i, N));
        if (t < 0) return 0;
        return dual.dim(jump(i, N)) * primal.dim(static_cast<uint32_t>(t));
    };
    std::map<std::pair<uint32_t, int64_t>, int64_t> rank_cache;
    std::function<int64_t(uint32_t, int64_t)> rank_out = [&](uint32_t i, int64_t j) -> int64_t {
        uint64_t src = dim_at(i, j), dst = dim_at(i + 1, j);
        if (src == 0) return 0;
        if (slice_cap != 0 && (src > slice_cap || dst > slice_cap)) return -1;
        auto key = std::make_pair(i, j);
        auto it = rank_cache.find(key);
        if (it != rank_cache.end()) return it->second;
        RankAcc acc(f);
        for (uint64_t r = 0; r < src; ++r) acc.add(apply_arrow(i, j, unit_vec(f, r)));
        int64_t rank = static_cast<int64_t>(acc.rank());
        rank_cache.emplace(key, rank);
        return rank;
    };

    for (uint32_t i = 0; i <= i_max; ++i) {
        for (int64_t j = table.j_lo; j <= j_hi; ++j) {
            int64_t r_out = rank_out(i, j);
            int64_t r_in = i > 0 ? rank_out(i - 1, j) : 0;
            if (r_out < 0 || r_in < 0) continue;
            table.v[i][static_cast<size_t>(j - table.j_lo)] =
                static_cast<int64_t>(dim_at(i, j)) - r_out - r_in;
        }
    }
    return table;
}

HHTable hh_homology_dims(AlgebraView& primal, WChain& wch, const DenseMat& sigma1,
                         const DenseMat& tau1, uint32_t i_max, int64_t j_hi,
                         uint64_t slice_cap) {
    Field f = primal.field();
    uint32_t N = primal.N();
    std::map<uint32_t, WSliceTensors> tensors;
    auto tens = [&](uint32_t n) -> WSliceTensors& {
        auto it = tensors.find(n);
        if (it == tensors.end()) it = tensors.emplace(n, w_slice_tensors(wch, n)).first;
        return it->second;
    };

    // d_l(m (x) w) = sum_t (m.tau(e_t)) (x) first_t(w)
    auto apply_dl = [&](uint32_t n, uint32_t m_deg, const SparseVec& v) {
        SparseVec out;
        uint64_t dw = wch.dim(n), dw_lo = wch.dim(n - 1);
        WSliceTensors& wt = tens(n);
        uint32_t d = primal.dim_v();
        for (const auto& e : v) {
            uint32_t mi = static_cast<uint32_t>(e.col / dw);
            uint32_t s = static_cast<uint32_t>(e.col % dw);
            for (const auto& [t, coords] : wt.first[s]) {
                SparseVec mt;
                for (uint32_t h = 0; h < d; ++h) {
                    if (tau1[t][h].is_zero()) continue;
                    axpy(mt, tau1[t][h], primal.mul_gen(m_deg, mi, h));
                }
                for (const auto& em : mt)
                    for (const auto& ck : coords)
                        add_term(out, em.col * dw_lo + ck.col, e.c * em.c * ck.c);
            }
        }
        return out;
    };
    // d_r(m (x) w) = sum_t (sigma(e_t).m) (x) last_t(w)
    auto apply_dr = [&](uint32_t n, uint32_t m_deg, const SparseVec& v) {
        SparseVec out;
        uint64_t dw = wch.dim(n), dw_lo = wch.dim(n - 1);
        WSliceTensors& wt = tens(n);
        uint32_t d = primal.dim_v();
        for (const auto& e : v) {
            uint32_t mi = static_cast<uint32_t>(e.col / dw);
            uint32_t s = static_cast<uint32_t>(e.col % dw);
            for (const auto& [t, coords] : wt.last[s]) {
                SparseVec sm;
                for (uint32_t h = 0; h < d; ++h) {
                    if (sigma1[t][h].is_zero()) continue;
                    axpy(sm, sigma1[t][h], primal.lmul_gen(h, m_deg, mi));
                }
                for (const auto& em : sm)
                    for (const auto& ck : coords)
                        add_term(out, em.col * dw_lo + ck.col, e.c * em.c * ck.c);
            }
        }
        return out;
    };
    auto apply_arrow = [&](uint32_t i, int64_t j, const SparseVec& v) {
        uint32_t n = jump(i, N);
        uint32_t m_deg = static_cast<uint32_t>(j - n);
        if (i % 2 == 1) {
            SparseVec dl = apply_dl(n, m_deg, v);
            SparseVec dr = apply_dr(n, m_deg, v);
            axpy(dl, -Scalar::one(f), dr);
            return dl;
        }
        SparseVec acc;
        for (uint32_t a = 0; a <= N - 1; ++a) {
            SparseVec cur = v;
            uint32_t nn = n, mm = m_deg;
            for (uint32_t s = 0; s < a; ++s) {
                cur = apply_dl(nn, mm, cur);
                --nn;
                ++mm;
            }
            for (uint32_t s = 0; s + a < N - 1; ++s) {
                cur = apply_dr(nn, mm, cur);
                --nn;
                ++mm;
            }
            axpy(acc, Scalar::one(f), cur);
        }
        return acc;
    };

    HHTable table;
    table.i_max = i_max;
    table.j_lo = 0;
    table.j_hi = j_hi;
    table.v.assign(i_max + 1,
                   std::vector<int64_t>(static_cast<size_t>(j_hi - table.j_lo + 1), -1));
    auto dim_at = [&](uint32_t i, int64_t j) -> uint64_t {
        int64_t m = j - static_cast<int64_t>(jump(i, N));
        if (m < 0) return 0;
        return primal.dim(static_cast<uint32_t>(m)) * wch.dim(jump(i, N));
    };
    std::map<std::pair<uint32_t, int64_t>, int64_t> rank_cache;
    auto rank_arrow = [&](uint32_t i, int64_t j) -> int64_t {
        // rank of the arrow out of chain index i (i >= 1) into i-1
        uint64_t src = dim_at(i, j), dst = dim_at(i - 1, j);
        if (src == 0) return 0;
        if (slice_cap != 0 && (src > slice_cap || dst > slice_cap)) return -1;
        auto key = std::make_pair(i, j);
        auto it = rank_cache.find(key);
        if (it != rank_cache.end()) return it->second;
        RankAcc acc(f);
        for (uint64_t r = 0; r < src; ++r) acc.add(apply_arrow(i, j, unit_vec(f, r)));
        int64_t rank = static_cast<int64_t>(acc.rank());
        rank_cache.emplace(key, rank);
        return rank;
    };

    for (uint32_t i = 0; i <= i_max; ++i) {
        for (int64_t j = 0; j <= j_hi; ++j) {
            int64_t r_out = i > 0 ? rank_arrow(i, j) : 0;
            int64_t r_in = rank_arrow(i + 1, j);
            if (r_out < 0 || r_in < 0) continue;
            table.v[i][static_cast<size_t>(j)] =
                static_cast<int64_t>(dim_at(i, j)) - r_out - r_in;
        }
    }
    return table;
}

HHTable hh_homology_bar(AlgebraView& primal, const DenseMat& sigma1, const DenseMat& tau1,
                        uint32_t i_max, int64_t j_hi) {
    Field f = primal.field();
    auto sigma = GradedMap::extend_degree1(primal, sigma1);
    auto tau = GradedMap::extend_degree1(primal, tau1);
    if (!sigma || !tau) throw std::invalid_argument("twist does not preserve R");

    // components M_t (x) A_{a_1} (x) ... (x) A_{a_i}
    struct SliceBasis {
        std::vector<std::vector<uint32_t>> comps;  // (t, a_1..a_i)
        std::vector<uint64_t> offset;
        std::map<std::vector<uint32_t>, size_t> comp_index;
        uint64_t total = 0;
    };
    auto build = [&](uint32_t i, int64_t j) {
        SliceBasis b;
        std::vector<uint32_t> cur(i + 1, 0);
        std::function<void(uint32_t, int64_t)> rec = [&](uint32_t pos, int64_t left) {
            if (pos == i) {
                if (left < 0) return;
                cur[0] = static_cast<uint32_t>(left);
                // cur layout: [t, a_1..a_i] with t written last here
                std::vector<uint32_t> comp;
                comp.push_back(cur[0]);
                for (uint32_t k = 1; k <= i; ++k) comp.push_back(cur[k]);
                b.comps.push_back(comp);
                return;
            }
            for (int64_t v = 1; v <= left; ++v) {
                cur[pos + 1] = static_cast<uint32_t>(v);
                rec(pos + 1, left - v);
            }
        };
        rec(0, j);
        std::sort(b.comps.begin(), b.comps.end());
        for (auto& comp : b.comps) {
            b.offset.push_back(b.total);
            b.comp_index[comp] = b.offset.size() - 1;
            uint64_t block = primal.dim(comp[0]);
            for (uint32_t k = 1; k < comp.size(); ++k) block *= primal.dim(comp[k]);
            b.total += block;
        }
        return b;
    };

    std::map<std::pair<uint32_t, int64_t>, SliceBasis> bases;
    auto basis_of = [&](uint32_t i, int64_t j) -> SliceBasis& {
        auto key = std::make_pair(i, j);
        auto it = bases.find(key);
        if (it == bases.end()) it = bases.emplace(key, build(i, j)).first;
        return it->second;
    };

    std::map<std::pair<uint32_t, int64_t>, int64_t> rank_cache;
    auto rank_arrow = [&](uint32_t i, int64_t j) -> int64_t {
        if (i == 0) return 0;
        auto key = std::make_pair(i, j);
        auto it = rank_cache.find(key);
        if (it != rank_cache.end()) return it->second;
        SliceBasis& src = basis_of(i, j);
        SliceBasis& dst = basis_of(i - 1, j);
        RankAcc acc(f);
        for (size_t ci = 0; ci < src.comps.size(); ++ci) {
            const auto& comp = src.comps[ci];
            std::vector<uint64_t> radix(comp.size());
            for (size_t k = 0; k < comp.size(); ++k) radix[k] = primal.dim(comp[k]);
            std::vector<uint32_t> tup(comp.size(), 0);
            bool done = false;
            while (!done) {
                SparseVec row;
                // face 0: m . tau(x_1)
                {
                    std::vector<uint32_t> tc{static_cast<uint32_t>(comp[0] + comp[1])};
                    for (size_t k = 2; k < comp.size(); ++k) tc.push_back(comp[k]);
                    size_t tci = dst.comp_index.at(tc);
                    SparseVec prod =
                        primal.mul(comp[0], unit_vec(f, tup[0]), comp[1],
                                   tau->apply_basis(comp[1], tup[1]));
                    for (const auto& pe : prod) {
                        uint64_t idx = pe.col;
                        for (size_t k = 2; k < comp.size(); ++k)
                            idx = idx * primal.dim(comp[k]) + tup[k];
                        add_term(row, dst.offset[tci] + idx, pe.c);
                    }
                }
                // inner faces
                for (size_t k = 1; k + 1 < comp.size(); ++k) {
                    std::vector<uint32_t> tc;
                    tc.push_back(comp[0]);
                    for (size_t l = 1; l < comp.size(); ++l) {
                        if (l == k) tc.push_back(comp[k] + comp[k + 1]);
                        else if (l != k + 1) tc.push_back(comp[l]);
                    }
                    size_t tci = dst.comp_index.at(tc);
                    SparseVec prod = primal.mul_basis(comp[k], tup[k], comp[k + 1], tup[k + 1]);
                    Scalar sign = (k % 2) ? -Scalar::one(f) : Scalar::one(f);
                    for (const auto& pe : prod) {
                        uint64_t idx = tup[0];
                        for (size_t l = 1; l < tc.size(); ++l) {
                            uint64_t digit;
                            if (l < k) digit = tup[l];
                            else if (l == k) digit = pe.col;
                            else digit = tup[l + 1];
                            idx = idx * primal.dim(tc[l]) + digit;
                        }
                        add_term(row, dst.offset[tci] + idx, sign * pe.c);
                    }
                }
                // last face: sigma(x_i) . m, sign (-1)^i
                {
                    uint32_t last = comp[comp.size() - 1];
                    std::vector<uint32_t> tc{static_cast<uint32_t>(comp[0] + last)};
                    for (size_t k = 1; k + 1 < comp.size(); ++k) tc.push_back(comp[k]);
                    size_t tci = dst.comp_index.at(tc);
                    SparseVec prod = primal.mul(
                        last, sigma->apply_basis(last, tup[comp.size() - 1]), comp[0],
                        unit_vec(f, tup[0]));
                    Scalar sign = (i % 2) ? -Scalar::one(f) : Scalar::one(f);
                    for (const auto& pe : prod) {
                        uint64_t idx = pe.col;
                        for (size_t k = 1; k + 1 < comp.size(); ++k)
                            idx = idx * primal.dim(comp[k]) + tup[k];
                        add_term(row, dst.offset[tci] + idx, sign * pe.c);
                    }
                }
                acc.add(std::move(row));
                done = true;
                for (size_t k = comp.size(); k-- > 0;) {
                    if (++tup[k] < radix[k]) {
                        done = false;
                        break;
                    }
                    tup[k] = 0;
                }
            }
        }
        int64_t rank = static_cast<int64_t>(acc.rank());
        rank_cache.emplace(key, rank);
        return rank;
    };

    HHTable table;
    table.i_max = i_max;
    table.j_lo = 0;
    table.j_hi = j_hi;
    table.v.assign(i_max + 1,
                   std::vector<int64_t>(static_cast<size_t>(j_hi + 1), -1));
    for (uint32_t i = 0; i <= i_max; ++i)
        for (int64_t j = 0; j <= j_hi; ++j) {
            int64_t r_out = rank_arrow(i, j);
            int64_t r_in = rank_arrow(i + 1, j);
            table.v[i][static_cast<size_t>(j)] =
                static_cast<int64_t>(basis_of(i, j).total) - r_out - r_in;
        }
    return table;
}

// ---------------------------------------------------------------------------
// Lemma 6.2 and the top cokernel
// ---------------------------------------------------------------------------

Lemma62Result lemma62_check(AlgebraView& primal, AlgebraView& dual,
                            const GorensteinCertificate& cert, const DenseMat& twist1,
                            uint32_t degree_budget) {
    if (!cert.verdict()) throw std::invalid_argument("lemma 6.2 needs a Gorenstein verdict");
    Field f = primal.field();
    uint32_t d = primal.dim_v();
    uint32_t lo = cert.n_D - 1;
    Lemma62Result res;
    auto twist = GradedMap::extend_degree1(primal, twist1);
    if (!twist) throw std::invalid_argument("twist does not preserve R");

    uint64_t dual_lo = dual.dim(lo);
    // u-coefficients of e_t* . f and f . e_t*
    std::vector<std::vector<Scalar>> lcoef(d, std::vector<Scalar>(dual_lo, Scalar::zero(f)));
    std::vector<std::vector<Scalar>> rcoef = lcoef;
    for (uint32_t t = 0; t < d; ++t)
        for (uint32_t fi = 0; fi < dual_lo; ++fi) {
            lcoef[t][fi] = coeff_at(dual.lmul_gen(t, lo, fi), 0, f);
            rcoef[t][fi] = coeff_at(dual.mul_gen(lo, fi, t), 0, f);
        }
    Scalar sD = (cert.D % 2) ? -Scalar::one(f) : Scalar::one(f);

    // mu_u^phi o del on each source cell (p, a, f, b); the image lives in
    // A_{p+q+1}
    for (uint32_t c = 0; c <= degree_budget && res.passes; ++c) {
        for (uint32_t p = 0; p <= c && res.passes; ++p) {
            uint32_t q = c - p;
            for (uint64_t a = 0; a < primal.dim(p) && res.passes; ++a)
                for (uint64_t fi = 0; fi < dual_lo && res.passes; ++fi)
                    for (uint64_t b = 0; b < primal.dim(q); ++b) {
                        SparseVec img;  // in A_{c+1} coordinates
                        for (uint32_t t = 0; t < d; ++t) {
                            // del_r: a (x) e_t*.f (x) e_t b
                            if (!lcoef[t][fi].is_zero()) {
                                SparseVec tb = primal.lmul_gen(t, q, static_cast<uint32_t>(b));
                                SparseVec ta = twist->apply_basis(p, static_cast<uint32_t>(a));
                                SparseVec prod = primal.mul(p, ta, q + 1, tb);
                                axpy(img, lcoef[t][fi], prod);
                            }
                            // (-1)^D del_l: a e_t (x) f.e_t* (x) b
                            if (!rcoef[t][fi].is_zero()) {
                                SparseVec at = primal.mul_gen(p, static_cast<uint32_t>(a), t);
                                SparseVec ta = twist->apply(p + 1, at);
                                SparseVec prod =
                                    primal.mul(p + 1, ta, q, unit_vec(f, b));
                                axpy(img, sD * rcoef[t][fi], prod);
                            }
                        }
                        if (!img.empty()) {
                            res.passes = false;
                            res.fail_degree = c;
                            break;
                        }
                    }
        }
    }

    // cokernel of del at the top slot, per target degree j = (p+q) + n(D)
    res.coker_j_lo = cert.n_D;
    for (uint32_t tq = 0; tq <= degree_budget; ++tq) {
        // target cells p + q = tq; sources have p + q = tq - 1
        uint64_t target_dim = 0;
        for (uint32_t p = 0; p <= tq; ++p) target_dim += primal.dim(p) * primal.dim(tq - p);
        RankAcc acc(f);
        if (tq >= 1) {
            uint32_t c = tq - 1;
            // target flattening: block p, col = offset_p + a * dimA_q + b
            std::vector<uint64_t> toff(tq + 2, 0);
            for (uint32_t p = 0; p <= tq; ++p)
                toff[p + 1] = toff[p] + primal.dim(p) * primal.dim(tq - p);
            for (uint32_t p = 0; p <= c; ++p) {
                uint32_t q = c - p;
                for (uint64_t a = 0; a < primal.dim(p); ++a)
                    for (uint64_t fi = 0; fi < dual_lo; ++fi)
                        for (uint64_t b = 0; b < primal.dim(q); ++b) {
                            SparseVec row;
                            for (uint32_t t = 0; t < d; ++t) {
                                if (!lcoef[t][fi].is_zero()) {
                                    SparseVec tb =
                                        primal.lmul_gen(t, q, static_cast<uint32_t>(b));
                                    for (const auto& eb : tb)
                                        add_term(row,
                                                 toff[p] + a * primal.dim(q + 1) + eb.col,
                                                 lcoef[t][fi] * eb.c);
                                }
                                if (!rcoef[t][fi].is_zero()) {
                                    const SparseVec& at =
                                        primal.mul_gen(p, static_cast<uint32_t>(a), t);
                                    for (const auto& ea : at)
                                        add_term(row,
                                                 toff[p + 1] + ea.col * primal.dim(q) + b,
                                                 sD * rcoef[t][fi] * ea.c);
                                }
                            }
                            acc.add(std::move(row));
                        }
            }
        }
        res.coker_dims.push_back(static_cast<int64_t>(target_dim) -
                                 static_cast<int64_t>(acc.rank()));
        res.expected_dims.push_back(static_cast<int64_t>(primal.dim(tq)));
        if (res.coker_dims.back() != res.expected_dims.back()) res.coker_matches = false;
    }
    return res;
}

// ---------------------------------------------------------------------------
// Theorem 6.3 verification
// ---------------------------------------------------------------------------

DualityReport duality_check(AlgebraView& primal, AlgebraView& dual, WChain& wch,
                            const GorensteinCertificate& cert, const DenseMat& twist1,
                            int64_t j_hi, int shift_direction, uint64_t slice_cap) {
    if (!cert.verdict()) throw std::invalid_argument("duality check needs a Gorenstein verdict");
    Field f = primal.field();
    DualityReport rep;
    rep.computed = true;
    rep.shift_direction = shift_direction;
    uint32_t D = cert.D;
    DenseMat id = DenseMat::identity(primal.dim_v(), f);
    rep.cohomology = hh_cohomology_dims(primal, dual, id, id, D, j_hi, slice_cap);
    int64_t shift = static_cast<int64_t>(cert.n_D) * shift_direction;
    int64_t hom_hi = j_hi + std::max<int64_t>(shift, 0) + 1;
    rep.homology = hh_homology_dims(primal, wch, twist1, id, D, hom_hi, slice_cap);
    for (uint32_t i = 0; i <= D; ++i) {
        for (int64_t j = rep.cohomology.j_lo; j <= j_hi; ++j) {
            int64_t lhs = rep.cohomology.at(i, j);
            int64_t rhs = rep.homology.at(D - i, j + shift);
            if (lhs < 0 || rhs < 0) continue;  // skipped by cap
            if (lhs != rhs) {
                rep.all_match = false;
                rep.mismatches.push_back({i, j, lhs, rhs});
            }
        }
    }
    return rep;
}

int calibrate_duality_shift() {
    Field f = Field::rationals();
    Presentation p = Presentation::polynomial(f, 2);
    AlgebraView primal(p);
    AlgebraView dualv(p.dual());
    WChain wch(p);
    auto cert = gorenstein_verdict(primal, dualv, wch, 6);
    if (!cert.verdict()) throw std::logic_error("calibration fixture must be Gorenstein");
    DenseMat id = DenseMat::identity(2, f);
    // twist is trivial for k[x,y]
    for (int dir : {+1, -1}) {
        auto rep = duality_check(primal, dualv, wch, cert, id, 3, dir, 0);
        if (rep.all_match && dir == +1) return +1;
        if (rep.all_match && dir == -1) return -1;
    }
    throw std::logic_error("duality shift calibration failed on k[x,y]");
}

}  // namespace nha
