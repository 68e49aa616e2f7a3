#include "nha/koszul.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace nha {

uint32_t jump(uint32_t i, uint32_t N) {
    return (i / 2) * N + (i % 2);
}

const Subspace& WChain::W(uint32_t n) {
    uint32_t N = pres_.degree();
    Field f = pres_.field();
    while (ws_.size() <= n) {
        uint32_t m = static_cast<uint32_t>(ws_.size());
        if (m < N) {
            ws_.push_back(Subspace::full(pres_.word_space(m), f));
        } else if (m == N) {
            ws_.push_back(pres_.relations());
        } else {
            Subspace left = ws_[m - 1].embed_block(1, 0);           // V (x) W_{m-1}
            Subspace right = pres_.relations().embed_block(0, m - N);  // R (x) V^{(x)(m-N)}
            ws_.push_back(left.intersect(right));
        }
    }
    return ws_[n];
}

int64_t ComplexSlice::euler() const {
    int64_t e = 0;
    for (size_t i = 0; i < dims.size(); ++i)
        e += (i % 2 == 0) ? static_cast<int64_t>(dims[i]) : -static_cast<int64_t>(dims[i]);
    return e;
}

std::vector<uint64_t> ComplexSlice::ranks() const {
    std::vector<uint64_t> r(dims.size() + 1, 0);
    Field f = Field::rationals();
    for (size_t i = 1; i < delta.size(); ++i) {
        if (delta[i].rows.empty()) continue;
        for (const auto& row : delta[i].rows)
            if (!row.empty()) {
                f = row.front().c.field();
                break;
            }
        RankAcc acc(f);
        for (const auto& row : delta[i].rows) acc.add(row);
        r[i] = acc.rank();
    }
    return r;
}

std::vector<uint64_t> ComplexSlice::homology() const {
    auto r = ranks();
    std::vector<uint64_t> h(dims.size());
    for (size_t i = 0; i < dims.size(); ++i) {
        uint64_t in = i + 1 < r.size() ? r[i + 1] : 0;
        h[i] = dims[i] - r[i] - in;
    }
    return h;
}

bool ComplexSlice::composites_vanish() const {
    for (size_t i = 1; i + 1 < delta.size(); ++i) {
        const SparseMat& outer = delta[i];
        const SparseMat& inner = delta[i + 1];
        for (const auto& row : inner.rows) {
            SparseVec img;
            for (const auto& e : row) axpy(img, e.c, outer.rows[static_cast<size_t>(e.col)]);
            if (!img.empty()) return false;
        }
    }
    return true;
}

namespace {

// Decomposition of W_{n(i)} inside V^{(x)a} (x) W_{n(i-1)}: per basis vector,
// the list of (prefix word, coordinates of the tail slice over the W basis).
struct WDecomp {
    std::vector<std::vector<std::pair<uint64_t, SparseVec>>> per_basis;
};

WDecomp w_decompose(WChain& wch, uint32_t n_hi, uint32_t n_lo) {
    const Subspace& hi = wch.W(n_hi);
    const Subspace& lo = wch.W(n_lo);
    uint64_t tail_dim = pow_u64(hi.ambient().alphabet, n_lo);
    Field f = hi.field();
    WDecomp d;
    d.per_basis.resize(hi.dim());
    for (size_t s = 0; s < hi.basis().size(); ++s) {
        std::map<uint64_t, SparseVec> slices;
        for (const auto& e : hi.basis()[s])
            slices[e.col / tail_dim].push_back({e.col % tail_dim, e.c});
        for (auto& [prefix, tail] : slices) {
            auto coords = lo.coords(tail);
            if (!coords)
                throw std::logic_error("W chain not nested: W_n not inside V^a (x) W_{n-a}");
            SparseVec sc;
            for (uint32_t k = 0; k < coords->size(); ++k)
                if (!(*coords)[k].is_zero()) sc.push_back({k, (*coords)[k]});
            if (!sc.empty()) d.per_basis[s].push_back({prefix, std::move(sc)});
        }
    }
    return d;
}

// Streams the rows of delta_i at internal degree j into `sink`.
// Source basis (a_idx, s) -> column a_idx * dimW_hi + s;
// target basis (b_idx, k) -> column b_idx * dimW_lo + k.
template <typename Sink>
void build_koszul_delta(AlgebraView& view, WChain& wch, uint32_t j, uint32_t i, Sink&& sink) {
    uint32_t N = view.N();
    uint32_t n_hi = jump(i, N), n_lo = jump(i - 1, N);
    if (n_hi > j) return;
    uint32_t a = n_hi - n_lo;
    uint32_t degA = j - n_hi;
    uint64_t dimW_hi = wch.dim(n_hi), dimW_lo = wch.dim(n_lo);
    if (dimW_hi == 0) return;
    WDecomp dec = w_decompose(wch, n_hi, n_lo);
    uint64_t nA = view.dim(degA);
    Field f = view.field();
    for (uint64_t a_idx = 0; a_idx < nA; ++a_idx) {
        std::map<uint64_t, SparseVec> prod_cache;
        for (uint64_t s = 0; s < dimW_hi; ++s) {
            SparseVec row;
            for (const auto& [prefix, coords] : dec.per_basis[s]) {
                auto it = prod_cache.find(prefix);
                if (it == prod_cache.end())
                    it = prod_cache
                             .emplace(prefix, view.mul_word(degA, unit_vec(f, a_idx), prefix, a))
                             .first;
                for (const auto& ck : coords)
                    for (const auto& e : it->second)
                        row.push_back({e.col * dimW_lo + ck.col, e.c * ck.c});
            }
            std::sort(row.begin(), row.end(),
                      [](const Entry& x, const Entry& y) { return x.col < y.col; });
            // merge duplicate columns (distinct prefixes can hit one target)
            SparseVec merged;
            for (auto& e : row) {
                if (!merged.empty() && merged.back().col == e.col)
                    merged.back().c += e.c;
                else
                    merged.push_back(std::move(e));
            }
            merged.erase(std::remove_if(merged.begin(), merged.end(),
                                        [](const Entry& e) { return e.c.is_zero(); }),
                         merged.end());
            sink(a_idx * dimW_hi + s, std::move(merged));
        }
    }
}

uint64_t koszul_delta_rank(AlgebraView& view, WChain& wch, uint32_t j, uint32_t i) {
    RankAcc acc(view.field());
    build_koszul_delta(view, wch, j, i, [&](uint64_t, SparseVec row) { acc.add(std::move(row)); });
    return acc.rank();
}

}  // namespace

ComplexSlice koszul_slice(AlgebraView& view, WChain& wch, uint32_t j, uint32_t i_max) {
    uint32_t N = view.N();
    ComplexSlice slice;
    uint32_t top = 0;
    while (top + 1 <= i_max && jump(top + 1, N) <= j) ++top;
    slice.dims.resize(top + 1);
    slice.delta.resize(top + 1);
    for (uint32_t i = 0; i <= top; ++i) {
        uint32_t n_i = jump(i, N);
        slice.dims[i] = view.dim(j - n_i) * wch.dim(n_i);
    }
    for (uint32_t i = 1; i <= top; ++i) {
        SparseMat& m = slice.delta[i];
        m.n_rows = slice.dims[i];
        m.n_cols = slice.dims[i - 1];
        m.rows.resize(m.n_rows);
        build_koszul_delta(view, wch, j, i,
                           [&](uint64_t r, SparseVec row) { m.rows[r] = std::move(row); });
    }
    return slice;
}

ComplexSlice koszul_slice_via_dual(AlgebraView& view, AlgebraView& dual, uint32_t j,
                                   uint32_t i_max) {
    uint32_t N = view.N();
    Field f = view.field();
    uint32_t d = view.dim_v();
    // single N-complex step: A_{degA} (x) A^!*_m -> A_{degA+1} (x) A^!*_{m-1}
    auto apply_d = [&](uint32_t degA, uint32_t m, const SparseVec& v) {
        uint64_t lo_dim = dual.dim(m - 1);
        SparseVec out;
        for (const auto& e : v) {
            uint64_t a_idx = e.col / dual.dim(m);
            uint32_t h = static_cast<uint32_t>(e.col % dual.dim(m));
            for (uint32_t t = 0; t < d; ++t) {
                SparseVec ae = view.mul_gen(degA, static_cast<uint32_t>(a_idx), t);
                for (uint32_t fidx = 0; fidx < lo_dim; ++fidx) {
                    Scalar c = coeff_at(dual.lmul_gen(t, m - 1, fidx), h, f);
                    if (c.is_zero()) continue;
                    for (const auto& ea : ae) {
                        SparseVec term{{ea.col * lo_dim + fidx, ea.c * c * e.c}};
                        axpy(out, Scalar::one(f), term);
                    }
                }
            }
        }
        return out;
    };

    ComplexSlice slice;
    uint32_t top = 0;
    while (top + 1 <= i_max && jump(top + 1, N) <= j) ++top;
    slice.dims.resize(top + 1);
    slice.delta.resize(top + 1);
    for (uint32_t i = 0; i <= top; ++i) {
        uint32_t n_i = jump(i, N);
        slice.dims[i] = view.dim(j - n_i) * dual.dim(n_i);
    }
    for (uint32_t i = 1; i <= top; ++i) {
        uint32_t n_i = jump(i, N);
        uint32_t steps = n_i - jump(i - 1, N);  // 1 or N-1
        SparseMat& mt = slice.delta[i];
        mt.n_rows = slice.dims[i];
        mt.n_cols = slice.dims[i - 1];
        mt.rows.resize(mt.n_rows);
        for (uint64_t r = 0; r < mt.n_rows; ++r) {
            SparseVec v{{r, Scalar::one(f)}};
            uint32_t degA = j - n_i, m = n_i;
            for (uint32_t s = 0; s < steps; ++s) {
                v = apply_d(degA, m, v);
                ++degA;
                --m;
            }
            mt.rows[r] = std::move(v);
        }
    }
    return slice;
}

KoszulVerdict koszulity_verdict(AlgebraView& view, WChain& wch, uint32_t j_budget) {
    KoszulVerdict verdict;
    verdict.confluent = view.confluent();
    ExtraConditionResult extra = extra_condition(wch);
    verdict.extra_ok = extra.holds;
    if (verdict.confluent && verdict.extra_ok) {
        verdict.status = KoszulVerdict::Status::certified;
        verdict.method = "confluence+extra";
        verdict.bound = j_budget;
        return verdict;
    }
    verdict.method = "truncated_exactness";
    verdict.bound = j_budget;
    uint32_t N = view.N();
    std::map<std::pair<uint32_t, uint32_t>, uint64_t> rank_cache;
    auto rank_at = [&](uint32_t j, uint32_t i) {
        auto key = std::make_pair(j, i);
        auto it = rank_cache.find(key);
        if (it == rank_cache.end())
            it = rank_cache.emplace(key, koszul_delta_rank(view, wch, j, i)).first;
        return it->second;
    };
    for (uint32_t j = 2; j <= j_budget; ++j) {
        for (uint32_t i = 2; jump(i, N) <= j; ++i) {
            uint64_t dim_i = view.dim(j - jump(i, N)) * wch.dim(jump(i, N));
            if (dim_i == 0) continue;
            uint64_t h = dim_i - rank_at(j, i);
            if (jump(i + 1, N) <= j) h -= rank_at(j, i + 1);
            if (h > 0) {
                verdict.status = KoszulVerdict::Status::not_koszul;
                verdict.witness_i = i;
                verdict.witness_j = j;
                verdict.witness_dim = h;
                return verdict;
            }
        }
    }
    verdict.status = KoszulVerdict::Status::up_to;
    return verdict;
}

ExtraConditionResult extra_condition(WChain& wch) {
    const Presentation& p = wch.pres();
    uint32_t N = p.degree();
    for (uint32_t m = 1; m <= N - 1; ++m) {
        Subspace x = p.relations().embed_block(m, 0);  // V^m (x) R
        Subspace y = p.relations().embed_block(0, m);  // R (x) V^m
        uint64_t inter = x.dim() + y.dim() - x.sum(y).dim();
        // W_{N+m} is contained in the intersection, so dims decide equality
        if (inter != wch.dim(N + m)) return {false, m};
    }
    return {true, 0};
}

ConfluenceResult confluence_check(const Presentation& p) { return confluence_check(p, p.order()); }

ConfluenceResult confluence_check(const Presentation& p, const MonomialOrder& order) {
    RewriteSystem rs(p, order);
    ConfluenceResult res;
    auto witness = rs.unresolved_overlap();
    if (witness) {
        res.confluent = false;
        res.witness_word = witness->word;
        res.witness_length = witness->length;
    }
    return res;
}

DistributivityResult distributivity_check(const Presentation& p, uint32_t n,
                                          size_t lattice_budget) {
    if (n < p.degree()) throw std::invalid_argument("distributivity check needs n >= N");
    DistributivityResult res;
    std::vector<Subspace> lattice;
    auto find = [&](const Subspace& s) -> std::optional<size_t> {
        for (size_t k = 0; k < lattice.size(); ++k)
            if (lattice[k].cmp(s) == 0) return k;
        return std::nullopt;
    };
    for (uint32_t i = 0; i + p.degree() <= n; ++i) {
        Subspace g = p.relations().embed_block(i, n - p.degree() - i);
        if (!find(g)) lattice.push_back(std::move(g));
    }
    // close under meet and join
    for (size_t a = 0; a < lattice.size(); ++a) {
        for (size_t b = 0; b < a; ++b) {
            for (int op = 0; op < 2; ++op) {
                Subspace c = op ? lattice[a].sum(lattice[b]) : lattice[a].intersect(lattice[b]);
                if (!find(c)) {
                    lattice.push_back(std::move(c));
                    if (lattice.size() > lattice_budget) {
                        res.status = DistributivityResult::Status::budget_exceeded;
                        res.lattice_size = lattice.size();
                        return res;
                    }
                }
            }
        }
    }
    res.lattice_size = lattice.size();
    size_t triple_budget = 200000;
    if (lattice.size() * lattice.size() * lattice.size() > triple_budget) {
        res.status = DistributivityResult::Status::budget_exceeded;
        return res;
    }
    for (size_t x = 0; x < lattice.size(); ++x)
        for (size_t y = 0; y < lattice.size(); ++y)
            for (size_t z = 0; z < lattice.size(); ++z) {
                Subspace lhs = lattice[x].intersect(lattice[y].sum(lattice[z]));
                Subspace rhs = lattice[x].intersect(lattice[y]).sum(lattice[x].intersect(lattice[z]));
                if (!lhs.equals(rhs)) {
                    res.status = DistributivityResult::Status::violation;
                    res.x = x;
                    res.y = y;
                    res.z = z;
                    return res;
                }
            }
    res.status = DistributivityResult::Status::distributive;
    return res;
}

GlobalDimResult global_dimension(WChain& wch, uint32_t probe_bound) {
    uint32_t N = wch.pres().degree();
    std::optional<uint32_t> first_zero;
    for (uint32_t m = N; m <= probe_bound; ++m) {
        if (wch.dim(m) == 0) {
            first_zero = m;
            break;
        }
    }
    GlobalDimResult res;
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

BarTorTable bar_tor_dims(AlgebraView& view, uint32_t i_max, uint32_t j_max, uint64_t slice_cap) {
    Field f = view.field();
    BarTorTable table;
    table.i_max = i_max;
    table.j_max = j_max;
    table.value.assign(i_max + 1, std::vector<int64_t>(j_max + 1, -1));

    struct SliceBasis {
        std::vector<std::vector<uint32_t>> comps;
        std::vector<uint64_t> offset;
        std::map<std::vector<uint32_t>, size_t> comp_index;
        uint64_t total = 0;
    };
    // compositions of j into i parts >= 1, lexicographic
    auto build_basis = [&](uint32_t i, uint32_t j) {
        SliceBasis b;
        if (i == 0) {
            if (j == 0) {
                b.comps.push_back({});
                b.offset.push_back(0);
                b.total = 1;
            }
            return b;
        }
        if (j < i) return b;
        std::vector<uint32_t> comp(i, 1);
        comp[i - 1] = j - (i - 1);
        // enumerate all compositions in lex order
        std::vector<uint32_t> cur(i, 1);
        std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t pos, uint32_t left) {
            if (pos + 1 == i) {
                cur[pos] = left;
                b.comps.push_back(cur);
                return;
            }
            for (uint32_t v = 1; v + (i - pos - 1) <= left; ++v) {
                cur[pos] = v;
                rec(pos + 1, left - v);
            }
        };
        rec(0, j);
        b.offset.resize(b.comps.size());
        for (size_t k = 0; k < b.comps.size(); ++k) {
            b.offset[k] = b.total;
            b.comp_index[b.comps[k]] = k;
            uint64_t block = 1;
            for (uint32_t a : b.comps[k]) block *= view.dim(a);
            b.total += block;
        }
        return b;
    };

    std::map<std::pair<uint32_t, uint32_t>, SliceBasis> bases;
    auto basis_of = [&](uint32_t i, uint32_t j) -> SliceBasis& {
        auto key = std::make_pair(i, j);
        auto it = bases.find(key);
        if (it == bases.end()) it = bases.emplace(key, build_basis(i, j)).first;
        return it->second;
    };

    // rank of d_i : C_{i,j} -> C_{i-1,j}
    std::map<std::pair<uint32_t, uint32_t>, int64_t> rank_cache;
    auto rank_of = [&](uint32_t i, uint32_t j) -> int64_t {
        if (i <= 1) return 0;  // d_1 is the zero map on the normalized complex
        auto key = std::make_pair(i, j);
        auto it = rank_cache.find(key);
        if (it != rank_cache.end()) return it->second;
        SliceBasis& src = basis_of(i, j);
        SliceBasis& dst = basis_of(i - 1, j);
        int64_t rank = -1;
        if (src.total == 0) {
            rank = 0;
        } else if (slice_cap == 0 || (src.total <= slice_cap && dst.total <= slice_cap)) {
            RankAcc acc(f);
            std::vector<uint32_t> tuple;
            for (size_t ck = 0; ck < src.comps.size(); ++ck) {
                const auto& comp = src.comps[ck];
                std::vector<uint64_t> radix(comp.size());
                for (size_t t = 0; t < comp.size(); ++t) radix[t] = view.dim(comp[t]);
                tuple.assign(comp.size(), 0);
                bool done = false;
                while (!done) {
                    SparseVec row;
                    for (uint32_t k = 0; k + 1 < comp.size(); ++k) {
                        std::vector<uint32_t> tcomp;
                        tcomp.reserve(comp.size() - 1);
                        for (uint32_t t = 0; t < comp.size(); ++t) {
                            if (t == k) tcomp.push_back(comp[k] + comp[k + 1]);
                            else if (t != k + 1) tcomp.push_back(comp[t]);
                        }
                        size_t tci = dst.comp_index.at(tcomp);
                        SparseVec prod =
                            view.mul_basis(comp[k], tuple[k], comp[k + 1], tuple[k + 1]);
                        Scalar sign = (k % 2) ? -Scalar::one(f) : Scalar::one(f);
                        for (const auto& pe : prod) {
                            uint64_t idx = 0;
                            for (uint32_t t = 0; t < tcomp.size(); ++t) {
                                uint64_t digit;
                                if (t < k) digit = tuple[t];
                                else if (t == k) digit = pe.col;
                                else digit = tuple[t + 1];
                                idx = idx * view.dim(tcomp[t]) + digit;
                            }
                            SparseVec term{{dst.offset[tci] + idx, sign * pe.c}};
                            axpy(row, Scalar::one(f), term);
                        }
                    }
                    acc.add(std::move(row));
                    // odometer
                    done = true;
                    for (size_t t = comp.size(); t-- > 0;) {
                        if (++tuple[t] < radix[t]) {
                            done = false;
                            break;
                        }
                        tuple[t] = 0;
                    }
                }
            }
            rank = static_cast<int64_t>(acc.rank());
        }
        rank_cache.emplace(key, rank);
        return rank;
    };

    for (uint32_t i = 0; i <= i_max; ++i) {
        for (uint32_t j = 0; j <= j_max; ++j) {
            SliceBasis& here = basis_of(i, j);
            int64_t r_in = rank_of(i + 1, j);
            int64_t r_out = rank_of(i, j);
            if (here.total > 0 && slice_cap != 0 && here.total > slice_cap) continue;
            if (r_in < 0 || r_out < 0) continue;
            table.value[i][j] = static_cast<int64_t>(here.total) - r_out - r_in;
        }
    }
    return table;
}

bool n_differential_check(AlgebraView& view, AlgebraView& dual, uint32_t up_to) {
    Field f = view.field();
    uint32_t d = view.dim_v();
    uint32_t N = view.N();
    auto apply_d = [&](uint32_t degA, uint32_t m, const SparseVec& v) {
        uint64_t lo_dim = dual.dim(m - 1);
        SparseVec out;
        for (const auto& e : v) {
            uint64_t a_idx = e.col / dual.dim(m);
            uint32_t h = static_cast<uint32_t>(e.col % dual.dim(m));
            for (uint32_t t = 0; t < d; ++t) {
                SparseVec ae = view.mul_gen(degA, static_cast<uint32_t>(a_idx), t);
                if (ae.empty()) continue;
                for (uint32_t fidx = 0; fidx < lo_dim; ++fidx) {
                    Scalar c = coeff_at(dual.lmul_gen(t, m - 1, fidx), h, f);
                    if (c.is_zero()) continue;
                    for (const auto& ea : ae) {
                        SparseVec term{{ea.col * lo_dim + fidx, ea.c * c * e.c}};
                        axpy(out, Scalar::one(f), term);
                    }
                }
            }
        }
        return out;
    };
    for (uint32_t j = 0; j <= up_to; ++j) {
        for (uint32_t m = N; m <= j; ++m) {
            if (dual.dim(m) == 0) continue;
            uint32_t degA = j - m;
            uint64_t total = view.dim(degA) * dual.dim(m);
            for (uint64_t r = 0; r < total; ++r) {
                SparseVec v{{r, Scalar::one(f)}};
                uint32_t da = degA, dm = m;
                for (uint32_t s = 0; s < N && !v.empty(); ++s) {
                    v = apply_d(da, dm, v);
                    ++da;
                    --dm;
                }
                if (!v.empty()) return false;
            }
        }
    }
    return true;
}

}  // namespace nha
