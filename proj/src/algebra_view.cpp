#include "nha/algebra_view.hpp"

#include <algorithm>
#include <stdexcept>

namespace nha {

AlgebraView::AlgebraView(Presentation p)
    : pres_(std::move(p)), rs_(pres_, pres_.order()), confluent_(rs_.confluent()) {
    WordSpace ws = pres_.word_space(pres_.degree());
    for (const auto& row : pres_.relations().basis()) {
        SparseVec remapped;
        remapped.reserve(row.size());
        for (const auto& e : row) remapped.push_back({pres_.order().remap_word(ws, e.col), e.c});
        std::sort(remapped.begin(), remapped.end(),
                  [](const Entry& x, const Entry& y) { return x.col < y.col; });
        remapped_relations_.push_back(std::move(remapped));
    }
    extend_to(1);
}

void AlgebraView::extend_to(uint32_t m) {
    for (uint32_t k = static_cast<uint32_t>(degs_.size()); k <= m; ++k) build_degree(k);
}

void AlgebraView::build_degree(uint32_t m) {
    Deg deg;
    uint32_t d = dim_v();
    if (m == 0) {
        deg.words = {0};
    } else if (confluent_) {
        // extend irreducible words by one letter; only the new N-suffix needs
        // a lead test, every other factor sits inside the old word
        const auto& prev = degs_[m - 1].words;
        uint64_t window = m >= N() ? pow_u64(d, N()) : 0;
        for (uint64_t w : prev) {
            for (uint32_t g = 0; g < d; ++g) {
                uint64_t ext = w * d + g;
                if (m >= N() && rs_.is_lead(ext % window)) continue;
                deg.words.push_back(ext);
            }
        }
    } else {
        Rref& red = ensure_reducer(m);
        WordSpace ws = pres_.word_space(m);
        std::vector<uint64_t> words;
        words.reserve(ws.dim() - red.rank());
        for (uint64_t c = 0; c < ws.dim(); ++c)
            if (!red.has_pivot(c)) words.push_back(pres_.order().unremap_word(ws, c));
        std::sort(words.begin(), words.end());
        deg.words = std::move(words);
    }
    deg.index.reserve(deg.words.size());
    for (uint32_t k = 0; k < deg.words.size(); ++k) deg.index.emplace(deg.words[k], k);
    degs_.push_back(std::move(deg));
}

Rref& AlgebraView::ensure_reducer(uint32_t m) {
    if (reducers_.size() <= m) reducers_.resize(m + 1);
    if (reducers_[m]) return *reducers_[m];
    Field f = field();
    uint32_t d = dim_v();
    auto red = std::make_unique<Rref>(f, /*pivot_low=*/false);
    if (m >= N()) {
        // I_m = V (x) I_{m-1} + R (x) V^{(x)(m-N)}, rows in remapped columns
        Rref& prev = ensure_reducer(m - 1);
        for (uint64_t g = 0; g < d; ++g) {
            uint64_t off = g * pow_u64(d, m - 1);
            for (const auto& row : prev.rows()) red->insert(shifted(row, 1, off));
        }
        uint64_t right = pow_u64(d, m - N());
        for (const auto& row : remapped_relations_)
            for (uint64_t w2 = 0; w2 < right; ++w2) red->insert(shifted(row, right, w2));
    }
    reducers_[m] = std::move(red);
    return *reducers_[m];
}

uint64_t AlgebraView::dim(uint32_t m) {
    extend_to(m);
    return degs_[m].words.size();
}

const std::vector<uint64_t>& AlgebraView::basis_words(uint32_t m) {
    extend_to(m);
    return degs_[m].words;
}

uint64_t AlgebraView::basis_word(uint32_t m, uint32_t idx) {
    extend_to(m);
    return degs_[m].words[idx];
}

std::optional<uint32_t> AlgebraView::basis_index(uint32_t m, uint64_t word) {
    extend_to(m);
    auto it = degs_[m].index.find(word);
    if (it == degs_[m].index.end()) return std::nullopt;
    return it->second;
}

void AlgebraView::ensure_mul_storage(uint32_t m) {
    Deg& deg = degs_[m];
    if (!deg.mul.empty()) return;
    deg.mul.assign(dim_v(), std::vector<SparseVec>(deg.words.size()));
    deg.known.assign(dim_v(), std::vector<uint8_t>(deg.words.size(), 0));
}

const SparseVec& AlgebraView::mul_gen(uint32_t m, uint32_t a_idx, uint32_t g) {
    extend_to(m + 1);
    ensure_mul_storage(m);
    uint8_t state = degs_[m].known[g][a_idx];
    if (state == 1) return degs_[m].mul[g][a_idx];
    if (state == 2) throw std::logic_error("multiplication table recursion cycle");
    degs_[m].known[g][a_idx] = 2;

    uint32_t d = dim_v();
    uint64_t w = degs_[m].words[a_idx] * d + g;
    SparseVec result;
    if (confluent_) {
        uint64_t window = pow_u64(d, N());
        if (m + 1 < N() || !rs_.is_lead(w % window)) {
            result = unit_vec(field(), degs_[m + 1].index.at(w));
        } else {
            // substitute the lead suffix, then push the tail words back in;
            // every recursive product sits at a strictly smaller word
            uint64_t lead = w % window;
            uint64_t prefix = w / window;
            uint32_t pdeg = m + 1 - N();
            uint32_t p_idx = degs_[pdeg].index.at(prefix);
            const RewriteRule& rule = rs_.rule_for(lead);
            for (const auto& t : rule.tail)
                axpy(result, t.c, chain_apply(pdeg, p_idx, t.col, N()));
        }
    } else {
        result = project_word(m + 1, w);
    }
    degs_[m].mul[g][a_idx] = std::move(result);
    degs_[m].known[g][a_idx] = 1;
    return degs_[m].mul[g][a_idx];
}

SparseVec AlgebraView::chain_apply(uint32_t deg0, uint32_t idx, uint64_t word, uint32_t wdeg) {
    return mul_word(deg0, unit_vec(field(), idx), word, wdeg);
}

SparseVec AlgebraView::mul_word(uint32_t m, SparseVec a, uint64_t word, uint32_t wdeg) {
    uint32_t d = dim_v();
    for (uint32_t k = 0; k < wdeg; ++k) {
        uint32_t g = static_cast<uint32_t>((word / pow_u64(d, wdeg - 1 - k)) % d);
        SparseVec next;
        for (const auto& e : a)
            axpy(next, e.c, mul_gen(m + k, static_cast<uint32_t>(e.col), g));
        a = std::move(next);
        if (a.empty()) break;
    }
    return a;
}

SparseVec AlgebraView::mul_basis(uint32_t m, uint32_t a_idx, uint32_t n, uint32_t b_idx) {
    extend_to(std::max(m, n));
    return mul_word(m, unit_vec(field(), a_idx), degs_[n].words[b_idx], n);
}

SparseVec AlgebraView::mul(uint32_t m, const SparseVec& a, uint32_t n, const SparseVec& b) {
    extend_to(std::max(m, n));
    SparseVec out;
    for (const auto& eb : b) {
        SparseVec term = mul_word(m, scaled(a, eb.c), degs_[n].words[eb.col], n);
        axpy(out, Scalar::one(field()), term);
    }
    return out;
}

SparseVec AlgebraView::lmul_gen(uint32_t g, uint32_t m, uint32_t a_idx) {
    extend_to(m);
    return mul_word(1, unit_vec(field(), g), degs_[m].words[a_idx], m);
}

SparseVec AlgebraView::project_word(uint32_t m, uint64_t word) {
    extend_to(m);
    SparseVec out;
    if (confluent_) {
        const SparseVec& nf = rs_.normal_form_word(m, word);
        out.reserve(nf.size());
        for (const auto& e : nf) out.push_back({degs_[m].index.at(e.col), e.c});
    } else {
        WordSpace ws = pres_.word_space(m);
        Rref& red = ensure_reducer(m);
        SparseVec residual = red.reduce(unit_vec(field(), pres_.order().remap_word(ws, word)));
        out.reserve(residual.size());
        for (const auto& e : residual)
            out.push_back({degs_[m].index.at(pres_.order().unremap_word(ws, e.col)), e.c});
    }
    std::sort(out.begin(), out.end(), [](const Entry& x, const Entry& y) { return x.col < y.col; });
    return out;
}

SparseVec AlgebraView::project(uint32_t m, const SparseVec& word_vec) {
    SparseVec out;
    for (const auto& e : word_vec) axpy(out, e.c, project_word(m, e.col));
    return out;
}

std::vector<uint64_t> AlgebraView::hilbert(uint32_t up_to) {
    std::vector<uint64_t> h;
    h.reserve(up_to + 1);
    for (uint32_t m = 0; m <= up_to; ++m) h.push_back(dim(m));
    return h;
}

uint64_t AlgebraView::ideal_dim(uint32_t m) {
    if (m < N()) return 0;
    return ensure_reducer(m).rank();
}

}  // namespace nha
