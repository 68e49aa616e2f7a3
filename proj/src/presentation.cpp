#include "nha/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nha {

MonomialOrder MonomialOrder::identity(uint32_t alphabet) {
    MonomialOrder o;
    o.rank.resize(alphabet);
    std::iota(o.rank.begin(), o.rank.end(), 0u);
    o.unrank = o.rank;
    return o;
}

MonomialOrder MonomialOrder::reversed(uint32_t alphabet) {
    MonomialOrder o;
    o.rank.resize(alphabet);
    for (uint32_t i = 0; i < alphabet; ++i) o.rank[i] = alphabet - 1 - i;
    o.unrank = o.rank;  // self-inverse
    return o;
}

MonomialOrder MonomialOrder::from_ranks(std::vector<uint32_t> ranks) {
    MonomialOrder o;
    o.unrank.assign(ranks.size(), 0);
    std::vector<bool> seen(ranks.size(), false);
    for (uint32_t i = 0; i < ranks.size(); ++i) {
        if (ranks[i] >= ranks.size() || seen[ranks[i]])
            throw std::invalid_argument("monomial order ranks must be a permutation");
        seen[ranks[i]] = true;
        o.unrank[ranks[i]] = i;
    }
    o.rank = std::move(ranks);
    return o;
}

bool MonomialOrder::is_identity() const {
    for (uint32_t i = 0; i < rank.size(); ++i)
        if (rank[i] != i) return false;
    return true;
}

uint64_t MonomialOrder::remap_word(const WordSpace& ws, uint64_t word) const {
    if (is_identity()) return word;
    uint64_t out = 0, base = 1;
    for (uint32_t k = 0; k < ws.degree; ++k) {
        out += static_cast<uint64_t>(rank[word % ws.alphabet]) * base;
        word /= ws.alphabet;
        base *= ws.alphabet;
    }
    return out;
}

uint64_t MonomialOrder::unremap_word(const WordSpace& ws, uint64_t word) const {
    if (is_identity()) return word;
    uint64_t out = 0, base = 1;
    for (uint32_t k = 0; k < ws.degree; ++k) {
        out += static_cast<uint64_t>(unrank[word % ws.alphabet]) * base;
        word /= ws.alphabet;
        base *= ws.alphabet;
    }
    return out;
}

Presentation::Presentation(Field f, std::vector<std::string> generator_names, uint32_t degree_n,
                           std::vector<SparseVec> relation_vectors, MonomialOrder order)
    : field_(f),
      generators_(std::move(generator_names)),
      degree_(degree_n),
      relations_(WordSpace(std::max<uint32_t>(1, static_cast<uint32_t>(generators_.size())),
                           degree_n),
                 f),
      original_(relation_vectors),
      order_(std::move(order)) {
    if (generators_.empty()) throw std::invalid_argument("presentation needs generators");
    if (degree_ < 2) throw std::invalid_argument("relation degree N must be >= 2");
    WordSpace ws = word_space(degree_);
    for (const auto& v : relation_vectors)
        for (const auto& e : v)
            if (e.col >= ws.dim())
                throw std::invalid_argument("relation vector outside V^{(x)N}");
    relations_ = Subspace::span(ws, f, std::move(relation_vectors));
    if (order_.rank.empty()) order_ = MonomialOrder::identity(dim_v());
    if (order_.alphabet() != dim_v())
        throw std::invalid_argument("monomial order alphabet mismatch");
}

Presentation Presentation::dual() const {
    std::vector<std::string> names;
    names.reserve(generators_.size());
    for (const auto& g : generators_) names.push_back(g + "*");
    Subspace perp = relations_.annihilator();
    std::vector<SparseVec> rels(perp.basis().begin(), perp.basis().end());
    return Presentation(field_, std::move(names), degree_, std::move(rels),
                        MonomialOrder::reversed(dim_v()));
}

Presentation Presentation::manin(const Presentation& a, const Presentation& b, bool circle) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("Manin product requires equal relation degrees");
    if (!(a.field() == b.field())) throw std::invalid_argument("Manin product field mismatch");
    uint32_t n = a.degree();
    uint32_t da = a.dim_v(), db = b.dim_v();
    std::vector<std::string> names;
    for (const auto& ga : a.generators())
        for (const auto& gb : b.generators()) names.push_back(ga + "." + gb);

    WordSpace wa = a.word_space(n), wb = b.word_space(n);
    // z-word of the interleaved pair of words
    auto interleave = [&](uint64_t u, uint64_t v) {
        uint64_t out = 0;
        for (uint32_t k = 0; k < n; ++k) {
            uint32_t la = wa.letter_at(u, k), lb = wb.letter_at(v, k);
            out = out * (da * db) + (static_cast<uint64_t>(la) * db + lb);
        }
        return out;
    };
    auto tensor = [&](const SparseVec& ra, const SparseVec& rb) {
        SparseVec out;
        out.reserve(ra.size() * rb.size());
        for (const auto& ea : ra)
            for (const auto& eb : rb) out.push_back({interleave(ea.col, eb.col), ea.c * eb.c});
        std::sort(out.begin(), out.end(),
                  [](const Entry& x, const Entry& y) { return x.col < y.col; });
        return out;
    };

    Field f = a.field();
    std::vector<SparseVec> rels;
    if (circle) {
        for (const auto& ra : a.relations().basis())
            for (uint64_t v = 0; v < wb.dim(); ++v) rels.push_back(tensor(ra, unit_vec(f, v)));
        for (uint64_t u = 0; u < wa.dim(); ++u)
            for (const auto& rb : b.relations().basis()) rels.push_back(tensor(unit_vec(f, u), rb));
    } else {
        for (const auto& ra : a.relations().basis())
            for (const auto& rb : b.relations().basis()) rels.push_back(tensor(ra, rb));
    }
    return Presentation(f, std::move(names), n, std::move(rels));
}

Presentation Presentation::polynomial(Field f, uint32_t n) {
    if (n == 0) throw std::invalid_argument("polynomial preset needs n >= 1");
    std::vector<std::string> names;
    for (uint32_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    WordSpace ws(n, 2);
    std::vector<SparseVec> rels;
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j) {
            SparseVec v;
            uint32_t w1[2] = {i, j}, w2[2] = {j, i};
            v.push_back({ws.index_of(w1), Scalar::one(f)});
            v.push_back({ws.index_of(w2), -Scalar::one(f)});
            std::sort(v.begin(), v.end(),
                      [](const Entry& x, const Entry& y) { return x.col < y.col; });
            rels.push_back(std::move(v));
        }
    return Presentation(f, std::move(names), 2, std::move(rels));
}

Presentation Presentation::free_algebra(Field f, uint32_t n, uint32_t degree_n) {
    if (n == 0) throw std::invalid_argument("free preset needs n >= 1");
    std::vector<std::string> names;
    for (uint32_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return Presentation(f, std::move(names), degree_n, {});
}

Presentation Presentation::example59(Field f, uint32_t n) {
    if (n < 2) throw std::invalid_argument("example59 preset needs n >= 2");
    std::vector<std::string> names;
    for (uint32_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    WordSpace ws(n, 2);
    SparseVec v;
    for (uint32_t k = 0; k + 1 < n; ++k) {
        uint32_t w[2] = {k, k + 1};
        v.push_back({ws.index_of(w), Scalar::one(f)});
    }
    uint32_t wn1[2] = {n - 1, 0};
    v.push_back({ws.index_of(wn1), -Scalar::one(f)});
    std::sort(v.begin(), v.end(), [](const Entry& x, const Entry& y) { return x.col < y.col; });
    return Presentation(f, std::move(names), 2, {std::move(v)});
}

Presentation Presentation::antisymmetrizer(Field f, uint32_t degree_n, uint32_t n) {
    if (degree_n < 2 || n < degree_n)
        throw std::invalid_argument("antisymmetrizer preset needs n >= N >= 2");
    std::vector<std::string> names;
    for (uint32_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    WordSpace ws(n, degree_n);
    std::vector<SparseVec> rels;
    // one relation per 1 <= i_1 < ... < i_N <= n
    std::vector<uint32_t> comb(degree_n);
    std::iota(comb.begin(), comb.end(), 0u);
    auto next_comb = [&]() {
        for (uint32_t k = degree_n; k-- > 0;) {
            if (comb[k] + (degree_n - k) <= n - 1) {
                ++comb[k];
                for (uint32_t l = k + 1; l < degree_n; ++l) comb[l] = comb[l - 1] + 1;
                return true;
            }
        }
        return false;
    };
    do {
        std::vector<uint32_t> perm = comb;
        SparseVec v;
        do {
            // sign = parity of the permutation sorting perm
            uint32_t inversions = 0;
            for (uint32_t x = 0; x < degree_n; ++x)
                for (uint32_t y = x + 1; y < degree_n; ++y)
                    if (perm[x] > perm[y]) ++inversions;
            Scalar c = (inversions % 2) ? -Scalar::one(f) : Scalar::one(f);
            v.push_back({ws.index_of(perm), c});
        } while (std::next_permutation(perm.begin(), perm.end()));
        std::sort(v.begin(), v.end(), [](const Entry& x, const Entry& y) { return x.col < y.col; });
        rels.push_back(std::move(v));
    } while (next_comb());
    return Presentation(f, std::move(names), degree_n, std::move(rels));
}

Presentation Presentation::monomial_cubic_x1(Field f) {
    WordSpace ws(2, 3);
    uint32_t w[3] = {0, 0, 0};
    SparseVec v{{ws.index_of(w), Scalar::one(f)}};
    return Presentation(f, {"x1", "x2"}, 3, {std::move(v)});
}

}  // namespace nha
