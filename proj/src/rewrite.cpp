#include "nha/rewrite.hpp"

#include <algorithm>

namespace nha {

RewriteSystem::RewriteSystem(const Presentation& p, const MonomialOrder& order)
    : field_(p.field()), alphabet_(p.dim_v()), degree_(p.degree()) {
    WordSpace ws = p.word_space(degree_);
    // Inter-reduce: echelon over order-remapped columns, greatest word as pivot.
    Rref ech(field_, /*pivot_low=*/false);
    for (const auto& row : p.relations().basis()) {
        SparseVec remapped;
        remapped.reserve(row.size());
        for (const auto& e : row) remapped.push_back({order.remap_word(ws, e.col), e.c});
        std::sort(remapped.begin(), remapped.end(),
                  [](const Entry& x, const Entry& y) { return x.col < y.col; });
        ech.insert(std::move(remapped));
    }
    ech.finalize();
    for (size_t k = 0; k < ech.rows().size(); ++k) {
        const SparseVec& row = ech.rows()[k];
        RewriteRule rule;
        rule.lead = order.unremap_word(ws, row.back().col);
        for (size_t t = 0; t + 1 < row.size(); ++t)
            rule.tail.push_back({order.unremap_word(ws, row[t].col), -row[t].c});
        std::sort(rule.tail.begin(), rule.tail.end(),
                  [](const Entry& x, const Entry& y) { return x.col < y.col; });
        rules_.push_back(std::move(rule));
    }
    std::sort(rules_.begin(), rules_.end(),
              [](const RewriteRule& a, const RewriteRule& b) { return a.lead < b.lead; });
    for (size_t k = 0; k < rules_.size(); ++k) lead_to_rule_[rules_[k].lead] = k;
}

bool RewriteSystem::word_irreducible(uint32_t m, uint64_t word) const {
    if (m < degree_ || rules_.empty()) return true;
    uint64_t window = pow_u64(alphabet_, degree_);
    uint64_t w = word;
    for (uint32_t pos = m - degree_ + 1; pos-- > 0;) {
        if (is_lead(w % window)) return false;
        w /= alphabet_;
    }
    return true;
}

const SparseVec& RewriteSystem::normal_form_word(uint32_t m, uint64_t word) {
    if (memo_.size() <= m) memo_.resize(m + 1);
    auto it = memo_[m].find(word);
    if (it != memo_[m].end()) return it->second;

    SparseVec result;
    uint64_t window = pow_u64(alphabet_, degree_);
    // leftmost lead factor
    int64_t at = -1;
    if (m >= degree_) {
        uint64_t w = word;
        for (int64_t pos = static_cast<int64_t>(m) - degree_; pos >= 0; --pos) {
            if (is_lead(w % window)) at = pos;
            w /= alphabet_;
        }
    }
    if (at < 0) {
        result = unit_vec(field_, word);
    } else {
        uint64_t suffix_len = m - degree_ - static_cast<uint64_t>(at);
        uint64_t suffix_dim = pow_u64(alphabet_, static_cast<uint32_t>(suffix_len));
        uint64_t suffix = word % suffix_dim;
        uint64_t rest = word / suffix_dim;
        uint64_t lead = rest % window;
        uint64_t prefix = rest / window;
        const RewriteRule& rule = rule_for(lead);
        for (const auto& t : rule.tail) {
            uint64_t replaced = (prefix * window + t.col) * suffix_dim + suffix;
            axpy(result, t.c, normal_form_word(m, replaced));
        }
    }
    auto [pos, ok] = memo_[m].emplace(word, std::move(result));
    return pos->second;
}

SparseVec RewriteSystem::normal_form(uint32_t m, const SparseVec& v) {
    SparseVec out;
    for (const auto& e : v) axpy(out, e.c, normal_form_word(m, e.col));
    return out;
}

std::optional<RewriteSystem::OverlapWitness> RewriteSystem::unresolved_overlap() {
    if (confluent_.has_value()) return witness_;
    uint64_t window = pow_u64(alphabet_, degree_);
    // An ambiguity is a word of length 2N-k whose first and last N letters are
    // both leads, overlapping in k letters.  Short words first.
    for (uint32_t k = degree_ - 1; k >= 1; --k) {
        uint32_t len = 2 * degree_ - k;
        uint64_t tail_dim = pow_u64(alphabet_, degree_ - k);
        uint64_t head_dim = pow_u64(alphabet_, k);
        for (const auto& r1 : rules_) {
            for (const auto& r2 : rules_) {
                if (r1.lead % head_dim != r2.lead / tail_dim) continue;
                uint64_t suffix = r2.lead % tail_dim;   // last N-k letters
                uint64_t prefix = r1.lead / head_dim;   // first N-k letters
                uint64_t word = r1.lead * tail_dim + suffix;
                SparseVec v1, v2;
                for (const auto& t : r1.tail) v1.push_back({t.col * tail_dim + suffix, t.c});
                for (const auto& t : r2.tail) v2.push_back({prefix * window + t.col, t.c});
                std::sort(v1.begin(), v1.end(),
                          [](const Entry& x, const Entry& y) { return x.col < y.col; });
                std::sort(v2.begin(), v2.end(),
                          [](const Entry& x, const Entry& y) { return x.col < y.col; });
                SparseVec n1 = normal_form(len, v1);
                SparseVec n2 = normal_form(len, v2);
                if (!sparse_equal(n1, n2)) {
                    witness_ = OverlapWitness{word, len};
                    confluent_ = false;
                    return witness_;
                }
            }
        }
    }
    confluent_ = true;
    witness_.reset();
    return witness_;
}

bool RewriteSystem::confluent() {
    unresolved_overlap();
    return confluent_.value();
}

}  // namespace nha
