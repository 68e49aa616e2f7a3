#pragma once

#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "nha/presentation.hpp"

namespace nha {

/// A rewriting rule: the order-leading degree-N word rewrites to a vector
/// supported on strictly smaller words.
struct RewriteRule {
    uint64_t lead;
    SparseVec tail;
};

/// The inter-reduced rewriting system of a presentation relative to a
/// monomial order: one rule per relation, leads pairwise distinct.
class RewriteSystem {
public:
    RewriteSystem(const Presentation& p, const MonomialOrder& order);

    const std::vector<RewriteRule>& rules() const { return rules_; }
    bool is_lead(uint64_t word) const { return lead_to_rule_.count(word) != 0; }
    const RewriteRule& rule_for(uint64_t word) const { return rules_[lead_to_rule_.at(word)]; }

    uint32_t alphabet() const { return alphabet_; }
    uint32_t degree() const { return degree_; }
    Field field() const { return field_; }

    /// True iff no degree-N factor of the word is a lead.
    bool word_irreducible(uint32_t m, uint64_t word) const;

    /// Full normal form of a word by leftmost-factor rewriting (memoized).
    const SparseVec& normal_form_word(uint32_t m, uint64_t word);
    SparseVec normal_form(uint32_t m, const SparseVec& v);

    struct OverlapWitness {
        uint64_t word;
        uint32_t length;
    };

    /// First overlap ambiguity whose two reductions disagree, if any.
    std::optional<OverlapWitness> unresolved_overlap();
    bool confluent();

private:
    Field field_;
    uint32_t alphabet_;
    uint32_t degree_;
    std::vector<RewriteRule> rules_;
    std::unordered_map<uint64_t, size_t> lead_to_rule_;
    std::vector<std::unordered_map<uint64_t, SparseVec>> memo_;
    std::optional<bool> confluent_;
    std::optional<OverlapWitness> witness_;
};

}  // namespace nha
