#pragma once

#include <string>
#include <vector>

#include "nha/subspace.hpp"

namespace nha {

/// Degree-lexicographic monomial order given by a ranking of the letters
/// (lower rank = smaller letter).  On equal-length words this is integer
/// comparison of the rank-remapped word index.
struct MonomialOrder {
    std::vector<uint32_t> rank;      // rank[letter]
    std::vector<uint32_t> unrank;    // inverse permutation

    static MonomialOrder identity(uint32_t alphabet);
    static MonomialOrder reversed(uint32_t alphabet);
    static MonomialOrder from_ranks(std::vector<uint32_t> ranks);

    uint32_t alphabet() const { return static_cast<uint32_t>(rank.size()); }
    bool is_identity() const;

    uint64_t remap_word(const WordSpace& ws, uint64_t word) const;
    uint64_t unremap_word(const WordSpace& ws, uint64_t word) const;
    bool less(const WordSpace& ws, uint64_t a, uint64_t b) const {
        return remap_word(ws, a) < remap_word(ws, b);
    }
};

/// An N-homogeneous algebra presentation: the single source of truth for A.
/// Relations are stored row-reduced; the original relation list is retained
/// for reporting only.
class Presentation {
public:
    Presentation(Field f, std::vector<std::string> generator_names, uint32_t degree_n,
                 std::vector<SparseVec> relation_vectors,
                 MonomialOrder order = MonomialOrder{});

    Field field() const { return field_; }
    const std::vector<std::string>& generators() const { return generators_; }
    uint32_t dim_v() const { return static_cast<uint32_t>(generators_.size()); }
    uint32_t degree() const { return degree_; }  // N
    const Subspace& relations() const { return relations_; }
    const std::vector<SparseVec>& original_relations() const { return original_; }
    const MonomialOrder& order() const { return order_; }

    WordSpace word_space(uint32_t n) const { return WordSpace(dim_v(), n); }

    /// A^! on the starred dual generators with R^perp as relations; normal
    /// forms there are taken over the reversed letter order so that
    /// decreasing words are preferred.
    Presentation dual() const;

    /// Manin products on V (x) V', interleaving (v1..vN, v1'..vN') to
    /// (v1v1', ..., vNvN').  circle: R(x)V'^N + V^N(x)R'; bullet: R(x)R'.
    static Presentation manin(const Presentation& a, const Presentation& b, bool circle);

    // Preset families.
    static Presentation polynomial(Field f, uint32_t n);
    static Presentation free_algebra(Field f, uint32_t n, uint32_t degree_n);
    static Presentation example59(Field f, uint32_t n);
    static Presentation antisymmetrizer(Field f, uint32_t degree_n, uint32_t n);
    static Presentation monomial_cubic_x1(Field f);

private:
    Field field_;
    std::vector<std::string> generators_;
    uint32_t degree_;
    Subspace relations_;
    std::vector<SparseVec> original_;
    MonomialOrder order_;
};

}  // namespace nha
