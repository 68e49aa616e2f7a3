#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace nha {

/// The word space V^{&otimes;n} for an alphabet of dim V letters, with its
/// basis indexed by words.  Encoding is positional base-(dim V), leftmost
/// letter most significant, so concatenation is integer arithmetic.
struct WordSpace {
    uint32_t alphabet = 0;  // dim V
    uint32_t degree = 0;    // n

    WordSpace() = default;
    WordSpace(uint32_t alphabet_size, uint32_t n) : alphabet(alphabet_size), degree(n) {
        if (alphabet_size == 0) throw std::invalid_argument("alphabet must be nonempty");
        dim_ = 1;
        for (uint32_t k = 0; k < n; ++k) {
            if (dim_ > UINT64_MAX / alphabet_size)
                throw std::overflow_error("word space dimension overflow");
            dim_ *= alphabet_size;
        }
    }

    uint64_t dim() const { return dim_; }

    bool operator==(const WordSpace& o) const {
        return alphabet == o.alphabet && degree == o.degree;
    }

    uint64_t index_of(std::span<const uint32_t> word) const {
        if (word.size() != degree) throw std::invalid_argument("word length mismatch");
        uint64_t idx = 0;
        for (uint32_t letter : word) {
            if (letter >= alphabet) throw std::out_of_range("letter out of range");
            idx = idx * alphabet + letter;
        }
        return idx;
    }

    std::vector<uint32_t> word_of(uint64_t idx) const {
        std::vector<uint32_t> w(degree);
        for (uint32_t k = degree; k-- > 0;) {
            w[k] = static_cast<uint32_t>(idx % alphabet);
            idx /= alphabet;
        }
        return w;
    }

    /// Index of the concatenation of a degree-i word and a degree-j word.
    static uint64_t concat(uint64_t left, const WordSpace& right_space, uint64_t right) {
        return left * right_space.dim() + right;
    }

    uint32_t letter_at(uint64_t idx, uint32_t pos) const {
        // positions count from the left, 0-based
        uint64_t q = idx;
        for (uint32_t k = degree - 1; k > pos; --k) q /= alphabet;
        return static_cast<uint32_t>(q % alphabet);
    }

private:
    uint64_t dim_ = 1;
};

inline uint64_t pow_u64(uint64_t b, uint32_t e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace nha
