#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "quadpoint/errors.hpp"

namespace quadpoint {

// Vector over GF(2), packed 64 coordinates per word.  Coordinate i lives in
// word i/64 at bit i%64; bits past dim() are kept zero so whole-word equality
// and parity tricks stay valid.
class BitVec {
public:
    BitVec() : dim_(0) {}

    explicit BitVec(std::size_t dim) : dim_(dim), words_((dim + 63) / 64, 0) {}

    static BitVec unit(std::size_t dim, std::size_t i) {
        BitVec v(dim);
        v.set(i, true);
        return v;
    }

    // Parses a string of '0'/'1' characters, one per coordinate.
    static BitVec from_string(std::string_view s) {
        BitVec v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1') {
                v.set(i, true);
            } else if (s[i] != '0') {
                throw ParseError("bit string may contain only '0' and '1'");
            }
        }
        return v;
    }

    std::size_t dim() const noexcept { return dim_; }

    bool get(std::size_t i) const {
        check_index(i);
        return (words_[i / 64] >> (i % 64)) & 1u;
    }

    void set(std::size_t i, bool value) {
        check_index(i);
        const std::uint64_t mask = std::uint64_t{1} << (i % 64);
        if (value) {
            words_[i / 64] |= mask;
        } else {
            words_[i / 64] &= ~mask;
        }
    }

    bool is_zero() const noexcept {
        for (std::uint64_t w : words_) {
            if (w != 0) return false;
        }
        return true;
    }

    // Index of the first set coordinate, or dim() if none.
    std::size_t leading_bit() const noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w] != 0) {
                return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
            }
        }
        return dim_;
    }

    std::size_t popcount() const noexcept {
        std::size_t n = 0;
        for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    BitVec& operator^=(const BitVec& other) {
        if (other.dim_ != dim_) throw DimensionMismatch("xor of vectors of unequal dimension");
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec& b) {
        a ^= b;
        return a;
    }

    // Parity of the coordinatewise product, i.e. the standard dot product.
    bool dot(const BitVec& other) const {
        if (other.dim_ != dim_) throw DimensionMismatch("dot of vectors of unequal dimension");
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
        return std::popcount(acc) & 1u;
    }

    bool operator==(const BitVec& other) const = default;

    std::string to_string() const {
        std::string s(dim_, '0');
        for (std::size_t i = 0; i < dim_; ++i) {
            if (get(i)) s[i] = '1';
        }
        return s;
    }

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }
    std::vector<std::uint64_t>& words() noexcept { return words_; }

private:
    void check_index(std::size_t i) const {
        if (i >= dim_) throw DimensionMismatch("coordinate index out of range");
    }

    std::size_t dim_;
    std::vector<std::uint64_t> words_;
};

}  // namespace quadpoint
