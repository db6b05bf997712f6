#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quadpoint/bitvec.hpp"
#include "quadpoint/errors.hpp"

namespace quadpoint {

// Dense matrix over GF(2), row-major, each row packed 64 columns per word.
// Rows act on column vectors: apply(v) computes M*v.  Padding bits beyond
// cols() are zero, so rows can be combined and compared word by word.
class BitMat {
public:
    BitMat() : rows_(0), cols_(0), stride_(0) {}

    BitMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + 63) / 64), words_(rows * stride_, 0) {}

    static BitMat identity(std::size_t n) {
        BitMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    static BitMat from_rows(std::size_t cols, const std::vector<BitVec>& rows) {
        BitMat m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
        return m;
    }

    // Parses one '0'/'1' string per row; all rows must have equal length.
    static BitMat from_strings(const std::vector<std::string>& rows) {
        if (rows.empty()) return BitMat(0, 0);
        BitMat m(rows.size(), rows[0].size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.cols_) throw ParseError("matrix rows of unequal length");
            m.set_row(r, BitVec::from_string(rows[r]));
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        check(r, c);
        return (words_[r * stride_ + c / 64] >> (c % 64)) & 1u;
    }

    void set(std::size_t r, std::size_t c, bool value) {
        check(r, c);
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        if (value) {
            words_[r * stride_ + c / 64] |= mask;
        } else {
            words_[r * stride_ + c / 64] &= ~mask;
        }
    }

    BitVec row_vec(std::size_t r) const {
        check_row(r);
        BitVec v(cols_);
        for (std::size_t w = 0; w < stride_; ++w) v.words()[w] = words_[r * stride_ + w];
        return v;
    }

    void set_row(std::size_t r, const BitVec& v) {
        check_row(r);
        if (v.dim() != cols_) throw DimensionMismatch("row of wrong length");
        for (std::size_t w = 0; w < stride_; ++w) words_[r * stride_ + w] = v.words()[w];
    }

    void xor_rows(std::size_t dst, std::size_t src) {
        check_row(dst);
        check_row(src);
        std::uint64_t* d = words_.data() + dst * stride_;
        const std::uint64_t* s = words_.data() + src * stride_;
        for (std::size_t w = 0; w < stride_; ++w) d[w] ^= s[w];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        check_row(a);
        check_row(b);
        if (a == b) return;
        std::uint64_t* pa = words_.data() + a * stride_;
        std::uint64_t* pb = words_.data() + b * stride_;
        for (std::size_t w = 0; w < stride_; ++w) std::swap(pa[w], pb[w]);
    }

    bool row_is_zero(std::size_t r) const {
        check_row(r);
        for (std::size_t w = 0; w < stride_; ++w) {
            if (words_[r * stride_ + w] != 0) return false;
        }
        return true;
    }

    // First set column in row r, or cols() if the row is zero.
    std::size_t row_leading(std::size_t r) const {
        check_row(r);
        for (std::size_t w = 0; w < stride_; ++w) {
            const std::uint64_t word = words_[r * stride_ + w];
            if (word != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        }
        return cols_;
    }

    BitMat operator*(const BitMat& other) const {
        if (cols_ != other.rows_) throw DimensionMismatch("matrix product shape mismatch");
        BitMat out(rows_, other.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            std::uint64_t* dst = out.words_.data() + i * out.stride_;
            for (std::size_t w = 0; w < stride_; ++w) {
                std::uint64_t word = words_[i * stride_ + w];
                while (word != 0) {
                    const std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
                    word &= word - 1;
                    const std::uint64_t* src = other.words_.data() + k * other.stride_;
                    for (std::size_t v = 0; v < other.stride_; ++v) dst[v] ^= src[v];
                }
            }
        }
        return out;
    }

    // M*v with v a column vector of dimension cols().
    BitVec apply(const BitVec& v) const {
        if (v.dim() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
        BitVec out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            std::uint64_t acc = 0;
            const std::uint64_t* p = words_.data() + r * stride_;
            for (std::size_t w = 0; w < stride_; ++w) acc ^= p[w] & v.words()[w];
            if (std::popcount(acc) & 1u) out.set(r, true);
        }
        return out;
    }

    BitMat& operator^=(const BitMat& other) {
        if (rows_ != other.rows_ || cols_ != other.cols_) {
            throw DimensionMismatch("xor of matrices of unequal shape");
        }
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }

    friend BitMat operator^(BitMat a, const BitMat& b) {
        a ^= b;
        return a;
    }

    BitMat transposed() const {
        BitMat out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t w = 0; w < stride_; ++w) {
                std::uint64_t word = words_[r * stride_ + w];
                while (word != 0) {
                    const std::size_t c = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
                    word &= word - 1;
                    out.set(c, r, true);
                }
            }
        }
        return out;
    }

    bool operator==(const BitMat& other) const = default;

    std::vector<std::string> to_strings() const {
        std::vector<std::string> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vec(r).to_string());
        return out;
    }

private:
    void check(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
    }
    void check_row(std::size_t r) const {
        if (r >= rows_) throw DimensionMismatch("matrix row index out of range");
    }

    std::size_t rows_, cols_, stride_;
    std::vector<std::uint64_t> words_;
};

struct RrefResult {
    BitMat mat;
    std::size_t rank;
};

// Reduced row echelon form.  Pivots are chosen at the lowest available column,
// scanning rows top-down, and pivot columns are cleared above and below, so the
// result depends only on the row space.  Zero rows sink to the bottom.
inline RrefResult rref(BitMat m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i) {
            if (m.get(i, c)) {
                pivot = i;
                break;
            }
        }
        if (pivot == m.rows()) continue;
        m.swap_rows(pivot, r);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i != r && m.get(i, c)) m.xor_rows(i, r);
        }
        ++r;
    }
    return {std::move(m), r};
}

inline std::size_t rank(const BitMat& m) { return rref(m).rank; }

// Inverse of a square matrix, by eliminating the augmented block [m | I].
inline BitMat invert(const BitMat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("only square matrices can be inverted");
    const std::size_t n = m.rows();
    BitMat aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (m.get(r, c)) aug.set(r, c, true);
        }
        aug.set(r, n + r, true);
    }
    RrefResult red = rref(std::move(aug));
    // Invertible exactly when the left block reduces to the identity; pivots
    // falling into the right block betray a rank deficit.
    for (std::size_t r = 0; r < n; ++r) {
        if (red.rank <= r || red.mat.row_leading(r) != r) {
            throw SingularMatrix("matrix is not invertible");
        }
    }
    BitMat out(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (red.mat.get(r, n + c)) out.set(r, c, true);
        }
    }
    return out;
}

// One solution x of a*x = b with all free variables set to zero, or nullopt
// when the system is inconsistent.
inline std::optional<BitVec> solve(const BitMat& a, const BitVec& b) {
    if (b.dim() != a.rows()) throw DimensionMismatch("right-hand side of wrong length");
    const std::size_t n = a.cols();
    BitMat aug(a.rows(), n + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (a.get(r, c)) aug.set(r, c, true);
        }
        if (b.get(r)) aug.set(r, n, true);
    }
    RrefResult red = rref(std::move(aug));
    BitVec x(n);
    for (std::size_t r = 0; r < red.rank; ++r) {
        const std::size_t lead = red.mat.row_leading(r);
        if (lead == n) return std::nullopt;
        if (red.mat.get(r, n)) x.set(lead, true);
    }
    return x;
}

}  // namespace quadpoint
