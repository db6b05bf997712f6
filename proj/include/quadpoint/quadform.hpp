#pragma once

#include <cstddef>
#include <string>

#include "quadpoint/bitmat.hpp"
#include "quadpoint/errors.hpp"
#include "quadpoint/subspace.hpp"

namespace quadpoint {

// Quadratic form g on GF(2)^(2n) with non-degenerate polar form
// B(x,y) = g(x+y) + g(x) + g(y).  Stored as the gram matrix of B together with
// the values of g on the reference basis; these determine g everywhere:
//
//   g(sum c_i e_i) = sum c_i g(e_i) + sum_{i<j} c_i c_j B(e_i, e_j).
//
// The gram matrix must be symmetric with zero diagonal (B is alternating) and
// invertible.  Forms of every Arf class are representable; whether a totally
// singular decomposition exists is a property probed later, not here.
class QuadForm {
public:
    QuadForm(BitMat gram, BitVec diag) : gram_(std::move(gram)), diag_(std::move(diag)) {
        const std::size_t d = gram_.rows();
        check_ambient_dim(d);
        if (gram_.cols() != d) throw DimensionMismatch("gram matrix must be square");
        if (diag_.dim() != d) throw DimensionMismatch("diagonal length must match gram dimension");
        for (std::size_t i = 0; i < d; ++i) {
            if (gram_.get(i, i)) throw DegenerateForm("gram diagonal must be zero");
            for (std::size_t j = i + 1; j < d; ++j) {
                if (gram_.get(i, j) != gram_.get(j, i)) {
                    throw DegenerateForm("gram matrix must be symmetric");
                }
            }
        }
        if (rank(gram_) != d) throw DegenerateForm("gram matrix must be invertible");
    }

    // The hyperbolic form of genus n: basis a_1..a_n, b_1..b_n with
    // B(a_i, b_j) = delta_ij, all basis values zero.
    static QuadForm standard(std::size_t genus) {
        BitMat gram(2 * genus, 2 * genus);
        for (std::size_t i = 0; i < genus; ++i) {
            gram.set(i, genus + i, true);
            gram.set(genus + i, i, true);
        }
        return QuadForm(std::move(gram), BitVec(2 * genus));
    }

    std::size_t dim() const noexcept { return gram_.rows(); }
    std::size_t genus() const noexcept { return dim() / 2; }
    const BitMat& gram() const noexcept { return gram_; }
    const BitVec& diag() const noexcept { return diag_; }

    // g(v), expanded over the set coordinates of v.
    bool evaluate(const BitVec& v) const {
        if (v.dim() != dim()) throw DimensionMismatch("form evaluated outside its space");
        bool acc = diag_.dot(v);
        for (std::size_t i = 0; i < dim(); ++i) {
            if (!v.get(i)) continue;
            // parity of {j > i : v_j = 1 and B(e_i, e_j) = 1}
            std::uint64_t words = 0;
            const BitVec row = gram_.row_vec(i);
            const std::size_t wi = i / 64;
            for (std::size_t w = wi; w < row.words().size(); ++w) {
                std::uint64_t word = row.words()[w] & v.words()[w];
                if (w == wi) word &= ~((std::uint64_t{2} << (i % 64)) - 1);
                words ^= word;
            }
            if (std::popcount(words) & 1u) acc = !acc;
        }
        return acc;
    }

    // B(x, y) = x^T gram y.
    bool bilinear(const BitVec& x, const BitVec& y) const {
        if (x.dim() != dim() || y.dim() != dim()) {
            throw DimensionMismatch("polar form evaluated outside its space");
        }
        return x.dot(gram_.apply(y));
    }

    bool operator==(const QuadForm& other) const = default;

private:
    BitMat gram_;
    BitVec diag_;
};

// True when g vanishes on all of U, i.e. g is zero on a basis and B is zero on
// all basis pairs.
inline bool is_totally_singular(const QuadForm& f, const Subspace& u) {
    if (u.ambient_dim() != f.dim()) {
        throw DimensionMismatch("subspace lives outside the form's space");
    }
    for (std::size_t r = 0; r < u.dim(); ++r) {
        if (f.evaluate(u.basis().row_vec(r))) return false;
    }
    const BitMat pairings = u.basis() * f.gram() * u.basis().transposed();
    return pairings == BitMat(u.dim(), u.dim());
}

// True when m is invertible and preserves both g and B.  Preservation of g on
// the basis plus preservation of B on basis pairs gives preservation of g
// everywhere, by the expansion formula.
inline bool is_orthogonal(const QuadForm& f, const BitMat& m) {
    const std::size_t d = f.dim();
    if (m.rows() != d || m.cols() != d) {
        throw DimensionMismatch("map shape does not match the form");
    }
    if (rank(m) != d) return false;
    if (m.transposed() * f.gram() * m != f.gram()) return false;
    const BitMat mt = m.transposed();
    for (std::size_t i = 0; i < d; ++i) {
        if (f.evaluate(mt.row_vec(i)) != f.diag().get(i)) return false;
    }
    return true;
}

}  // namespace quadpoint
