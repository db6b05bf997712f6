#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quadpoint/bitmat.hpp"
#include "quadpoint/errors.hpp"

// Largest ambient dimension the subspace and form layers accept.  Raising it is
// a recompile, not a redesign; the algorithms are polynomial in the dimension.
#ifndef QUADPOINT_MAX_DIM
#define QUADPOINT_MAX_DIM 1024
#endif

namespace quadpoint {

inline constexpr std::size_t max_ambient_dim = QUADPOINT_MAX_DIM;

inline void check_ambient_dim(std::size_t dim) {
    if (dim > max_ambient_dim) {
        throw DimensionTooLarge("ambient dimension " + std::to_string(dim) + " exceeds cap " +
                                std::to_string(max_ambient_dim));
    }
}

// Subspace of GF(2)^d, stored as the reduced row echelon basis of its span.
// The stored basis is a canonical function of the subspace, so equality of
// subspaces is plain structural equality.
class Subspace {
public:
    static Subspace zero(std::size_t ambient) {
        return Subspace(ambient, BitMat(0, ambient));
    }

    static Subspace full(std::size_t ambient) {
        return Subspace(ambient, BitMat::identity(ambient));
    }

    // Span of the rows of `spanning`; dependent and zero rows are dropped.
    static Subspace span_of(const BitMat& spanning) {
        RrefResult red = rref(spanning);
        BitMat basis(red.rank, spanning.cols());
        for (std::size_t r = 0; r < red.rank; ++r) basis.set_row(r, red.mat.row_vec(r));
        return Subspace(spanning.cols(), std::move(basis));
    }

    static Subspace span_of(std::size_t ambient, const std::vector<BitVec>& vectors) {
        return span_of(BitMat::from_rows(ambient, vectors));
    }

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.rows(); }

    const BitMat& basis() const noexcept { return basis_; }

    std::vector<BitVec> basis_rows() const {
        std::vector<BitVec> rows;
        rows.reserve(basis_.rows());
        for (std::size_t r = 0; r < basis_.rows(); ++r) rows.push_back(basis_.row_vec(r));
        return rows;
    }

    bool contains(BitVec v) const {
        if (v.dim() != ambient_) throw DimensionMismatch("membership test in wrong ambient space");
        for (std::size_t r = 0; r < basis_.rows(); ++r) {
            const std::size_t lead = basis_.row_leading(r);
            if (v.get(lead)) v ^= basis_.row_vec(r);
        }
        return v.is_zero();
    }

    bool operator==(const Subspace& other) const = default;

private:
    Subspace(std::size_t ambient, BitMat basis) : ambient_(ambient), basis_(std::move(basis)) {
        check_ambient_dim(ambient_);
    }

    std::size_t ambient_;
    BitMat basis_;  // RREF, exactly dim() rows
};

// Null space {v : m*v = 0}.  dim kernel + rank = cols.
inline Subspace kernel(const BitMat& m) {
    RrefResult red = rref(m);
    const std::size_t n = m.cols();
    std::vector<std::size_t> pivot_of_col(n, red.rank);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < red.rank; ++r) {
        const std::size_t lead = red.mat.row_leading(r);
        pivot_of_col[lead] = r;
        is_pivot[lead] = true;
    }
    std::vector<BitVec> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        BitVec v(n);
        v.set(f, true);
        for (std::size_t c = 0; c < n; ++c) {
            if (is_pivot[c] && red.mat.get(pivot_of_col[c], f)) v.set(c, true);
        }
        basis.push_back(std::move(v));
    }
    return Subspace::span_of(n, basis);
}

inline BitMat stack_rows(const BitMat& top, const BitMat& bottom) {
    if (top.cols() != bottom.cols()) throw DimensionMismatch("stacking rows of unequal length");
    BitMat out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r) out.set_row(r, top.row_vec(r));
    for (std::size_t r = 0; r < bottom.rows(); ++r) out.set_row(top.rows() + r, bottom.row_vec(r));
    return out;
}

inline Subspace sum(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != w.ambient_dim()) {
        throw DimensionMismatch("sum of subspaces of different ambient spaces");
    }
    return Subspace::span_of(stack_rows(u.basis(), w.basis()));
}

// Intersection via annihilators: v lies in U exactly when v is orthogonal to
// the kernel of U's basis matrix, so U /\ W is the null space of the stacked
// annihilator bases.
inline Subspace intersect(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != w.ambient_dim()) {
        throw DimensionMismatch("intersection of subspaces of different ambient spaces");
    }
    const BitMat ann_u = kernel(u.basis()).basis();
    const BitMat ann_w = kernel(w.basis()).basis();
    return kernel(stack_rows(ann_u, ann_w));
}

// {v : m*v in U}; for invertible m this is the image of U under the inverse.
inline Subspace preimage(const BitMat& m, const Subspace& u) {
    if (u.ambient_dim() != m.rows()) {
        throw DimensionMismatch("preimage of subspace outside the codomain");
    }
    const BitMat ann = kernel(u.basis()).basis();
    return kernel(ann * m);
}

}  // namespace quadpoint
