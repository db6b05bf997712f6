#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quadpoint/bitmat.hpp"
#include "quadpoint/errors.hpp"
#include "quadpoint/quadform.hpp"
#include "quadpoint/subspace.hpp"

namespace quadpoint {

// Totally singular decomposition: V = A (+) B with g vanishing on both halves
// and dim A = dim B = genus.  Construction validates everything, so a Tsd
// value is trusted downstream.
class Tsd {
public:
    Tsd(QuadForm form, Subspace a, Subspace b)
        : form_(std::move(form)), a_(std::move(a)), b_(std::move(b)) {
        const std::size_t d = form_.dim();
        if (a_.ambient_dim() != d || b_.ambient_dim() != d) {
            throw DimensionMismatch("decomposition halves live outside the form's space");
        }
        if (a_.dim() != form_.genus() || b_.dim() != form_.genus()) {
            throw WrongDimension("each half must have dimension equal to the genus");
        }
        if (rank(stack_rows(a_.basis(), b_.basis())) != d) {
            throw WrongDimension("halves must be complementary");
        }
        if (!is_totally_singular(form_, a_)) {
            throw NotTotallySingular("first half is not totally singular");
        }
        if (!is_totally_singular(form_, b_)) {
            throw NotTotallySingular("second half is not totally singular");
        }
    }

    const QuadForm& form() const noexcept { return form_; }
    const Subspace& a() const noexcept { return a_; }
    const Subspace& b() const noexcept { return b_; }

    bool operator==(const Tsd& other) const = default;

private:
    QuadForm form_;
    Subspace a_;
    Subspace b_;
};

// Basis pair (a_1..a_n of A, b_1..b_n of B) with B(a_i, b_j) = delta_ij.
struct GoodBasis {
    Tsd tsd;
    std::vector<BitVec> a_vecs;
    std::vector<BitVec> b_vecs;
};

// Extends a totally singular subspace of half dimension to a full
// decomposition.  Hyperbolic completion: for each basis vector a_k in turn,
// solve for a partner y that pairs to 1 with a_k and to 0 with everything
// found so far (non-degeneracy makes the system solvable), kill g(y) by adding
// a_k if needed, and re-align the remaining a_i so later partners stay
// orthogonal to the finished hyperbolic planes.
inline Tsd complete_to_tsd(const QuadForm& f, const Subspace& a) {
    if (a.ambient_dim() != f.dim()) {
        throw DimensionMismatch("subspace lives outside the form's space");
    }
    if (a.dim() != f.genus()) {
        throw WrongDimension("completion needs a subspace of dimension equal to the genus");
    }
    if (!is_totally_singular(f, a)) {
        throw NotTotallySingular("completion needs a totally singular subspace");
    }
    const std::size_t n = f.genus();
    std::vector<BitVec> av = a.basis_rows();
    std::vector<BitVec> bv;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<BitVec> constraint_rows;
        BitVec rhs(2 * k + 1);
        for (std::size_t j = 0; j < k; ++j) constraint_rows.push_back(f.gram().apply(av[j]));
        for (std::size_t j = 0; j < k; ++j) constraint_rows.push_back(f.gram().apply(bv[j]));
        constraint_rows.push_back(f.gram().apply(av[k]));
        rhs.set(2 * k, true);
        std::optional<BitVec> y = solve(BitMat::from_rows(f.dim(), constraint_rows), rhs);
        if (!y) throw std::logic_error("no hyperbolic partner; non-degeneracy violated");
        BitVec b = *y;
        if (f.evaluate(b)) b ^= av[k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (f.bilinear(av[i], b)) av[i] ^= av[k];
        }
        bv.push_back(std::move(b));
    }
    return Tsd(f, a, Subspace::span_of(f.dim(), bv));
}

// Good basis for a decomposition.  The a-side defaults to the canonical basis
// of A; the b-side is the dual basis, obtained by inverting the pairing matrix
// against any basis of B.  A supplied a-side basis must be a basis of A.
inline GoodBasis good_basis(const Tsd& t,
                            const std::optional<std::vector<BitVec>>& a_basis = std::nullopt) {
    const std::size_t n = t.form().genus();
    const std::size_t d = t.form().dim();
    std::vector<BitVec> av;
    if (a_basis) {
        if (a_basis->size() != n) throw NotABasis("wrong number of vectors for the first half");
        for (const BitVec& v : *a_basis) {
            if (v.dim() != d) throw NotABasis("basis vector of wrong dimension");
            if (!t.a().contains(v)) throw NotABasis("vector outside the first half");
        }
        if (rank(BitMat::from_rows(d, *a_basis)) != n) {
            throw NotABasis("supplied vectors are dependent");
        }
        av = *a_basis;
    } else {
        av = t.a().basis_rows();
    }
    const BitMat amat = BitMat::from_rows(d, av);
    const BitMat cmat = t.b().basis();
    const BitMat pairing = amat * t.form().gram() * cmat.transposed();
    const BitMat dual = invert(pairing).transposed() * cmat;
    if (amat * t.form().gram() * dual.transposed() != BitMat::identity(n)) {
        throw std::logic_error("dual basis failed its pairing check");
    }
    std::vector<BitVec> bv;
    bv.reserve(n);
    for (std::size_t r = 0; r < n; ++r) bv.push_back(dual.row_vec(r));
    return GoodBasis{t, std::move(av), std::move(bv)};
}

// psi(T) = rank(T - id) mod 2, for T orthogonal.  This is a homomorphism onto
// Z/2 on the orthogonal group of any form handled here.
inline bool psi(const QuadForm& f, const BitMat& t) {
    if (!is_orthogonal(f, t)) throw NotOrthogonal("psi needs an orthogonal map");
    return rank(t ^ BitMat::identity(f.dim())) & 1u;
}

// The orthogonal map carrying one good basis to the other (a_i -> a'_i,
// b_i -> b'_i), in reference coordinates.
inline BitMat transport(const GoodBasis& from, const GoodBasis& to) {
    if (from.tsd.form() != to.tsd.form()) {
        throw FormMismatch("transport between decompositions of different forms");
    }
    const std::size_t d = from.tsd.form().dim();
    std::vector<BitVec> from_cols = from.a_vecs;
    from_cols.insert(from_cols.end(), from.b_vecs.begin(), from.b_vecs.end());
    std::vector<BitVec> to_cols = to.a_vecs;
    to_cols.insert(to_cols.end(), to.b_vecs.begin(), to.b_vecs.end());
    const BitMat p1 = BitMat::from_rows(d, from_cols).transposed();
    const BitMat p2 = BitMat::from_rows(d, to_cols).transposed();
    const BitMat t = p2 * invert(p1);
    if (!is_orthogonal(from.tsd.form(), t)) {
        throw NotOrthogonal("transport between good bases must be orthogonal");
    }
    return t;
}

// psi-hat of an ordered pair of decompositions of one form: psi of any
// orthogonal map carrying the first to the second.  Independent of the choice,
// so the default good bases serve.
inline bool psi_hat(const Tsd& t1, const Tsd& t2) {
    if (t1.form() != t2.form()) {
        throw FormMismatch("decompositions of different forms cannot be compared");
    }
    return psi(t1.form(), transport(good_basis(t1), good_basis(t2)));
}

// Same invariant along a shortcut: the parity of
// dim span {a'_i - a_i, b'_i - b_i} over good bases of the two decompositions.
// The span is the image of (transport - id), which is why this agrees with
// psi_hat; it is computed here without building the transport at all.
inline bool psi_hat_recipe(const Tsd& t1, const Tsd& t2) {
    if (t1.form() != t2.form()) {
        throw FormMismatch("decompositions of different forms cannot be compared");
    }
    const GoodBasis g1 = good_basis(t1);
    const GoodBasis g2 = good_basis(t2);
    const std::size_t n = t1.form().genus();
    std::vector<BitVec> diffs;
    diffs.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) diffs.push_back(g1.a_vecs[i] ^ g2.a_vecs[i]);
    for (std::size_t i = 0; i < n; ++i) diffs.push_back(g1.b_vecs[i] ^ g2.b_vecs[i]);
    return rank(BitMat::from_rows(t1.form().dim(), diffs)) & 1u;
}

// Decompositions of one form fall into exactly two classes; this is the
// "same class" predicate.
inline bool equivalent(const Tsd& t1, const Tsd& t2) { return !psi_hat(t1, t2); }

namespace detail {

// Coordinate placement for block sums.  Component coordinates
// (a_1..a_n1, b_1..b_n1) and (a_1..a_n2, b_1..b_n2) interleave into
// (a's of first, a's of second, b's of first, b's of second), keeping the
// combined coordinates in the reference a-then-b order.
inline std::size_t block_coord(std::size_t n1, std::size_t n2, bool second, std::size_t i) {
    const std::size_t n = n1 + n2;
    if (!second) return i < n1 ? i : n + (i - n1);
    return i < n2 ? n1 + i : n + n1 + (i - n2);
}

inline BitVec block_embed(std::size_t n1, std::size_t n2, bool second, const BitVec& v) {
    BitVec out(2 * (n1 + n2));
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (v.get(i)) out.set(block_coord(n1, n2, second, i), true);
    }
    return out;
}

}  // namespace detail

// Orthogonal direct sum of decompositions, in the combined reference order.
// Summing with a genus-0 decomposition returns the original unchanged.
inline Tsd direct_sum(const Tsd& t1, const Tsd& t2) {
    const std::size_t n1 = t1.form().genus();
    const std::size_t n2 = t2.form().genus();
    const std::size_t d = 2 * (n1 + n2);
    BitMat gram(d, d);
    BitVec diag(d);
    for (std::size_t i = 0; i < 2 * n1; ++i) {
        const std::size_t mi = detail::block_coord(n1, n2, false, i);
        if (t1.form().diag().get(i)) diag.set(mi, true);
        for (std::size_t j = 0; j < 2 * n1; ++j) {
            if (t1.form().gram().get(i, j)) {
                gram.set(mi, detail::block_coord(n1, n2, false, j), true);
            }
        }
    }
    for (std::size_t i = 0; i < 2 * n2; ++i) {
        const std::size_t mi = detail::block_coord(n1, n2, true, i);
        if (t2.form().diag().get(i)) diag.set(mi, true);
        for (std::size_t j = 0; j < 2 * n2; ++j) {
            if (t2.form().gram().get(i, j)) {
                gram.set(mi, detail::block_coord(n1, n2, true, j), true);
            }
        }
    }
    std::vector<BitVec> a_rows, b_rows;
    for (const BitVec& v : t1.a().basis_rows()) a_rows.push_back(detail::block_embed(n1, n2, false, v));
    for (const BitVec& v : t2.a().basis_rows()) a_rows.push_back(detail::block_embed(n1, n2, true, v));
    for (const BitVec& v : t1.b().basis_rows()) b_rows.push_back(detail::block_embed(n1, n2, false, v));
    for (const BitVec& v : t2.b().basis_rows()) b_rows.push_back(detail::block_embed(n1, n2, true, v));
    return Tsd(QuadForm(std::move(gram), std::move(diag)),
               Subspace::span_of(d, a_rows), Subspace::span_of(d, b_rows));
}

}  // namespace quadpoint
