#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "quadpoint/bitmat.hpp"
#include "quadpoint/errors.hpp"
#include "quadpoint/quadform.hpp"
#include "quadpoint/subspace.hpp"
#include "quadpoint/tsd.hpp"

namespace quadpoint {

enum class Orientation { positive, negative };

inline Orientation flipped(Orientation o) {
    return o == Orientation::positive ? Orientation::negative : Orientation::positive;
}

// Guards 2 * genus against the ambient cap without risk of overflow, before
// any basis storage is sized from it.
inline void check_genus(std::size_t genus) {
    if (genus > max_ambient_dim / 2) {
        throw DimensionTooLarge("genus " + std::to_string(genus) + " exceeds cap " +
                                std::to_string(max_ambient_dim / 2));
    }
}

// Homological data of an embedding of the closed orientable genus-n surface in
// 3-space: the two half-space kernels inside H_1 (coordinates in the reference
// symplectic basis a_1..a_n, b_1..b_n of the intersection form), plus an
// orientation flag for the complementary region.  Validation requires the
// kernels to be complementary halves on which the intersection form vanishes;
// every embedding produces such data.
class EmbeddingData {
public:
    EmbeddingData(std::size_t genus, Subspace a0, Subspace a1, Orientation orientation)
        : genus_(genus), a0_(std::move(a0)), a1_(std::move(a1)), orientation_(orientation) {
        check_genus(genus_);
        const std::size_t d = 2 * genus_;
        if (a0_.ambient_dim() != d || a1_.ambient_dim() != d) {
            throw InvalidEmbeddingData("kernels must live in dimension twice the genus");
        }
        if (a0_.dim() != genus_ || a1_.dim() != genus_) {
            throw InvalidEmbeddingData("each kernel must have dimension equal to the genus");
        }
        if (rank(stack_rows(a0_.basis(), a1_.basis())) != d) {
            throw InvalidEmbeddingData("kernels must be complementary");
        }
        const BitMat gram = QuadForm::standard(genus_).gram();
        if (!pairwise_zero(gram, a0_) || !pairwise_zero(gram, a1_)) {
            throw InvalidEmbeddingData("intersection form must vanish on each kernel");
        }
    }

    std::size_t genus() const noexcept { return genus_; }
    const Subspace& a0() const noexcept { return a0_; }
    const Subspace& a1() const noexcept { return a1_; }
    Orientation orientation() const noexcept { return orientation_; }

    bool operator==(const EmbeddingData& other) const = default;

private:
    static bool pairwise_zero(const BitMat& gram, const Subspace& u) {
        const BitMat p = u.basis() * gram * u.basis().transposed();
        return p == BitMat(u.dim(), u.dim());
    }

    std::size_t genus_;
    Subspace a0_;
    Subspace a1_;
    Orientation orientation_;
};

struct SystemEmbedding {
    std::vector<EmbeddingData> components;

    bool operator==(const SystemEmbedding& other) const = default;
};

// Action of a surface diffeomorphism on H_1 (an invertible matrix in the
// reference basis) together with its orientation behaviour: eps_h = 1 for
// orientation reversing.
class DiffeoData {
public:
    DiffeoData(std::size_t genus, BitMat h_star, bool eps_h)
        : genus_(genus), h_star_(std::move(h_star)), eps_h_(eps_h) {
        check_genus(genus_);
        const std::size_t d = 2 * genus_;
        if (h_star_.rows() != d || h_star_.cols() != d) {
            throw DimensionMismatch("induced map must be square of dimension twice the genus");
        }
        if (rank(h_star_) != d) throw SingularMatrix("induced map must be invertible");
    }

    std::size_t genus() const noexcept { return genus_; }
    const BitMat& h_star() const noexcept { return h_star_; }
    bool eps_h() const noexcept { return eps_h_; }

    bool operator==(const DiffeoData& other) const = default;

private:
    std::size_t genus_;
    BitMat h_star_;
    bool eps_h_;
};

// The quadratic form induced by an embedding.  Its polar form is the fixed
// reference intersection form; its value on a reference basis vector e_i is
// B(u, w) for the decomposition e_i = u + w along A0 (+) A1.  This is the
// unique form with that polar form vanishing on both kernels.
inline QuadForm form_of(const EmbeddingData& e) {
    const std::size_t n = e.genus();
    const std::size_t d = 2 * n;
    const BitMat gram = QuadForm::standard(n).gram();
    const BitMat stacked = stack_rows(e.a0().basis(), e.a1().basis());
    const BitMat minv = invert(stacked);
    // Row i of minv holds the coordinates of e_i in the stacked basis.
    BitMat coeff_a0(d, n), coeff_a1(d, n);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            coeff_a0.set(i, j, minv.get(i, j));
            coeff_a1.set(i, j, minv.get(i, n + j));
        }
    }
    const BitMat u = coeff_a0 * e.a0().basis();
    const BitMat w = coeff_a1 * e.a1().basis();
    const BitMat values = u * gram * w.transposed();
    BitVec diag(d);
    for (std::size_t i = 0; i < d; ++i) diag.set(i, values.get(i, i));
    return QuadForm(gram, std::move(diag));
}

// The unknotted embedding: A0 spanned by the a-coordinates, A1 by the
// b-coordinates, standard orientation.
inline EmbeddingData standard_embedding(std::size_t genus) {
    check_genus(genus);
    std::vector<BitVec> a0, a1;
    for (std::size_t i = 0; i < genus; ++i) {
        a0.push_back(BitVec::unit(2 * genus, i));
        a1.push_back(BitVec::unit(2 * genus, genus + i));
    }
    return EmbeddingData(genus, Subspace::span_of(2 * genus, a0),
                         Subspace::span_of(2 * genus, a1), Orientation::positive);
}

// Two embeddings of the same surface are regularly homotopic exactly when they
// induce the same quadratic form.
inline bool regularly_homotopic(const EmbeddingData& e1, const EmbeddingData& e2) {
    return e1.genus() == e2.genus() && form_of(e1) == form_of(e2);
}

// 1 when the two embeddings orient the complementary region oppositely.
inline bool epsilon_hat(const EmbeddingData& e1, const EmbeddingData& e2) {
    return e1.orientation() != e2.orientation();
}

// Number mod 2 of quadruple points in a generic regular homotopy between the
// two embeddings: psi-hat of the induced kernel decompositions, plus
// (n+1) * epsilon-hat.
inline bool quadruple_invariant(const EmbeddingData& e1, const EmbeddingData& e2) {
    if (e1.genus() != e2.genus()) {
        throw NotRegularlyHomotopic("embeddings of different genus");
    }
    const QuadForm f = form_of(e1);
    if (f != form_of(e2)) {
        throw NotRegularlyHomotopic("embeddings induce different forms");
    }
    const Tsd t1(f, e1.a0(), e1.a1());
    const Tsd t2(f, e2.a0(), e2.a1());
    bool q = psi_hat(t1, t2);
    if ((e1.genus() + 1) % 2 == 1 && epsilon_hat(e1, e2)) q = !q;
    return q;
}

// Data of e composed with a diffeomorphism h: kernels pull back through the
// induced map, the orientation flag flips when h reverses orientation.
inline EmbeddingData pullback_by_diffeo(const EmbeddingData& e, const DiffeoData& h) {
    if (e.genus() != h.genus()) {
        throw GenusMismatch("embedding and diffeomorphism of different genus");
    }
    const Subspace a0 = preimage(h.h_star(), e.a0());
    const Subspace a1 = preimage(h.h_star(), e.a1());
    const Orientation o = h.eps_h() ? flipped(e.orientation()) : e.orientation();
    return EmbeddingData(e.genus(), a0, a1, o);
}

// Invariant of the closed homotopy from e to e∘h when h_star is orthogonal for
// the induced form: psi(h_star) + (n+1) * eps_h.
inline bool q_diffeo(const DiffeoData& h, const EmbeddingData& e) {
    if (e.genus() != h.genus()) {
        throw GenusMismatch("embedding and diffeomorphism of different genus");
    }
    const QuadForm f = form_of(e);
    bool q = psi(f, h.h_star());
    if ((e.genus() + 1) % 2 == 1 && h.eps_h()) q = !q;
    return q;
}

// Embedding data of a connected sum built from disjoint pieces, in the
// combined reference coordinates.  The pieces must agree on orientation.
inline EmbeddingData compose_split(const EmbeddingData& e0, const EmbeddingData& e1) {
    if (e0.orientation() != e1.orientation()) {
        throw OrientationMismatch("pieces orient the complementary region oppositely");
    }
    const std::size_t n0 = e0.genus();
    const std::size_t n1 = e1.genus();
    const std::size_t d = 2 * (n0 + n1);
    std::vector<BitVec> a0_rows, a1_rows;
    for (const BitVec& v : e0.a0().basis_rows()) {
        a0_rows.push_back(detail::block_embed(n0, n1, false, v));
    }
    for (const BitVec& v : e1.a0().basis_rows()) {
        a0_rows.push_back(detail::block_embed(n0, n1, true, v));
    }
    for (const BitVec& v : e0.a1().basis_rows()) {
        a1_rows.push_back(detail::block_embed(n0, n1, false, v));
    }
    for (const BitVec& v : e1.a1().basis_rows()) {
        a1_rows.push_back(detail::block_embed(n0, n1, true, v));
    }
    return EmbeddingData(n0 + n1, Subspace::span_of(d, a0_rows), Subspace::span_of(d, a1_rows),
                         e0.orientation());
}

// Componentwise invariant of systems of disjoint surfaces: components are
// matched by index and the contributions add mod 2.
inline bool q_system(const SystemEmbedding& s1, const SystemEmbedding& s2) {
    if (s1.components.size() != s2.components.size()) {
        throw ComponentCountMismatch("systems with different numbers of components");
    }
    bool q = false;
    for (std::size_t i = 0; i < s1.components.size(); ++i) {
        if (!regularly_homotopic(s1.components[i], s2.components[i])) {
            throw NotRegularlyHomotopic("component " + std::to_string(i) +
                                        " pairs embeddings that are not regularly homotopic");
        }
        if (quadruple_invariant(s1.components[i], s2.components[i])) q = !q;
    }
    return q;
}

}  // namespace quadpoint
