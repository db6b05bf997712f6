#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "quadpoint/bitmat.hpp"
#include "quadpoint/errors.hpp"
#include "quadpoint/quadform.hpp"
#include "quadpoint/subspace.hpp"
#include "quadpoint/tsd.hpp"

// Brute-force referee for the rest of the library.  Everything here favours
// the most literal possible computation over speed: ranks by textbook
// elimination on unpacked bytes, groups by scanning every matrix, subspaces by
// listing every member.  None of the packed elimination code is reused, so an
// agreement between this module and the fast paths is evidence, not tautology.

namespace quadpoint::oracle {

inline constexpr std::size_t max_enumeration_dim = 4;

namespace detail {

inline std::size_t byte_rank(std::vector<std::vector<unsigned char>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m[i][c]) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i != r && m[i][c]) {
                for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
            }
        }
        ++r;
    }
    return r;
}

// Linear map on GF(2)^d, d <= 4, stored as the images of the basis vectors.
// Vectors are plain bit patterns in an unsigned int.
struct TinyMap {
    std::size_t d = 0;
    std::array<unsigned, max_enumeration_dim> cols{};

    unsigned apply(unsigned v) const {
        unsigned out = 0;
        for (std::size_t j = 0; j < d; ++j) {
            if (v >> j & 1u) out ^= cols[j];
        }
        return out;
    }

    unsigned key() const {
        unsigned k = 0;
        for (std::size_t j = 0; j < d; ++j) k |= cols[j] << (j * d);
        return k;
    }

    bool bijective() const {
        unsigned seen = 0;
        for (unsigned v = 0; v < (1u << d); ++v) seen |= 1u << apply(v);
        return seen == (1u << (1u << d)) - 1u || d == 0;
    }
};

inline bool tiny_g(const QuadForm& f, unsigned v) {
    bool acc = false;
    for (std::size_t i = 0; i < f.dim(); ++i) {
        if (!(v >> i & 1u)) continue;
        if (f.diag().get(i)) acc = !acc;
        for (std::size_t j = i + 1; j < f.dim(); ++j) {
            if ((v >> j & 1u) && f.gram().get(i, j)) acc = !acc;
        }
    }
    return acc;
}

inline bool tiny_psi(const TinyMap& t) {
    std::vector<std::vector<unsigned char>> m(t.d, std::vector<unsigned char>(t.d, 0));
    for (std::size_t i = 0; i < t.d; ++i) {
        for (std::size_t j = 0; j < t.d; ++j) {
            m[i][j] = static_cast<unsigned char>((t.cols[j] >> i & 1u) ^ (i == j ? 1u : 0u));
        }
    }
    return byte_rank(std::move(m)) & 1u;
}

inline BitMat tiny_to_bitmat(const TinyMap& t) {
    BitMat m(t.d, t.d);
    for (std::size_t j = 0; j < t.d; ++j) {
        for (std::size_t i = 0; i < t.d; ++i) {
            if (t.cols[j] >> i & 1u) m.set(i, j, true);
        }
    }
    return m;
}

inline void check_enumeration_dim(std::size_t d) {
    if (d > max_enumeration_dim) {
        throw DimensionTooLarge("exhaustive enumeration is capped at dimension " +
                                std::to_string(max_enumeration_dim));
    }
}

inline std::vector<TinyMap> scan_orthogonal(const QuadForm& f) {
    check_enumeration_dim(f.dim());
    const std::size_t d = f.dim();
    std::array<bool, 1u << max_enumeration_dim> gval{};
    for (unsigned v = 0; v < (1u << d); ++v) gval[v] = tiny_g(f, v);
    std::vector<TinyMap> group;
    const unsigned total = d == 0 ? 1u : 1u << (d * d);
    for (unsigned code = 0; code < total; ++code) {
        TinyMap t{d, {}};
        for (std::size_t j = 0; j < d && j < t.cols.size(); ++j) {
            t.cols[j] = code >> (j * d) & ((1u << d) - 1u);
        }
        if (!t.bijective()) continue;
        bool ok = true;
        for (unsigned v = 0; v < (1u << d) && ok; ++v) ok = gval[t.apply(v)] == gval[v];
        if (ok) group.push_back(t);
    }
    return group;
}

// A subspace listed in full: a basis plus every member, sorted.
struct TinySubspace {
    std::vector<unsigned> basis;
    std::vector<unsigned> span;
};

inline std::vector<unsigned> span_of_basis(const std::vector<unsigned>& basis) {
    std::vector<unsigned> span;
    for (unsigned mask = 0; mask < (1u << basis.size()); ++mask) {
        unsigned v = 0;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (mask >> i & 1u) v ^= basis[i];
        }
        span.push_back(v);
    }
    std::sort(span.begin(), span.end());
    return span;
}

inline std::vector<TinySubspace> scan_half_dim_singular(const QuadForm& f) {
    check_enumeration_dim(f.dim());
    const std::size_t d = f.dim();
    const std::size_t n = d / 2;
    std::set<std::vector<unsigned>> seen;
    std::vector<TinySubspace> out;
    std::vector<unsigned> basis(n);
    // Walk every n-tuple of nonzero vectors; duplicates collapse via the span.
    const unsigned limit = 1u << d;
    std::vector<unsigned> idx(n, 1);
    if (n == 0) {
        out.push_back(TinySubspace{{}, {0}});
        return out;
    }
    while (true) {
        for (std::size_t i = 0; i < n; ++i) basis[i] = idx[i];
        std::vector<unsigned> span = span_of_basis(basis);
        bool independent = std::adjacent_find(span.begin(), span.end()) == span.end();
        if (independent) {
            bool singular = true;
            for (unsigned v : span) {
                if (tiny_g(f, v)) {
                    singular = false;
                    break;
                }
            }
            if (singular && seen.insert(span).second) out.push_back(TinySubspace{basis, span});
        }
        std::size_t pos = 0;
        while (pos < n && ++idx[pos] == limit) idx[pos++] = 1;
        if (pos == n) break;
    }
    return out;
}

inline bool spans_disjoint(const TinySubspace& a, const TinySubspace& b) {
    std::vector<unsigned> both;
    std::set_intersection(a.span.begin(), a.span.end(), b.span.begin(), b.span.end(),
                          std::back_inserter(both));
    return both.size() == 1;  // only the zero vector
}

inline std::vector<unsigned> image_span(const TinyMap& t, const TinySubspace& s) {
    std::vector<unsigned> img;
    img.reserve(s.span.size());
    for (unsigned v : s.span) img.push_back(t.apply(v));
    std::sort(img.begin(), img.end());
    return img;
}

}  // namespace detail

// Rank over GF(2) by elimination on unpacked bytes.
inline std::size_t naive_rank(const BitMat& m) {
    std::vector<std::vector<unsigned char>> bytes(m.rows(),
                                                  std::vector<unsigned char>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) bytes[r][c] = m.get(r, c);
    }
    return detail::byte_rank(std::move(bytes));
}

// Every orthogonal map of f, found by scanning all of GL.  Dimension <= 4.
inline std::vector<BitMat> enumerate_orthogonal_group(const QuadForm& f) {
    std::vector<BitMat> out;
    for (const detail::TinyMap& t : detail::scan_orthogonal(f)) {
        out.push_back(detail::tiny_to_bitmat(t));
    }
    return out;
}

// Number of invertible dim x dim matrices, by scanning them all.  Dimension <= 4.
inline std::size_t count_invertible_matrices(std::size_t dim) {
    detail::check_enumeration_dim(dim);
    std::size_t count = 0;
    const unsigned total = dim == 0 ? 1u : 1u << (dim * dim);
    for (unsigned code = 0; code < total; ++code) {
        detail::TinyMap t{dim, {}};
        for (std::size_t j = 0; j < dim && j < t.cols.size(); ++j) {
            t.cols[j] = code >> (j * dim) & ((1u << dim) - 1u);
        }
        if (t.bijective()) ++count;
    }
    return count;
}

// Every totally singular decomposition of f, as ordered pairs.  Dimension <= 4.
// Empty for forms that admit none.
inline std::vector<Tsd> enumerate_tsds(const QuadForm& f) {
    const std::vector<detail::TinySubspace> halves = detail::scan_half_dim_singular(f);
    std::vector<Tsd> out;
    for (const detail::TinySubspace& a : halves) {
        for (const detail::TinySubspace& b : halves) {
            // A half can pair with itself only in dimension zero, where the
            // trivial pair is the one valid decomposition.
            if (!detail::spans_disjoint(a, b)) continue;
            auto lift = [&](const detail::TinySubspace& s) {
                std::vector<BitVec> rows;
                for (unsigned v : s.basis) {
                    BitVec row(f.dim());
                    for (std::size_t i = 0; i < f.dim(); ++i) {
                        if (v >> i & 1u) row.set(i, true);
                    }
                    rows.push_back(std::move(row));
                }
                return Subspace::span_of(f.dim(), rows);
            };
            out.push_back(Tsd(f, lift(a), lift(b)));
        }
    }
    return out;
}

struct EnumerationReport {
    std::size_t dim = 0;
    std::size_t group_order = 0;
    std::size_t tsd_count = 0;
    std::size_t class_count = 0;
    std::size_t psi_kernel_index = 0;
    std::vector<std::string> violations;
};

// Exhaustive verification of the small-dimension theory, plus cross-checks of
// the packed implementations against the byte-level ones.  A correct build
// produces an empty violation list; every claim that fails lands there as one
// tagged line.
inline EnumerationReport verify_section2(const QuadForm& f) {
    using namespace detail;
    EnumerationReport rep;
    rep.dim = f.dim();
    const std::vector<TinyMap> group = scan_orthogonal(f);
    rep.group_order = group.size();
    auto flag = [&rep](const std::string& s) { rep.violations.push_back(s); };

    std::set<unsigned> keys;
    for (const TinyMap& t : group) keys.insert(t.key());
    std::vector<bool> psi_val(group.size());
    for (std::size_t i = 0; i < group.size(); ++i) psi_val[i] = tiny_psi(group[i]);

    // Group structure and the rank-parity homomorphism, all pairs.
    for (std::size_t i = 0; i < group.size(); ++i) {
        for (std::size_t j = 0; j < group.size(); ++j) {
            TinyMap prod{f.dim(), {}};
            for (std::size_t c = 0; c < f.dim(); ++c) {
                prod.cols[c] = group[i].apply(group[j].cols[c]);
            }
            if (!keys.count(prod.key())) {
                flag("group-not-closed at pair " + std::to_string(i) + "," + std::to_string(j));
            } else if (tiny_psi(prod) != (psi_val[i] != psi_val[j])) {
                flag("psi-not-homomorphism at pair " + std::to_string(i) + "," +
                     std::to_string(j));
            }
        }
    }
    TinyMap id{f.dim(), {}};
    for (std::size_t c = 0; c < f.dim(); ++c) id.cols[c] = 1u << c;
    for (std::size_t i = 0; i < group.size(); ++i) {
        bool has_inverse = false;
        for (const TinyMap& s : group) {
            TinyMap prod{f.dim(), {}};
            for (std::size_t c = 0; c < f.dim(); ++c) prod.cols[c] = group[i].apply(s.cols[c]);
            if (prod.key() == id.key()) {
                has_inverse = true;
                break;
            }
        }
        if (!has_inverse) flag("group-inverse-missing at element " + std::to_string(i));
    }

    std::size_t kernel_size = 0;
    for (bool v : psi_val) {
        if (!v) ++kernel_size;
    }
    rep.psi_kernel_index = kernel_size == 0 ? 0 : rep.group_order / kernel_size;

    // Packed psi must agree with the byte-level psi on every element.
    for (std::size_t i = 0; i < group.size(); ++i) {
        if (psi(f, tiny_to_bitmat(group[i])) != psi_val[i]) {
            flag("psi-mismatch-packed at element " + std::to_string(i));
        }
    }

    // Decompositions: existence and uniqueness of the transported parity.
    const std::vector<TinySubspace> halves = scan_half_dim_singular(f);
    struct TinyTsd {
        std::size_t a, b;
    };
    std::vector<TinyTsd> tsds;
    for (std::size_t i = 0; i < halves.size(); ++i) {
        for (std::size_t j = 0; j < halves.size(); ++j) {
            if (spans_disjoint(halves[i], halves[j])) tsds.push_back({i, j});
        }
    }
    rep.tsd_count = tsds.size();
    if (tsds.empty()) flag("no-tsds");

    std::vector<std::vector<int>> phat(tsds.size(), std::vector<int>(tsds.size(), -1));
    for (std::size_t s = 0; s < tsds.size(); ++s) {
        for (std::size_t t = 0; t < tsds.size(); ++t) {
            bool seen0 = false, seen1 = false;
            for (std::size_t gi = 0; gi < group.size(); ++gi) {
                if (image_span(group[gi], halves[tsds[s].a]) != halves[tsds[t].a].span) continue;
                if (image_span(group[gi], halves[tsds[s].b]) != halves[tsds[t].b].span) continue;
                (psi_val[gi] ? seen1 : seen0) = true;
            }
            if (!seen0 && !seen1) {
                flag("transport-missing between decompositions " + std::to_string(s) + "," +
                     std::to_string(t));
            } else if (seen0 && seen1) {
                flag("psi-hat-ill-defined between decompositions " + std::to_string(s) + "," +
                     std::to_string(t));
            } else {
                phat[s][t] = seen1 ? 1 : 0;
            }
        }
    }
    for (std::size_t s = 0; s < tsds.size(); ++s) {
        if (phat[s][s] == 1) flag("decomposition-stabilizer-psi-nonzero at " + std::to_string(s));
        for (std::size_t t = 0; t < tsds.size(); ++t) {
            if (phat[s][t] >= 0 && phat[t][s] >= 0 && phat[s][t] != phat[t][s]) {
                flag("psi-hat-not-symmetric at " + std::to_string(s) + "," + std::to_string(t));
            }
            for (std::size_t u = 0; u < tsds.size(); ++u) {
                if (phat[s][t] >= 0 && phat[t][u] >= 0 && phat[s][u] >= 0 &&
                    ((phat[s][t] ^ phat[t][u]) != phat[s][u])) {
                    flag("psi-hat-not-cocycle at " + std::to_string(s) + "," + std::to_string(t) +
                         "," + std::to_string(u));
                }
            }
            if (phat[s][t] > 0 &&
                (tsds[s].a == tsds[t].a || tsds[s].b == tsds[t].b)) {
                flag("shared-half-inequivalent at " + std::to_string(s) + "," +
                     std::to_string(t));
            }
        }
    }

    // Maps fixing a totally singular half pointwise are in the kernel of psi.
    for (const TinySubspace& a : halves) {
        for (std::size_t gi = 0; gi < group.size(); ++gi) {
            bool fixes = true;
            for (unsigned v : a.span) {
                if (group[gi].apply(v) != v) {
                    fixes = false;
                    break;
                }
            }
            if (fixes && psi_val[gi]) {
                flag("pointwise-stabilizer-psi-nonzero at element " + std::to_string(gi));
            }
        }
    }

    // Class structure: count classes of the "psi-hat vanishes" relation.
    if (!tsds.empty()) {
        std::vector<std::size_t> cls(tsds.size(), tsds.size());
        std::size_t next = 0;
        for (std::size_t s = 0; s < tsds.size(); ++s) {
            if (cls[s] != tsds.size()) continue;
            cls[s] = next;
            for (std::size_t t = 0; t < tsds.size(); ++t) {
                if (phat[s][t] == 0) cls[t] = next;
            }
            ++next;
        }
        rep.class_count = next;
    }

    // Packed psi-hat must agree with the enumerated value on every pair.
    if (f.dim() > 0) {
        const std::vector<Tsd> lib_tsds = enumerate_tsds(f);
        for (std::size_t s = 0; s < tsds.size(); ++s) {
            for (std::size_t t = 0; t < tsds.size(); ++t) {
                if (phat[s][t] < 0) continue;
                if (psi_hat(lib_tsds[s], lib_tsds[t]) != (phat[s][t] == 1)) {
                    flag("psi-hat-mismatch-packed at " + std::to_string(s) + "," +
                         std::to_string(t));
                }
            }
        }
    }
    return rep;
}

}  // namespace quadpoint::oracle
