#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "generators.hpp"
#include "quadpoint/oracle.hpp"

using namespace quadpoint;
using namespace quadpoint::oracle;

TEST_CASE("byte-level rank on known matrices") {
    CHECK(oracle::naive_rank(BitMat::identity(4)) == 4);
    BitMat ones(3, 3);
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) ones.set(r, c, true);
    }
    CHECK(oracle::naive_rank(ones) == 1);
    CHECK(oracle::naive_rank(BitMat(5, 7)) == 0);
    CHECK(oracle::naive_rank(BitMat(0, 0)) == 0);
}

TEST_CASE("byte-level rank agrees with the packed rank") {
    qptest::Rng rng(17001);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t rows = 1 + rng() % 64;
        const std::size_t cols = 1 + rng() % 64;
        const BitMat m = qptest::random_bitmat(rows, cols, rng);
        CHECK(oracle::naive_rank(m) == rank(m));
    }
}

TEST_CASE("enumerated orthogonal group in dimension two") {
    const std::vector<BitMat> group = enumerate_orthogonal_group(QuadForm::standard(1));
    REQUIRE(group.size() == 2);
    const bool has_id = group[0] == BitMat::identity(2) || group[1] == BitMat::identity(2);
    const BitMat swap = BitMat::from_strings({"01", "10"});
    const bool has_swap = group[0] == swap || group[1] == swap;
    CHECK(has_id);
    CHECK(has_swap);

    // Closure and inverses, directly on the two elements.
    for (const BitMat& s : group) {
        for (const BitMat& t : group) {
            const BitMat p = s * t;
            CHECK((p == group[0] || p == group[1]));
        }
        CHECK(s * s == BitMat::identity(2));
    }
}

TEST_CASE("enumerated orthogonal group in dimension four") {
    const std::vector<BitMat> group = enumerate_orthogonal_group(QuadForm::standard(2));
    CHECK(group.size() == 72);
    for (const BitMat& t : group) {
        CHECK(is_orthogonal(QuadForm::standard(2), t));
    }
    // The group of the obstructed dim-2 form is all of GL(2,2): with g = 1 on
    // every nonzero vector, any bijection preserves it.
    const QuadForm arf(QuadForm::standard(1).gram(), BitVec::from_string("11"));
    CHECK(enumerate_orthogonal_group(arf).size() == 6);

    CHECK_THROWS_AS(enumerate_orthogonal_group(QuadForm::standard(3)), DimensionTooLarge);
}

TEST_CASE("invertible matrix counts") {
    CHECK(oracle::count_invertible_matrices(0) == 1);
    CHECK(oracle::count_invertible_matrices(1) == 1);
    CHECK(oracle::count_invertible_matrices(2) == 6);
    CHECK(oracle::count_invertible_matrices(3) == 168);
    CHECK(oracle::count_invertible_matrices(4) == 20160);
    CHECK_THROWS_AS(oracle::count_invertible_matrices(5), DimensionTooLarge);
}

TEST_CASE("enumerated decompositions") {
    const std::vector<Tsd> dim2 = enumerate_tsds(QuadForm::standard(1));
    REQUIRE(dim2.size() == 2);
    const Subspace ax = Subspace::span_of(2, {BitVec::from_string("10")});
    const Subspace bx = Subspace::span_of(2, {BitVec::from_string("01")});
    const bool ordered_both_ways =
        (dim2[0].a() == ax && dim2[0].b() == bx && dim2[1].a() == bx && dim2[1].b() == ax) ||
        (dim2[0].a() == bx && dim2[0].b() == ax && dim2[1].a() == ax && dim2[1].b() == bx);
    CHECK(ordered_both_ways);

    CHECK(enumerate_tsds(QuadForm::standard(2)).size() == 12);

    const QuadForm arf(QuadForm::standard(1).gram(), BitVec::from_string("11"));
    CHECK(enumerate_tsds(arf).empty());

    CHECK_THROWS_AS(enumerate_tsds(QuadForm::standard(3)), DimensionTooLarge);
}

TEST_CASE("exhaustive verification in dimension two") {
    const oracle::EnumerationReport rep = oracle::verify_section2(QuadForm::standard(1));
    CHECK(rep.dim == 2);
    CHECK(rep.group_order == 2);
    CHECK(rep.tsd_count == 2);
    CHECK(rep.class_count == 2);
    CHECK(rep.psi_kernel_index == 2);
    CHECK(rep.violations.empty());
}

TEST_CASE("exhaustive verification in dimension four") {
    const oracle::EnumerationReport rep = oracle::verify_section2(QuadForm::standard(2));
    CHECK(rep.dim == 4);
    CHECK(rep.group_order == 72);
    CHECK(rep.tsd_count == 12);
    CHECK(rep.class_count == 2);
    CHECK(rep.psi_kernel_index == 2);
    CHECK(rep.violations.empty());
}

TEST_CASE("verification of degenerate cases") {
    SECTION("the obstructed form has no decompositions") {
        const QuadForm arf(QuadForm::standard(1).gram(), BitVec::from_string("11"));
        const oracle::EnumerationReport rep = oracle::verify_section2(arf);
        CHECK(rep.group_order == 6);
        CHECK(rep.tsd_count == 0);
        CHECK(rep.class_count == 0);
        CHECK(rep.psi_kernel_index == 2);
        REQUIRE(rep.violations.size() == 1);
        CHECK(rep.violations[0] == "no-tsds");
    }
    SECTION("dimension zero is trivial") {
        const oracle::EnumerationReport rep = oracle::verify_section2(QuadForm::standard(0));
        CHECK(rep.group_order == 1);
        CHECK(rep.tsd_count == 1);
        CHECK(rep.class_count == 1);
        CHECK(rep.violations.empty());
    }
    SECTION("enumeration is capped") {
        CHECK_THROWS_AS(oracle::verify_section2(QuadForm::standard(3)), DimensionTooLarge);
    }
}

TEST_CASE("transported parity is constant over all carriers") {
    // Re-derive psi-hat well-definedness directly: for each ordered pair of
    // enumerated decompositions, every group element carrying one to the other
    // reports the same parity, and at least one carrier exists.
    for (std::size_t genus : {std::size_t{1}, std::size_t{2}}) {
        const QuadForm f = QuadForm::standard(genus);
        const std::vector<BitMat> group = enumerate_orthogonal_group(f);
        const std::vector<Tsd> tsds = enumerate_tsds(f);
        auto maps_to = [](const BitMat& t, const Subspace& from, const Subspace& to) {
            std::vector<BitVec> img;
            for (const BitVec& v : from.basis_rows()) img.push_back(t.apply(v));
            return Subspace::span_of(from.ambient_dim(), img) == to;
        };
        for (const Tsd& s : tsds) {
            for (const Tsd& t : tsds) {
                int seen = -1;
                bool constant = true;
                for (const BitMat& m : group) {
                    if (!maps_to(m, s.a(), t.a()) || !maps_to(m, s.b(), t.b())) continue;
                    const int p = psi(f, m) ? 1 : 0;
                    if (seen == -1) {
                        seen = p;
                    } else if (seen != p) {
                        constant = false;
                    }
                }
                REQUIRE(seen != -1);
                CHECK(constant);
                CHECK((seen == 1) == psi_hat(s, t));
            }
        }
    }
}
