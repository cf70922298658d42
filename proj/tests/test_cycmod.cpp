#include <doctest.h>

#include "procyclic/cycmod.hpp"
#include "procyclic/errors.hpp"
#include "procyclic/exponent_action.hpp"

using namespace procyclic;

TEST_CASE("regular module matrices") {
    Prime p2(2);
    FpCModule r1 = regular_module(p2, 1);
    CHECK(r1.dim() == 1);
    CHECK(is_identity(r1.action()));
    CHECK(regular_module(p2, 2).action() == FpMatrix::from_rows(p2, {{1, 0}, {1, 1}}));

    for (std::uint32_t pv : {2u, 3u, 5u})
        for (std::size_t i = 1; i <= 8; ++i) {
            FpCModule r = regular_module(Prime(pv), i);
            CHECK(is_identity(matrix_power(r.action(), saturating_pow(pv, r.order_exponent()))));
            CHECK(saturating_pow(pv, r.order_exponent()) >= i);
            if (r.order_exponent() > 0)
                CHECK_FALSE(is_identity(matrix_power(r.action(), saturating_pow(pv, r.order_exponent() - 1))));
        }
}

TEST_CASE("module construction rejects bad actions") {
    Prime p(3);
    CHECK_THROWS_AS(FpCModule(FpMatrix(p, 2, 3)), usage_error);
    CHECK_THROWS_AS(FpCModule(FpMatrix(p, 2, 2)), usage_error);                        // singular
    CHECK_THROWS_AS(FpCModule(FpMatrix::from_rows(p, {{2, 0}, {0, 1}})), usage_error);  // order 2, not a power of 3
}

TEST_CASE("coinvariant dimensions") {
    CHECK(diagonal_coinvariants(regular_module(Prime(2), 1), regular_module(Prime(2), 1)).dim == 1);
    CHECK(diagonal_coinvariants(regular_module(Prime(2), 3), regular_module(Prime(2), 3)).dim == 3);
    CHECK(diagonal_coinvariants(regular_module(Prime(3), 4), regular_module(Prime(3), 4)).dim == 4);
    for (std::uint32_t pv : {2u, 3u})
        for (std::size_t i = 1; i <= 8; ++i) {
            FpCModule r = regular_module(Prime(pv), i);
            CHECK(tensor_over_groupring(r, r).dim == i);
            CHECK(diagonal_coinvariants(r, r).dim == i);
        }
}

TEST_CASE("tensor over the group ring with mixed and trivial factors") {
    Prime p(2);
    CHECK(tensor_over_groupring(regular_module(p, 2), regular_module(p, 4)).dim == 2);
    for (std::size_t i = 1; i <= 5; ++i) {
        FpCModule r = regular_module(p, i);
        CHECK(tensor_over_groupring(trivial_module(p, 1), r).dim == z_action_homology(r).h0);
    }
}

TEST_CASE("projection is onto the quotient and kills the relations") {
    Prime p(3);
    FpCModule r = regular_module(p, 4);
    QuotientDescription q = tensor_over_groupring(r, r);
    CHECK(q.projection.rows() == q.dim);
    CHECK(q.projection.cols() == 16);
    CHECK(rank(q.projection) == q.dim);
    for (std::size_t k = 0; k < q.relations.dim(); ++k) {
        auto v = apply(q.projection, q.relations.basis().row(k));
        CHECK(std::all_of(v.begin(), v.end(), [](residue x) { return x == 0; }));
    }
}

TEST_CASE("antipode isomorphism") {
    for (std::uint32_t pv : {2u, 3u})
        for (std::size_t i = 1; i <= 6; ++i) {
            FpCModule r = regular_module(Prime(pv), i);
            AntipodeIsoReport rep = antipode_iso_check(r, ring_antipode(r, i));
            CHECK(rep.bijective);
            CHECK(rep.coinvariants_dim == i);
            CHECK(rep.tensor_dim == i);
        }
    Prime p(5);
    FpCModule t = trivial_module(p, 1);
    AntipodeIsoReport rep = antipode_iso_check(t, ModuleAntipode(t, FpMatrix::identity(p, 1)));
    CHECK(rep.bijective);
    CHECK(rep.coinvariants_dim == 1);
    CHECK(rep.tensor_dim == 1);
}

TEST_CASE("ring antipode matches sigma on monomials") {
    Prime p(3);
    const std::size_t i = 5;
    FpCModule r = regular_module(p, i);
    ModuleAntipode s = ring_antipode(r, i);
    for (std::size_t j = 0; j < i; ++j) {
        TruncSeries img = sigma(TruncSeries::monomial(p, i, j));
        for (std::size_t row = 0; row < i; ++row) CHECK(s.matrix()(row, j) == img[row]);
    }
}

TEST_CASE("a corrupted antipode is rejected") {
    Prime p(3);
    FpCModule r = regular_module(p, 3);
    CHECK_THROWS_AS(ModuleAntipode(r, FpMatrix::identity(p, 3)), usage_error);
    CHECK_THROWS_AS(ModuleAntipode(r, FpMatrix(p, 3, 3)), usage_error);
}

TEST_CASE("homology of the generator action") {
    for (std::uint32_t pv : {2u, 3u, 5u})
        for (std::size_t i = 1; i <= 6; ++i) {
            ZActionHomology h = z_action_homology(regular_module(Prime(pv), i));
            CHECK(h.h0 == 1);
            CHECK(h.h1 == 1);
        }
    ZActionHomology t = z_action_homology(trivial_module(Prime(7), 4));
    CHECK(t.h0 == 4);
    CHECK(t.h1 == 4);
    // free module over F_p[C_{p^k}] realized as R_{p^k}
    for (unsigned k = 1; k <= 3; ++k) {
        ZActionHomology f = z_action_homology(regular_module(Prime(2), saturating_pow(2, k)));
        CHECK(f.h0 == 1);
        CHECK(f.h1 == 1);
    }
}
