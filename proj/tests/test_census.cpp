#include <doctest.h>

#include <random>
#include <set>

#include "procyclic/census.hpp"
#include "procyclic/errors.hpp"

using namespace procyclic;

namespace {

// Every element of F_p[x]/(x^n) as a series; n small.
std::vector<TruncSeries> whole_ring(Prime p, std::size_t n) {
    std::vector<TruncSeries> out;
    const std::uint64_t count = saturating_pow(p.value(), n);
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<residue> c(n);
        std::uint64_t x = code;
        for (auto& d : c) {
            d = static_cast<residue>(x % p.value());
            x /= p.value();
        }
        out.emplace_back(p, c, n);
    }
    return out;
}

// Brute-force oracle for the ratio set: test every r in the ring against every tuple.
std::set<std::vector<residue>> brute_ratio_set(Prime p, std::int64_t a, std::int64_t b, unsigned k, unsigned level) {
    CensusSet A = enum_A(p, level);
    const std::size_t n = A.precision();
    const std::vector<TruncSeries> ring = whole_ring(p, n);
    std::set<std::vector<residue>> out;
    for (const auto& x : A.elements())
        for (const auto& y : A.elements()) {
            TruncSeries num = scale(x, p.reduce(a)), den = scale(y, p.reduce(b));
            if (den.valuation() >= saturating_pow(p.value(), k)) continue;
            for (const auto& r : ring)
                if (mul_schoolbook(r, den) == num) out.emplace(r.coeffs().begin(), r.coeffs().end());
        }
    return out;
}

std::set<std::vector<residue>> as_set(const CensusSet& s) {
    std::set<std::vector<residue>> out;
    for (const auto& e : s.elements()) out.emplace(e.coeffs().begin(), e.coeffs().end());
    return out;
}

} // namespace

TEST_CASE("powers of 1-x") {
    Prime p(2);
    CHECK(as_set(enum_A(p, 1)) == std::set<std::vector<residue>>{{1, 0}, {1, 1}});
    CHECK(as_set(enum_A(p, 2)) == std::set<std::vector<residue>>{{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 1, 1, 1}});
    for (std::uint32_t pv : {2u, 3u})
        for (unsigned i = 1; i <= 4; ++i) CHECK(enum_A(Prime(pv), i).size() == saturating_pow(pv, i));
    CHECK_THROWS_AS(enum_A(p, 17), resource_error);
}

TEST_CASE("census set membership") {
    Prime p(3);
    CensusSet s(p, 1);
    CHECK(s.insert(TruncSeries(p, {1, 2, 0})));
    CHECK_FALSE(s.insert(TruncSeries(p, {1, 2, 0})));
    CHECK(s.contains(TruncSeries(p, {1, 2, 0})));
    CHECK_FALSE(s.contains(TruncSeries(p, {1, 2, 1})));
    CHECK_FALSE(s.contains(TruncSeries(p, {1, 2})));
    CHECK_THROWS_AS(s.insert(TruncSeries(p, {1, 2})), usage_error);
    CHECK(pack(TruncSeries(p, {1, 0})) != pack(TruncSeries(p, {1, 0, 0})));
}

TEST_CASE("ratio set matches the brute-force oracle") {
    for (auto [pv, a, b, k, level] : std::vector<std::tuple<std::uint32_t, std::int64_t, std::int64_t, unsigned, unsigned>>{
             {2, 1, 1, 1, 1}, {2, 1, 1, 1, 2}, {2, 1, 1, 1, 3}, {2, 1, 1, 2, 3}, {2, 0, 1, 1, 2}, {3, 1, 2, 1, 1}, {3, 2, 1, 1, 1}}) {
        Prime p(pv);
        RatioCensus rc = census_ratio_set(p, {a}, {b}, k, level);
        CHECK(as_set(rc.set) == brute_ratio_set(p, a, b, k, level));
        CHECK(rc.bound_holds);
        CHECK(rc.tuple_bound_holds);
        CHECK(rc.solution_bound_holds);
    }
}

TEST_CASE("counting bound for n = 1, k = 1 over F_2") {
    Prime p(2);
    RatioCensus rc = census_ratio_set(p, {1}, {1}, 1, 2);
    CHECK(rc.bound_exponent == 6);
    CHECK(rc.set.size() <= 64);
    double previous = 2.0;
    for (unsigned i = 1; i <= 4; ++i) {
        RatioCensus r = census_ratio_set(p, {1}, {1}, 1, i);
        const double ratio = static_cast<double>(r.set.size()) / std::pow(2.0, static_cast<double>(1u << i));
        CHECK(ratio < previous);
        previous = ratio;
    }
    CHECK(previous < 1e-3);
}

TEST_CASE("zero numerator gives the annihilators") {
    Prime p(2);
    RatioCensus rc = census_ratio_set(p, {0}, {1}, 1, 2);
    CHECK(rc.set.contains(TruncSeries(p, 4)));
}

TEST_CASE("ratio set argument checks") {
    Prime p(2);
    CHECK_THROWS_AS(census_ratio_set(p, {1}, {1, 1}, 1, 2), usage_error);
    CHECK_THROWS_AS(census_ratio_set(p, {1}, {1}, 3, 2), usage_error);
    CHECK_THROWS_AS(census_ratio_set(p, {1}, {1}, 0, 2), usage_error);
    CHECK_THROWS_AS(census_ratio_set(p, {1, 1, 1, 1}, {1, 1, 1, 1}, 1, 4), resource_error);
}

TEST_CASE("sum set") {
    Prime p(2);
    CensusSet a = enum_A(p, 2);
    CensusSet s = census_sum_set(a, {TruncSeries::one(p, 4)});
    CHECK(as_set(s) == as_set(a));
    CensusSet two = census_sum_set(a, {TruncSeries::one(p, 4), TruncSeries::monomial(p, 4, 1)});
    CHECK(two.size() <= a.size() * a.size());
    CHECK(two.contains(add(a.elements()[0], mul(a.elements()[1], TruncSeries::monomial(p, 4, 1)))));
}

TEST_CASE("density gap over the powers of 1-x") {
    Prime p(2);
    CensusProvider provider = [p](unsigned level) { return enum_A(p, level); };
    DensityGap gap = density_gap(p, provider, TruncSeries(p, 16), 1, 4);
    CHECK(gap.level <= 5);
    CHECK(ball_misses_census(enum_A(p, gap.level), gap.witness));
    for (std::size_t j = 0; j < 2; ++j) CHECK(gap.witness[j] == 0);
    CHECK_FALSE(gap.log.empty());
}

TEST_CASE("density gap with the whole ring as census is exhausted") {
    Prime p(2);
    CensusProvider full = [p](unsigned level) {
        CensusSet s(p, level);
        for (auto& r : whole_ring(p, saturating_pow(2, level))) s.insert(r);
        return s;
    };
    CHECK_THROWS_AS(density_gap(p, full, TruncSeries(p, 8), 1, 2), search_exhausted_error);
}

TEST_CASE("density gap with the singleton census {0}") {
    Prime p(3);
    CensusProvider zero = [p](unsigned level) {
        CensusSet s(p, level);
        s.insert(TruncSeries(p, saturating_pow(3, level)));
        return s;
    };
    DensityGap gap = density_gap(p, zero, TruncSeries(p, 9), 1, 1);
    CHECK(gap.level == 2);
    CHECK_FALSE(gap.witness.is_zero());
}

TEST_CASE("kappa and mu") {
    Prime p(2);
    const std::size_t n = 8;
    TruncSeries u(p, {1, 0, 1, 1, 0, 1, 0, 1});
    CHECK(kappa(LaurentTrunc(0, u)) == TensorRep{u, 0});

    // x^{-2} + 1  ->  (1 + x^2) (x) x^{-2}
    LaurentTrunc l = LaurentTrunc::from_coefficients(p, -2, {1, 0, 1, 0});
    CHECK(kappa(l) == TensorRep{TruncSeries(p, {1, 0, 1, 0}), 2});

    CHECK(mu({TruncSeries::one(p, n), 0}) == LaurentTrunc(0, TruncSeries::one(p, n)));
    LaurentTrunc m = mu({TruncSeries(p, {1, 1, 0, 0}), 3});
    CHECK(m.valuation() == -3);
    CHECK(m.body() == TruncSeries(p, {1, 1, 0, 0}));
}

TEST_CASE("mu kappa identities on random inputs") {
    std::mt19937_64 rng(123);
    for (std::uint32_t pv : {2u, 3u, 5u}) {
        Prime p(pv);
        for (int t = 0; t < 100; ++t) {
            std::vector<residue> c(64);
            for (auto& x : c) x = static_cast<residue>(rng() % pv);
            TruncSeries body(p, c, 64);
            const auto val = static_cast<std::int64_t>(rng() % 64) - 32;
            LaurentTrunc l(val, body);
            CHECK(mu(kappa(l)) == l);
            TensorRep rep = normalize({body, rng() % 64});
            CHECK(kappa(mu(rep)) == rep);
        }
    }
}

TEST_CASE("normalize moves x across the tensor sign") {
    std::mt19937_64 rng(9);
    Prime p(3);
    for (int t = 0; t < 20; ++t) {
        std::vector<residue> c(16);
        for (auto& x : c) x = static_cast<residue>(rng() % 3);
        c[0] = 1 + static_cast<residue>(rng() % 2);
        TruncSeries u(p, c, 16);
        const std::uint64_t n = 1 + rng() % 10;
        CHECK(normalize({shift_up(u, 1), n}) == normalize({truncate(u, 15), n - 1}));
    }
    CHECK(normalize({TruncSeries(p, 4), 3}) == TensorRep{TruncSeries(p, 4), 0});
}
