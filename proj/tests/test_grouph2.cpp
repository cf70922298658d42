#include <doctest.h>

#include <algorithm>
#include <array>

#include "procyclic/errors.hpp"
#include "procyclic/grouph2.hpp"

using namespace procyclic;

namespace {

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const std::size_t m = a.order(), n = b.order(), order = m * n;
    std::vector<element> table(order * order);
    for (element x = 0; x < order; ++x)
        for (element y = 0; y < order; ++y)
            table[x * order + y] = static_cast<element>(a.mul(x % m, y % m) + m * b.mul(x / m, y / m));
    std::vector<element> gens;
    std::vector<std::string> names;
    for (element g : a.generators()) gens.push_back(g);
    for (element g : b.generators()) gens.push_back(static_cast<element>(m * g));
    for (const auto& s : a.generator_names()) names.push_back("a." + s);
    for (const auto& s : b.generator_names()) names.push_back("b." + s);
    return FiniteGroup(a.prime(), std::move(table), std::move(gens), std::move(names));
}

// Dihedral group of order 8: (r, s)(r', s') = (r + (-1)^s r', s + s').
FiniteGroup dihedral8() {
    std::vector<element> table(64);
    for (element x = 0; x < 8; ++x)
        for (element y = 0; y < 8; ++y) {
            const unsigned r = x % 4, s = x / 4, r2 = y % 4, s2 = y / 4;
            const unsigned rr = (s ? r + 4 - r2 : r + r2) % 4;
            table[x * 8 + y] = static_cast<element>(rr + 4 * ((s + s2) % 2));
        }
    return FiniteGroup(Prime(2), std::move(table), {1, 4}, {"r", "s"});
}

// Quaternion group: index 2*u + sign for the units 1, i, j, k.
FiniteGroup quaternion8() {
    // unit products: u * v = sign * w
    const std::array<std::array<std::pair<int, int>, 4>, 4> prod{{
        {{{0, 0}, {1, 0}, {2, 0}, {3, 0}}},
        {{{1, 0}, {0, 1}, {3, 0}, {2, 1}}},
        {{{2, 0}, {3, 1}, {0, 1}, {1, 0}}},
        {{{3, 0}, {2, 0}, {1, 1}, {0, 1}}},
    }};
    std::vector<element> table(64);
    for (element x = 0; x < 8; ++x)
        for (element y = 0; y < 8; ++y) {
            auto [w, sign] = prod[x / 2][y / 2];
            table[x * 8 + y] = static_cast<element>(2 * w + ((sign + x % 2 + y % 2) % 2));
        }
    return FiniteGroup(Prime(2), std::move(table), {2, 4}, {"i", "j"});
}

} // namespace

TEST_CASE("bar H2 on cyclic groups") {
    CHECK(bar_h2(cyclic_group(Prime(2), 1)) == 1);
    CHECK(bar_h2(cyclic_group(Prime(3), 1)) == 1);
    CHECK(bar_h2(cyclic_group(Prime(5), 1)) == 1);
    CHECK(bar_h2(cyclic_group(Prime(2), 2)) == 1);
    CHECK(bar_h2(cyclic_group(Prime(2), 3)) == 1);
    CHECK(bar_h2(cyclic_group(Prime(2), 4)) == 1);
    CHECK(bar_h2(cyclic_group(Prime(3), 2)) == 1);
    CHECK(bar_h2(cyclic_group(Prime(2), 0)) == 0);
}

TEST_CASE("bar H2 on elementary abelian groups") {
    CHECK(bar_h2(elementary_abelian(Prime(2), 2)) == 3);
    CHECK(bar_h2(elementary_abelian(Prime(3), 2)) == 3);
    CHECK(bar_h2(elementary_abelian(Prime(2), 3)) == 6);
    CHECK(bar_h2(elementary_abelian(Prime(3), 3)) == 6);
    CHECK(bar_h2(elementary_abelian(Prime(2), 4)) == 10);
    CHECK(bar_h2(elementary_abelian(Prime(2), 5)) == 15);
}

TEST_CASE("bar H2 on products and small nonabelian groups") {
    // Kunneth: H2(A x B) = H2(A) + H2(B) + H1(A) (x) H1(B)
    CHECK(bar_h2(direct_product(cyclic_group(Prime(2), 2), cyclic_group(Prime(2), 1))) == 3);
    CHECK(bar_h2(direct_product(cyclic_group(Prime(2), 2), cyclic_group(Prime(2), 2))) == 3);
    CHECK(bar_h2(direct_product(cyclic_group(Prime(3), 2), cyclic_group(Prime(3), 1))) == 3);
    // universal coefficients: dim = rank of the Schur multiplier + d(G)
    FiniteGroup d8 = dihedral8(), q8 = quaternion8();
    CHECK_FALSE(d8.is_abelian());
    CHECK_FALSE(q8.is_abelian());
    CHECK(q8.pow(2, 2) == q8.pow(4, 2));  // i^2 = j^2 = -1
    CHECK(bar_h2(d8) == 3);
    CHECK(bar_h2(q8) == 2);
}

TEST_CASE("bar budget") {
    CHECK_THROWS_AS(bar_h2(build_lamplighter(Prime(3), 2, 1)), resource_error);
    CHECK_THROWS_AS(bar_h2(elementary_abelian(Prime(3), 3), 9), resource_error);
}

TEST_CASE("Frattini subgroup") {
    CHECK(frattini_subgroup(elementary_abelian(Prime(2), 3)).size() == 1);
    CHECK(frattini_subgroup(cyclic_group(Prime(2), 3)).size() == 4);
    CHECK(frattini_subgroup(dihedral8()).size() == 2);
}

TEST_CASE("Hopf quotient") {
    FiniteGroup v = elementary_abelian(Prime(2), 2);
    CHECK(hopf_quotient(v, {0}) == 0);
    CHECK(hopf_quotient(v, {0, 1, 2, 3}) == 0);
    CHECK(hopf_quotient(v, {0, 1}) == 0);
    FiniteGroup z4 = cyclic_group(Prime(2), 2);
    CHECK(hopf_quotient(z4, {0, 2}) == 1);
    FiniteGroup z9 = cyclic_group(Prime(3), 2);
    CHECK(hopf_quotient(z9, {0, 3, 6}) == 1);

    FiniteGroup lamp = build_lamplighter(Prime(2), 2, 1);
    SemidirectElement e{TruncSeries(Prime(2), {1, 0}), TruncSeries(Prime(2), {0, 0}), 0};
    std::vector<element> not_normal = subgroup_closure(lamp, {encode_lamplighter(e, 2, 1)});
    CHECK_THROWS_AS(hopf_quotient(lamp, not_normal), usage_error);
}

TEST_CASE("five-term exactness") {
    FiniteGroup v = elementary_abelian(Prime(2), 2);
    FiveTermReport diag = five_term_check(v, {0, 3});
    CHECK(diag.equal);
    CHECK(diag.h2_group == 3);
    CHECK(diag.h2_quotient == 1);

    FiveTermReport whole = five_term_check(v, {0, 1, 2, 3});
    CHECK(whole.cokernel_dim == 0);
    CHECK(whole.hopf_dim == 0);
    CHECK(whole.equal);

    FiveTermReport z4 = five_term_check(cyclic_group(Prime(2), 2), {0, 2});
    CHECK(z4.cokernel_dim == 1);
    CHECK(z4.equal);

    FiniteGroup lamp = build_lamplighter(Prime(2), 2, 1);
    SemidirectElement soc{TruncSeries(Prime(2), {0, 1}), TruncSeries(Prime(2), {0, 0}), 0};
    std::vector<element> socle{lamp.identity(), encode_lamplighter(soc, 2, 1)};
    std::sort(socle.begin(), socle.end());
    CHECK(is_normal(lamp, socle));
    CHECK(five_term_check(lamp, socle).equal);

    FiniteGroup d8 = dihedral8();
    CHECK(five_term_check(d8, d8.center()).equal);
    CHECK(five_term_check(d8, frattini_subgroup(d8)).equal);
    FiniteGroup q8 = quaternion8();
    CHECK(five_term_check(q8, q8.center()).equal);
    CHECK(five_term_check(q8, {0}).equal);

    CHECK_THROWS_AS(five_term_check(build_lamplighter(Prime(3), 2, 1), {0}), resource_error);
}

TEST_CASE("tower rows") {
    std::vector<TowerRow> rows = tower_report(Prime(2), 2);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].order == 8);
    CHECK(rows[0].h2_dim == 6);
    CHECK(rows[0].coinv_dim == 1);
    CHECK(rows[0].elementary_h2 == 1);
    CHECK(rows[1].order == 64);
    CHECK(rows[1].coinv_dim == 2);
    CHECK(rows[1].tensor_gr_dim == 2);
    CHECK(rows[1].elementary_h2 == 3);
    for (const auto& r : rows) {
        CHECK(r.collapse_holds);
        CHECK(r.inequality_holds);
        CHECK(r.h2_dim >= r.coinv_dim + 2 * r.elementary_h2);
    }

    std::vector<TowerRow> r3 = tower_report(Prime(3), 1);
    REQUIRE(r3.size() == 1);
    CHECK(r3[0].order == 27);
    CHECK(r3[0].coinv_dim == 1);
    CHECK(r3[0].h2_dim == 6);

    try {
        tower_report(Prime(2), 3);
        FAIL("expected a budget stop");
    } catch (const tower_resource_error& e) {
        CHECK(e.partial_rows().size() == 2);
    }
}
