#include <doctest.h>

#include <random>

#include "procyclic/errors.hpp"
#include "procyclic/linfp.hpp"

using namespace procyclic;

namespace {

FpMatrix random_matrix(std::mt19937_64& rng, Prime p, std::size_t r, std::size_t c, double fill = 1.0) {
    FpMatrix m(p, r, c);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (u(rng) < fill) m.set(i, j, static_cast<residue>(rng() % p.value()));
    return m;
}

// Low-rank matrix as a product of thin factors.
FpMatrix low_rank(std::mt19937_64& rng, Prime p, std::size_t n, std::size_t r) {
    return random_matrix(rng, p, n, r) * random_matrix(rng, p, r, n);
}

// Division-free elimination: row_j <- a * row_j - b * row_pivot, no inverses taken.
std::size_t fraction_free_rank(const FpMatrix& m) {
    const std::uint64_t p = m.prime().value();
    std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t piv = rank;
        while (piv < m.rows() && a[piv][c] == 0) ++piv;
        if (piv == m.rows()) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            const std::uint64_t lead = a[rank][c], factor = a[r][c];
            if (factor == 0) continue;
            for (std::size_t j = c; j < m.cols(); ++j) a[r][j] = (lead * a[r][j] + (p - factor) * a[rank][j]) % p;
        }
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("matrix basics") {
    Prime p(5);
    FpMatrix a = FpMatrix::from_rows(p, {{1, 2}, {3, -1}});
    CHECK(a(1, 1) == 4);
    CHECK(multiply(a, FpMatrix::identity(p, 2)) == a);
    CHECK(transpose(transpose(a)) == a);
    CHECK(is_identity(matrix_power(FpMatrix::identity(p, 3), 7)));
    CHECK(subtract(a, a) == FpMatrix(p, 2, 2));
    FpMatrix k = kronecker(a, FpMatrix::identity(p, 2));
    CHECK(k.rows() == 4);
    CHECK(k(2, 0) == 3);
    CHECK(k(3, 3) == 4);
    CHECK(apply(a, std::vector<residue>{1, 1}) == std::vector<residue>{3, 2});
    CHECK_THROWS_AS(multiply(a, FpMatrix(p, 3, 3)), usage_error);
    CHECK_THROWS_AS(FpMatrix::from_rows(p, {{1, 2}, {3}}), usage_error);
}

TEST_CASE("rank on trivial inputs") {
    for (std::uint32_t pv : {2u, 3u, 65521u}) {
        Prime p(pv);
        CHECK(rank(FpMatrix::identity(p, 17)) == 17);
        CHECK(rank(FpMatrix(p, 9, 13)) == 0);
        CHECK(rank_sparse(SparseFpMatrix::from_dense(FpMatrix::identity(p, 70))) == 70);
    }
}

TEST_CASE("rank matches the fraction-free oracle") {
    std::mt19937_64 rng(2024);
    for (std::uint32_t pv : {2u, 3u, 7u}) {
        Prime p(pv);
        for (int t = 0; t < 5; ++t) {
            FpMatrix full = random_matrix(rng, p, 50, 50);
            FpMatrix thin = low_rank(rng, p, 50, 1 + rng() % 40);
            FpMatrix sparse = random_matrix(rng, p, 60, 90, 0.03);
            for (const FpMatrix* m : {&full, &thin, &sparse}) {
                const std::size_t expect = fraction_free_rank(*m);
                CHECK(rank_dense(*m) == expect);
                CHECK(rank_sparse(SparseFpMatrix::from_dense(*m)) == expect);
                CHECK(rank(*m) == expect);
                CHECK(rref(*m).rank() == expect);
            }
        }
    }
}

TEST_CASE("rref is reduced") {
    std::mt19937_64 rng(5);
    Prime p(3);
    FpMatrix m = low_rank(rng, p, 12, 5);
    RowEchelonForm e = rref(m);
    for (std::size_t r = 0; r < e.rank(); ++r) {
        CHECK(e.reduced(r, e.pivots[r]) == 1);
        for (std::size_t q = 0; q < e.reduced.rows(); ++q)
            if (q != r) CHECK(e.reduced(q, e.pivots[r]) == 0);
        if (r) CHECK(e.pivots[r] > e.pivots[r - 1]);
    }
    for (std::size_t r = e.rank(); r < e.reduced.rows(); ++r)
        for (std::size_t c = 0; c < e.reduced.cols(); ++c) CHECK(e.reduced(r, c) == 0);
}

TEST_CASE("kernel basis") {
    Prime p(3);
    CHECK(kernel_basis(FpMatrix::identity(p, 6)).dim() == 0);
    CHECK(kernel_basis(FpMatrix(p, 4, 7)).dim() == 7);
    std::mt19937_64 rng(31);
    for (int t = 0; t < 10; ++t) {
        FpMatrix m = low_rank(rng, p, 20, 1 + rng() % 15);
        FpSubspace k = kernel_basis(m);
        CHECK(k.dim() == 20 - rank(m));
        for (std::size_t r = 0; r < k.dim(); ++r) {
            auto v = apply(m, k.basis().row(r));
            CHECK(std::all_of(v.begin(), v.end(), [](residue x) { return x == 0; }));
        }
    }
}

TEST_CASE("subspaces and quotient dimensions") {
    Prime p(5);
    CHECK(quotient_dim(8, FpSubspace(p, 8)) == 8);
    std::vector<std::vector<residue>> all;
    for (std::size_t i = 0; i < 8; ++i) {
        std::vector<residue> e(8, 0);
        e[i] = 3;
        all.push_back(e);
    }
    CHECK(quotient_dim(8, FpSubspace::span(p, 8, all)) == 0);

    std::mt19937_64 rng(1);
    for (std::size_t k = 1; k < 8; ++k) {
        FpMatrix m = random_matrix(rng, p, k, 12);
        if (rank(m) != k) continue;
        std::vector<std::vector<residue>> vs;
        for (std::size_t r = 0; r < k; ++r) vs.emplace_back(m.row(r).begin(), m.row(r).end());
        FpSubspace s = FpSubspace::span(p, 12, vs);
        CHECK(quotient_dim(12, s) == 12 - k);
        for (const auto& v : vs) CHECK(s.contains(v));
    }
    CHECK_THROWS_AS(quotient_dim(9, FpSubspace(p, 8)), usage_error);
}

TEST_CASE("echelon basis: binary and generic paths agree with dense rank") {
    std::mt19937_64 rng(77);
    for (std::uint32_t pv : {2u, 3u}) {
        Prime p(pv);
        FpMatrix m = low_rank(rng, p, 150, 40);
        EchelonBasis b(p, 150);
        std::size_t inserted = 0;
        for (std::size_t r = 0; r < m.rows(); ++r) inserted += b.insert(m.row(r)) ? 1 : 0;
        const std::size_t expect = rank(m);
        CHECK(b.rank() == expect);
        CHECK(inserted == expect);
        for (std::size_t r = 0; r < m.rows(); ++r) CHECK(b.contains(m.row(r)));
        FpSubspace s = b.subspace();
        CHECK(s.dim() == expect);
        for (std::size_t r = 0; r < m.rows(); ++r) CHECK(s.contains(m.row(r)));

        SparseVector sv{{3, 1}, {140, static_cast<residue>(pv - 1)}};
        EchelonBasis c(p, 150);
        CHECK(c.insert_sparse(sv));
        CHECK_FALSE(c.insert_sparse(sv));
        std::vector<residue> dense(150, 0);
        dense[3] = 1;
        dense[140] = pv - 1;
        CHECK(c.contains(dense));
    }
}

TEST_CASE("sparse matrix accumulation") {
    Prime p(3);
    SparseFpMatrix s(p, 3, 2);
    s.add(1, 0, 2);
    s.add(1, 0, 1);
    s.add(2, 1, 1);
    CHECK(s.column(0).empty());
    CHECK(s.to_dense() == FpMatrix::from_rows(p, {{0, 0}, {0, 0}, {0, 1}}));
}
