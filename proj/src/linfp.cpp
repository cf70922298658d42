#include "procyclic/linfp.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "procyclic/errors.hpp"

namespace procyclic {

// ---------------------------------------------------------------- FpMatrix

FpMatrix::FpMatrix(Prime prime, std::size_t rows, std::size_t cols)
    : prime_(prime), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FpMatrix FpMatrix::identity(Prime prime, std::size_t n) {
    FpMatrix m(prime, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FpMatrix FpMatrix::from_rows(Prime prime, const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    FpMatrix m(prime, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw usage_error("from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m.data_[r * cols + c] = prime.reduce(rows[r][c]);
    }
    return m;
}

double FpMatrix::density() const noexcept {
    if (data_.empty()) return 1.0;
    auto nz = std::count_if(data_.begin(), data_.end(), [](residue v) { return v != 0; });
    return static_cast<double>(nz) / static_cast<double>(data_.size());
}

FpMatrix multiply(const FpMatrix& a, const FpMatrix& b) {
    if (!(a.prime() == b.prime()) || a.cols() != b.rows()) throw usage_error("multiply: incompatible matrices");
    const Prime& P = a.prime();
    FpMatrix out(P, a.rows(), b.cols());
    std::vector<std::uint64_t> acc(b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            residue x = a(r, k);
            if (x == 0) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) acc[c] = (acc[c] + static_cast<std::uint64_t>(x) * b(k, c)) % P.value();
        }
        for (std::size_t c = 0; c < b.cols(); ++c) out.set(r, c, static_cast<residue>(acc[c]));
    }
    return out;
}

std::vector<residue> apply(const FpMatrix& a, std::span<const residue> v) {
    if (v.size() != a.cols()) throw usage_error("apply: vector length mismatch");
    std::vector<residue> out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < a.cols(); ++c) acc = (acc + static_cast<std::uint64_t>(a(r, c)) * v[c]) % a.prime().value();
        out[r] = static_cast<residue>(acc);
    }
    return out;
}

FpMatrix transpose(const FpMatrix& a) {
    FpMatrix t(a.prime(), a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) t.set(c, r, a(r, c));
    return t;
}

FpMatrix subtract(const FpMatrix& a, const FpMatrix& b) {
    if (!(a.prime() == b.prime()) || a.rows() != b.rows() || a.cols() != b.cols())
        throw usage_error("subtract: incompatible matrices");
    FpMatrix out(a.prime(), a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.prime().sub(a(r, c), b(r, c)));
    return out;
}

FpMatrix kronecker(const FpMatrix& a, const FpMatrix& b) {
    if (!(a.prime() == b.prime())) throw usage_error("kronecker: mismatched primes");
    const Prime& P = a.prime();
    FpMatrix out(P, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            residue x = a(i, j);
            if (x == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) out.set(i * b.rows() + k, j * b.cols() + l, P.mul(x, b(k, l)));
        }
    return out;
}

FpMatrix matrix_power(const FpMatrix& a, std::uint64_t e) {
    if (a.rows() != a.cols()) throw usage_error("matrix_power: matrix not square");
    FpMatrix result = FpMatrix::identity(a.prime(), a.rows());
    FpMatrix base = a;
    while (e) {
        if (e & 1) result = multiply(result, base);
        e >>= 1;
        if (e) base = multiply(base, base);
    }
    return result;
}

bool is_identity(const FpMatrix& a) noexcept {
    if (a.rows() != a.cols()) return false;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a(r, c) != (r == c ? 1u : 0u)) return false;
    return true;
}

// ---------------------------------------------------------- SparseFpMatrix

SparseFpMatrix::SparseFpMatrix(Prime prime, std::size_t rows, std::size_t cols)
    : prime_(prime), rows_(rows), columns_(cols) {}

SparseFpMatrix SparseFpMatrix::from_dense(const FpMatrix& m) {
    SparseFpMatrix s(m.prime(), m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0) s.columns_[c].emplace_back(static_cast<std::uint32_t>(r), m(r, c));
    return s;
}

void SparseFpMatrix::add(std::size_t r, std::size_t c, residue v) {
    if (r >= rows_ || c >= columns_.size()) throw usage_error("SparseFpMatrix::add: index out of range");
    v %= prime_.value();
    if (v == 0) return;
    auto& col = columns_[c];
    auto it = std::find_if(col.begin(), col.end(), [&](const auto& e) { return e.first == r; });
    if (it == col.end()) {
        col.emplace_back(static_cast<std::uint32_t>(r), v);
        return;
    }
    it->second = prime_.add(it->second, v);
    if (it->second == 0) col.erase(it);
}

FpMatrix SparseFpMatrix::to_dense() const {
    FpMatrix m(prime_, rows_, columns_.size());
    for (std::size_t c = 0; c < columns_.size(); ++c)
        for (const auto& [r, v] : columns_[c]) m.set(r, c, v);
    return m;
}

// ------------------------------------------------------------ EchelonBasis

EchelonBasis::EchelonBasis(Prime prime, std::size_t ambient)
    : prime_(prime), ambient_(ambient), words_((ambient + 63) / 64), row_of_col_(ambient, -1) {}

void EchelonBasis::reduce_generic(std::vector<residue>& w) const {
    const std::uint64_t p = prime_.value();
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        residue c = w[pivots_[r]];
        if (c == 0) continue;
        const auto& row = rows_[r];
        const std::uint64_t m = p - c;
        for (std::size_t j = pivots_[r]; j < ambient_; ++j)
            if (row[j]) w[j] = static_cast<residue>((w[j] + m * row[j]) % p);
    }
}

void EchelonBasis::reduce_binary(std::vector<std::uint64_t>& w) const {
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        std::size_t c = pivots_[r];
        if ((w[c / 64] >> (c % 64)) & 1) {
            const auto& row = bit_rows_[r];
            for (std::size_t k = c / 64; k < words_; ++k) w[k] ^= row[k];
        }
    }
}

bool EchelonBasis::insert_reduced_generic(std::vector<residue>& w) {
    std::size_t lead = ambient_;
    for (std::size_t j = 0; j < ambient_; ++j)
        if (w[j]) {
            lead = j;
            break;
        }
    if (lead == ambient_) return false;
    const Prime& P = prime_;
    if (w[lead] != 1) {
        residue s = P.inv(w[lead]);
        for (std::size_t j = lead; j < ambient_; ++j)
            if (w[j]) w[j] = P.mul(w[j], s);
    }
    // Clear the new pivot column from the existing rows.
    std::vector<std::size_t> support;
    for (std::size_t j = lead; j < ambient_; ++j)
        if (w[j]) support.push_back(j);
    const std::uint64_t p = P.value();
    for (auto& row : rows_) {
        residue c = row[lead];
        if (c == 0) continue;
        const std::uint64_t m = p - c;
        for (std::size_t j : support) row[j] = static_cast<residue>((row[j] + m * w[j]) % p);
    }
    row_of_col_[lead] = static_cast<std::int32_t>(pivots_.size());
    pivots_.push_back(lead);
    rows_.push_back(std::move(w));
    return true;
}

bool EchelonBasis::insert_reduced_binary(std::vector<std::uint64_t>& w) {
    std::size_t lead = ambient_;
    for (std::size_t k = 0; k < words_; ++k)
        if (w[k]) {
            lead = k * 64 + static_cast<std::size_t>(std::countr_zero(w[k]));
            break;
        }
    if (lead == ambient_) return false;
    const std::size_t word = lead / 64;
    const std::uint64_t bit = std::uint64_t{1} << (lead % 64);
    for (auto& row : bit_rows_)
        if (row[word] & bit)
            for (std::size_t k = word; k < words_; ++k) row[k] ^= w[k];
    row_of_col_[lead] = static_cast<std::int32_t>(pivots_.size());
    pivots_.push_back(lead);
    bit_rows_.push_back(std::move(w));
    return true;
}

bool EchelonBasis::insert(std::span<const residue> v) {
    if (v.size() != ambient_) throw usage_error("EchelonBasis::insert: wrong vector length");
    if (prime_.value() == 2) {
        std::vector<std::uint64_t> w(words_, 0);
        for (std::size_t j = 0; j < ambient_; ++j)
            if (v[j] & 1) w[j / 64] |= std::uint64_t{1} << (j % 64);
        reduce_binary(w);
        return insert_reduced_binary(w);
    }
    std::vector<residue> w(v.begin(), v.end());
    for (auto& x : w) x %= prime_.value();
    reduce_generic(w);
    return insert_reduced_generic(w);
}

bool EchelonBasis::insert_sparse(const SparseVector& v) {
    const std::uint64_t p = prime_.value();
    if (p == 2) {
        std::vector<std::uint64_t> w(words_, 0);
        for (const auto& [j, x] : v) {
            if (j >= ambient_) throw usage_error("EchelonBasis::insert_sparse: index out of range");
            if (x & 1) w[j / 64] ^= std::uint64_t{1} << (j % 64);
        }
        // Rows vanish on every other pivot column, so only pivots in the
        // original support need clearing.
        for (const auto& [j, x] : v) {
            std::int32_t r = row_of_col_[j];
            if (r < 0 || !((w[j / 64] >> (j % 64)) & 1)) continue;
            const auto& row = bit_rows_[static_cast<std::size_t>(r)];
            for (std::size_t k = j / 64; k < words_; ++k) w[k] ^= row[k];
        }
        return insert_reduced_binary(w);
    }
    std::vector<residue> w(ambient_, 0);
    for (const auto& [j, x] : v) {
        if (j >= ambient_) throw usage_error("EchelonBasis::insert_sparse: index out of range");
        w[j] = prime_.add(w[j], x % prime_.value());
    }
    for (const auto& [j, x] : v) {
        std::int32_t r = row_of_col_[j];
        if (r < 0 || w[j] == 0) continue;
        const std::uint64_t m = p - w[j];
        const auto& row = rows_[static_cast<std::size_t>(r)];
        for (std::size_t k = j; k < ambient_; ++k)
            if (row[k]) w[k] = static_cast<residue>((w[k] + m * row[k]) % p);
    }
    return insert_reduced_generic(w);
}

bool EchelonBasis::contains(std::span<const residue> v) const {
    if (v.size() != ambient_) throw usage_error("EchelonBasis::contains: wrong vector length");
    if (prime_.value() == 2) {
        std::vector<std::uint64_t> w(words_, 0);
        for (std::size_t j = 0; j < ambient_; ++j)
            if (v[j] & 1) w[j / 64] |= std::uint64_t{1} << (j % 64);
        reduce_binary(w);
        return std::all_of(w.begin(), w.end(), [](std::uint64_t x) { return x == 0; });
    }
    std::vector<residue> w(v.begin(), v.end());
    for (auto& x : w) x %= prime_.value();
    reduce_generic(w);
    return std::all_of(w.begin(), w.end(), [](residue x) { return x == 0; });
}

FpSubspace EchelonBasis::subspace() const {
    std::vector<std::size_t> order(pivots_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    FpMatrix basis(prime_, pivots_.size(), ambient_);
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::size_t r = order[i];
        pivots.push_back(pivots_[r]);
        for (std::size_t j = 0; j < ambient_; ++j) {
            residue x = prime_.value() == 2 ? static_cast<residue>((bit_rows_[r][j / 64] >> (j % 64)) & 1) : rows_[r][j];
            if (x) basis.set(i, j, x);
        }
    }
    return {std::move(basis), std::move(pivots)};
}

// ------------------------------------------------------------- FpSubspace

FpSubspace::FpSubspace(Prime prime, std::size_t ambient) : basis_(prime, 0, ambient) {}

FpSubspace FpSubspace::span(Prime prime, std::size_t ambient, const std::vector<std::vector<residue>>& vectors) {
    EchelonBasis eb(prime, ambient);
    for (const auto& v : vectors) eb.insert(v);
    return eb.subspace();
}

bool FpSubspace::contains(std::span<const residue> v) const {
    if (v.size() != ambient()) throw usage_error("FpSubspace::contains: wrong vector length");
    const Prime& P = prime();
    std::vector<residue> w(v.begin(), v.end());
    for (auto& x : w) x %= P.value();
    for (std::size_t r = 0; r < dim(); ++r) {
        residue c = w[pivots_[r]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < ambient(); ++j) w[j] = P.sub(w[j], P.mul(c, basis_(r, j)));
    }
    return std::all_of(w.begin(), w.end(), [](residue x) { return x == 0; });
}

// ------------------------------------------------------------- elimination

RowEchelonForm rref(const FpMatrix& m) {
    const Prime& P = m.prime();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<residue>> a(rows);
    for (std::size_t r = 0; r < rows; ++r) a[r].assign(m.row(r).begin(), m.row(r).end());

    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < cols && lead_row < rows; ++c) {
        std::size_t sel = lead_row;
        while (sel < rows && a[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[lead_row]);
        residue s = P.inv(a[lead_row][c]);
        for (std::size_t j = c; j < cols; ++j) a[lead_row][j] = P.mul(a[lead_row][j], s);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead_row || a[r][c] == 0) continue;
            residue f = a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[r][j] = P.sub(a[r][j], P.mul(f, a[lead_row][j]));
        }
        pivots.push_back(c);
        ++lead_row;
    }
    FpMatrix reduced(P, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) reduced.set(r, c, a[r][c]);
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank_dense(const FpMatrix& m) {
    // Forward elimination only; no back substitution needed for the rank.
    const Prime& P = m.prime();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<residue>> a(rows);
    for (std::size_t r = 0; r < rows; ++r) a[r].assign(m.row(r).begin(), m.row(r).end());
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t sel = rank;
        while (sel < rows && a[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[rank]);
        residue s = P.inv(a[rank][c]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][c] == 0) continue;
            residue f = P.mul(a[r][c], s);
            for (std::size_t j = c; j < cols; ++j) a[r][j] = P.sub(a[r][j], P.mul(f, a[rank][j]));
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_sparse(const SparseFpMatrix& m) {
    EchelonBasis eb(m.prime(), m.rows());
    for (std::size_t c = 0; c < m.cols() && eb.rank() < m.rows(); ++c) eb.insert_sparse(m.column(c));
    return eb.rank();
}

std::size_t rank(const FpMatrix& m) {
    if (m.density() < sparse_density_threshold) return rank_sparse(SparseFpMatrix::from_dense(m));
    return rank_dense(m);
}

std::size_t rank(const SparseFpMatrix& m) { return rank_sparse(m); }

FpSubspace kernel_basis(const FpMatrix& m) {
    const Prime& P = m.prime();
    RowEchelonForm e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::vector<residue>> vectors;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<residue> v(m.cols(), 0);
        v[f] = 1;
        for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = P.neg(e.reduced(r, f));
        vectors.push_back(std::move(v));
    }
    return FpSubspace::span(P, m.cols(), vectors);
}

std::size_t quotient_dim(std::size_t ambient, const FpSubspace& span) {
    if (span.ambient() != ambient)
        throw usage_error("quotient_dim: span lives in dimension " + std::to_string(span.ambient()) + ", not " +
                          std::to_string(ambient));
    return ambient - span.dim();
}

} // namespace procyclic
