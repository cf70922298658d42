#ifndef PROCYCLIC_LINFP_HPP
#define PROCYCLIC_LINFP_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "procyclic/prime.hpp"

namespace procyclic {

/// Dense row-major matrix over F_p.
class FpMatrix {
public:
    FpMatrix(Prime prime, std::size_t rows, std::size_t cols);
    static FpMatrix identity(Prime prime, std::size_t n);
    /// Entries are reduced mod p; all rows must have equal length.
    static FpMatrix from_rows(Prime prime, const std::vector<std::vector<std::int64_t>>& rows);

    const Prime& prime() const noexcept { return prime_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    residue operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, residue v) noexcept { data_[r * cols_ + c] = v % prime_.value(); }
    std::span<const residue> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

    /// Fraction of nonzero entries (1 for an empty matrix).
    double density() const noexcept;

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

private:
    Prime prime_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<residue> data_;
};

FpMatrix multiply(const FpMatrix& a, const FpMatrix& b);
std::vector<residue> apply(const FpMatrix& a, std::span<const residue> v);
FpMatrix transpose(const FpMatrix& a);
FpMatrix subtract(const FpMatrix& a, const FpMatrix& b);
FpMatrix kronecker(const FpMatrix& a, const FpMatrix& b);
FpMatrix matrix_power(const FpMatrix& a, std::uint64_t e);
bool is_identity(const FpMatrix& a) noexcept;

inline FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) { return multiply(a, b); }

/// (index, value) pairs with distinct indices and nonzero values.
using SparseVector = std::vector<std::pair<std::uint32_t, residue>>;

/// Column-compressed sparse matrix over F_p.
class SparseFpMatrix {
public:
    SparseFpMatrix(Prime prime, std::size_t rows, std::size_t cols);
    static SparseFpMatrix from_dense(const FpMatrix& m);

    const Prime& prime() const noexcept { return prime_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }
    const SparseVector& column(std::size_t c) const noexcept { return columns_[c]; }

    /// Adds v to entry (r, c); an entry that cancels to zero is removed.
    void add(std::size_t r, std::size_t c, residue v);
    FpMatrix to_dense() const;

private:
    Prime prime_;
    std::size_t rows_;
    std::vector<SparseVector> columns_;
};

/// A subspace of F_p^n held as a reduced row-echelon basis of full row rank.
class FpSubspace {
public:
    FpSubspace(Prime prime, std::size_t ambient);  // zero subspace
    static FpSubspace span(Prime prime, std::size_t ambient, const std::vector<std::vector<residue>>& vectors);

    const Prime& prime() const noexcept { return basis_.prime(); }
    std::size_t ambient() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const FpMatrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    bool contains(std::span<const residue> v) const;

private:
    friend class EchelonBasis;
    FpSubspace(FpMatrix basis, std::vector<std::size_t> pivots)
        : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    FpMatrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Incrementally grown basis kept in fully reduced echelon form, so reducing a
/// sparse vector touches only the pivot rows of its own support.
///
/// For p = 2 rows are bit-packed into 64-bit words.
class EchelonBasis {
public:
    EchelonBasis(Prime prime, std::size_t ambient);

    /// Returns true iff v was independent of the current span (and is now in it).
    bool insert(std::span<const residue> v);
    bool insert_sparse(const SparseVector& v);
    bool contains(std::span<const residue> v) const;

    std::size_t rank() const noexcept { return pivots_.size(); }
    std::size_t ambient() const noexcept { return ambient_; }
    FpSubspace subspace() const;

private:
    bool insert_reduced_generic(std::vector<residue>& w);
    bool insert_reduced_binary(std::vector<std::uint64_t>& w);
    void reduce_generic(std::vector<residue>& w) const;
    void reduce_binary(std::vector<std::uint64_t>& w) const;

    Prime prime_;
    std::size_t ambient_;
    std::size_t words_;
    std::vector<std::size_t> pivots_;       // pivot column of each row, insertion order
    std::vector<std::int32_t> row_of_col_;  // -1 for non-pivot columns
    std::vector<std::vector<residue>> rows_;
    std::vector<std::vector<std::uint64_t>> bit_rows_;
};

struct RowEchelonForm {
    FpMatrix reduced;  // rank() leading rows are the RREF basis, the rest zero
    std::vector<std::size_t> pivots;
    std::size_t rank() const noexcept { return pivots.size(); }
};

/// Gauss-Jordan elimination with first-nonzero pivoting in column order.
RowEchelonForm rref(const FpMatrix& m);

/// Dense route on a private copy.
std::size_t rank_dense(const FpMatrix& m);
/// Streams columns into an EchelonBasis.
std::size_t rank_sparse(const SparseFpMatrix& m);

/// Dispatches to the sparse route when density < sparse_density_threshold.
std::size_t rank(const FpMatrix& m);
std::size_t rank(const SparseFpMatrix& m);

inline constexpr double sparse_density_threshold = 0.05;

/// Right null space {v : m v = 0}, of dimension cols - rank.
FpSubspace kernel_basis(const FpMatrix& m);

/// ambient - dim(span); throws usage_error when span lives in another ambient space.
std::size_t quotient_dim(std::size_t ambient, const FpSubspace& span);

} // namespace procyclic

#endif
