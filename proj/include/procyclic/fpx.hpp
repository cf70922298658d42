#ifndef PROCYCLIC_FPX_HPP
#define PROCYCLIC_FPX_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "procyclic/prime.hpp"

namespace procyclic {

/// An element of F_p[x]/(x^N): dense little-endian coefficients c_0..c_{N-1}.
///
/// Values are immutable once built; every arithmetic routine below returns a
/// fresh series. Binary operations require equal primes and precisions and
/// throw usage_error otherwise. Use truncate() to bring operands to a common
/// precision explicitly.
class TruncSeries {
public:
    /// The zero series at precision `prec` (prec >= 1).
    TruncSeries(Prime prime, std::size_t prec);
    /// Coefficients are reduced mod p; precision is coeffs.size() (must be >= 1).
    TruncSeries(Prime prime, std::vector<std::int64_t> coeffs);
    TruncSeries(Prime prime, std::vector<residue> coeffs, std::size_t prec);

    static TruncSeries zero(Prime prime, std::size_t prec) { return TruncSeries(prime, prec); }
    static TruncSeries one(Prime prime, std::size_t prec);
    static TruncSeries monomial(Prime prime, std::size_t prec, std::size_t degree, residue c = 1);

    const Prime& prime() const noexcept { return prime_; }
    std::size_t precision() const noexcept { return coeffs_.size(); }
    residue operator[](std::size_t i) const noexcept { return coeffs_[i]; }
    std::span<const residue> coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;
    /// Index of the first nonzero coefficient, or precision() for zero.
    std::size_t valuation() const noexcept;
    bool is_unit() const noexcept { return coeffs_[0] != 0; }

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

    /// Adopts coefficients that the caller guarantees are already reduced mod p.
    static TruncSeries from_reduced(Prime prime, std::vector<residue>&& coeffs);

private:
    Prime prime_;
    std::vector<residue> coeffs_;
};

/// Lexicographic order on (precision, coefficients); used for deterministic sorting.
bool series_less(const TruncSeries& a, const TruncSeries& b) noexcept;

TruncSeries add(const TruncSeries& a, const TruncSeries& b);
TruncSeries sub(const TruncSeries& a, const TruncSeries& b);
TruncSeries neg(const TruncSeries& a);
TruncSeries scale(const TruncSeries& a, residue c);

/// Product mod x^N. Schoolbook below karatsuba_cutoff, Karatsuba above,
/// and a direct pass over the nonzero terms when one factor is sparse.
TruncSeries mul(const TruncSeries& a, const TruncSeries& b);
/// Reference quadratic product, kept public as the oracle for mul().
TruncSeries mul_schoolbook(const TruncSeries& a, const TruncSeries& b);

/// Operand length at or below which mul() falls back to the schoolbook kernel.
inline constexpr std::size_t karatsuba_cutoff = 48;

/// Multiplicative inverse mod x^N; throws not_a_unit_error when c_0 = 0.
TruncSeries invert(const TruncSeries& a);
TruncSeries power(const TruncSeries& a, std::uint64_t e);

/// f(g(x)) mod x^N. Requires g(0) = 0.
TruncSeries substitute(const TruncSeries& f, const TruncSeries& g);

/// Keep the first `prec` coefficients (prec <= precision()).
TruncSeries truncate(const TruncSeries& a, std::size_t prec);
/// Multiply by x^k, keeping the precision.
TruncSeries shift_up(const TruncSeries& a, std::size_t k);
/// Divide by x^k; the low k coefficients must be zero. Precision drops by k.
TruncSeries shift_down(const TruncSeries& a, std::size_t k);

inline TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) { return add(a, b); }
inline TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return sub(a, b); }
inline TruncSeries operator-(const TruncSeries& a) { return neg(a); }
inline TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return mul(a, b); }

// Text form is `c0 + c1*x + c2*x^2 + ...` listing nonzero terms only ("0" for zero).
std::string to_string(const TruncSeries& a);
std::string to_json(const TruncSeries& a);

/// Parses either a JSON integer array (precision = array length, `prec` ignored
/// unless nonzero) or the text form above (precision `prec` required).
TruncSeries parse_series(std::string_view text, Prime prime, std::size_t prec = 0);

} // namespace procyclic

#endif
