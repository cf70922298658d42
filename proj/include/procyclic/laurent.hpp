#ifndef PROCYCLIC_LAURENT_HPP
#define PROCYCLIC_LAURENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "procyclic/fpx.hpp"

namespace procyclic {

/// x^val * body, with body a unit series of relative precision body.precision().
///
/// Zero has the single encoding (val = 0, zero body). The known part of a
/// nonzero element spans exponents [val, val + precision).
class LaurentTrunc {
public:
    /// Normalizes: pulls any factor x^k out of `body` into the valuation.
    LaurentTrunc(std::int64_t val, TruncSeries body);

    static LaurentTrunc zero(Prime prime, std::size_t prec) { return {0, TruncSeries(prime, prec)}; }
    static LaurentTrunc from_series(const TruncSeries& f) { return {0, f}; }
    /// sum_j coeffs[j] x^(lowest + j); relative precision coeffs.size().
    static LaurentTrunc from_coefficients(Prime prime, std::int64_t lowest, std::vector<std::int64_t> coeffs);

    std::int64_t valuation() const noexcept { return val_; }
    const TruncSeries& body() const noexcept { return body_; }
    const Prime& prime() const noexcept { return body_.prime(); }
    std::size_t precision() const noexcept { return body_.precision(); }
    bool is_zero() const noexcept { return body_.is_zero(); }

    friend bool operator==(const LaurentTrunc&, const LaurentTrunc&) = default;

private:
    std::int64_t val_;
    TruncSeries body_;
};

/// Valuations add; bodies multiply at their common (required equal) precision.
LaurentTrunc laurent_mul(const LaurentTrunc& a, const LaurentTrunc& b);
/// Throws not_a_unit_error on zero.
LaurentTrunc laurent_invert(const LaurentTrunc& a);

std::string to_string(const LaurentTrunc& a);

} // namespace procyclic

#endif
