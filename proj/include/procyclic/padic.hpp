#ifndef PROCYCLIC_PADIC_HPP
#define PROCYCLIC_PADIC_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "procyclic/prime.hpp"

namespace procyclic {

/// A p-adic integer modulo p^k, stored as base-p digits d_0..d_{k-1}.
class PadicInt {
public:
    /// Zero at digit precision k (k may be 0, the trivial ring).
    PadicInt(Prime prime, std::size_t k);
    /// Digits must already lie in [0, p).
    static PadicInt from_digits(Prime prime, std::vector<residue> digits);
    static PadicInt from_int(std::int64_t n, Prime prime, std::size_t k);
    /// Decimal integer of any size and sign, e.g. "-1" or "123456789012345678901234567890".
    static PadicInt from_decimal(std::string_view text, Prime prime, std::size_t k);

    const Prime& prime() const noexcept { return prime_; }
    std::size_t precision() const noexcept { return digits_.size(); }
    residue digit(std::size_t i) const noexcept { return digits_[i]; }
    const std::vector<residue>& digits() const noexcept { return digits_; }
    bool is_zero() const noexcept;

    /// The represented residue in [0, p^k); throws usage_error if p^k exceeds 2^64.
    std::uint64_t to_uint64() const;

    friend bool operator==(const PadicInt&, const PadicInt&) = default;

private:
    Prime prime_;
    std::vector<residue> digits_;
};

PadicInt add(const PadicInt& a, const PadicInt& b);
PadicInt sub(const PadicInt& a, const PadicInt& b);
PadicInt mul(const PadicInt& a, const PadicInt& b);
PadicInt neg(const PadicInt& a);
/// Reduction mod p^k' for k' <= k.
PadicInt truncate(const PadicInt& a, std::size_t k);

inline PadicInt operator+(const PadicInt& a, const PadicInt& b) { return add(a, b); }
inline PadicInt operator-(const PadicInt& a, const PadicInt& b) { return sub(a, b); }
inline PadicInt operator-(const PadicInt& a) { return neg(a); }
inline PadicInt operator*(const PadicInt& a, const PadicInt& b) { return mul(a, b); }

std::string to_string(const PadicInt& a);

/// Accepts a decimal integer or a digit list "[d0,d1,...]" (least significant first).
/// A digit list shorter than k is zero-extended.
PadicInt parse_padic(std::string_view text, Prime prime, std::size_t k);

} // namespace procyclic

#endif
