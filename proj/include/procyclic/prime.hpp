#ifndef PROCYCLIC_PRIME_HPP
#define PROCYCLIC_PRIME_HPP

#include <cstdint>

namespace procyclic {

using residue = std::uint32_t;

/// A prime 2 <= p <= 2^16 together with modular arithmetic on residues in [0, p).
///
/// Primality is checked at construction; every residue-level helper assumes
/// its arguments are already reduced.
class Prime {
public:
    static constexpr std::uint32_t max_value = 1u << 16;

    explicit Prime(std::uint32_t p);

    std::uint32_t value() const noexcept { return p_; }

    residue add(residue a, residue b) const noexcept {
        residue s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    residue sub(residue a, residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    residue neg(residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
    residue mul(residue a, residue b) const noexcept {
        return static_cast<residue>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    residue inv(residue a) const;
    residue pow(residue a, std::uint64_t e) const noexcept;

    residue reduce(std::int64_t v) const noexcept {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<residue>(r < 0 ? r + p_ : r);
    }

    friend bool operator==(const Prime&, const Prime&) = default;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Smallest k with p^k >= n (so ceil(log_p n) for n >= 1, and 0 for n <= 1).
unsigned ceil_log(std::uint64_t p, std::uint64_t n) noexcept;

/// p^e, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t p, std::uint64_t e) noexcept;

} // namespace procyclic

#endif
