#include "procyclic/prime.hpp"

#include <limits>
#include <string>

#include "procyclic/errors.hpp"

namespace procyclic {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Prime::Prime(std::uint32_t p) : p_(p) {
    if (p < 2 || p > max_value || !is_prime(p))
        throw usage_error("not a supported prime: " + std::to_string(p));
}

residue Prime::inv(residue a) const {
    if (a == 0) throw not_a_unit_error("zero has no inverse mod " + std::to_string(p_));
    // extended Euclid on (a, p)
    std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    return reduce(s0);
}

residue Prime::pow(residue a, std::uint64_t e) const noexcept {
    residue result = 1 % p_;
    while (e) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

unsigned ceil_log(std::uint64_t p, std::uint64_t n) noexcept {
    unsigned k = 0;
    std::uint64_t pk = 1;
    while (pk < n) {
        if (pk > std::numeric_limits<std::uint64_t>::max() / p) return k + 1;
        pk *= p;
        ++k;
    }
    return k;
}

std::uint64_t saturating_pow(std::uint64_t p, std::uint64_t e) noexcept {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (p != 0 && r > std::numeric_limits<std::uint64_t>::max() / p)
            return std::numeric_limits<std::uint64_t>::max();
        r *= p;
    }
    return r;
}

} // namespace procyclic
