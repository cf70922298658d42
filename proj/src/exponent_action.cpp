#include "procyclic/exponent_action.hpp"

#include <string>

#include "procyclic/errors.hpp"

namespace procyclic {

std::size_t required_digits(const Prime& prime, std::size_t prec) { return ceil_log(prime.value(), prec); }

namespace {

// f * (1 - x^step)^d, expanding the binomial; only degrees < prec survive.
TruncSeries times_binomial_power(const TruncSeries& f, std::size_t step, residue d) {
    const Prime& P = f.prime();
    const std::size_t n = f.precision();
    std::vector<residue> binom;  // (-1)^j C(d, j) mod p
    residue c = 1;
    for (residue j = 0; j <= d && static_cast<std::size_t>(j) * step < n; ++j) {
        binom.push_back((j & 1) ? P.neg(c) : c);
        // C(d, j+1) = C(d, j) (d - j) / (j + 1); j + 1 <= d < p keeps j + 1 invertible
        if (j < d) c = P.mul(P.mul(c, d - j), P.inv(j + 1));
    }
    std::vector<residue> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; j < binom.size() && i + j * step < n; ++j)
            out[i + j * step] = P.add(out[i + j * step], P.mul(f[i], binom[j]));
    }
    return TruncSeries::from_reduced(P, std::move(out));
}

} // namespace

TruncSeries tau(const PadicInt& alpha, std::size_t prec) {
    const Prime& P = alpha.prime();
    const std::size_t need = required_digits(P, prec);
    if (alpha.precision() < need)
        throw usage_error("tau: exponent has " + std::to_string(alpha.precision()) + " digits, precision " +
                          std::to_string(prec) + " needs " + std::to_string(need));
    TruncSeries result = TruncSeries::one(P, prec);
    std::size_t step = 1;
    for (std::size_t i = 0; i < alpha.precision() && step < prec; ++i) {
        if (alpha.digit(i) != 0) result = times_binomial_power(result, step, alpha.digit(i));
        if (step > prec / P.value()) break;
        step *= P.value();
    }
    return result;
}

TruncSeries antipode_series(const Prime& prime, std::size_t prec) {
    TruncSeries one_minus_x = sub(TruncSeries::one(prime, prec), TruncSeries::monomial(prime, prec, 1));
    return sub(TruncSeries::one(prime, prec), invert(one_minus_x));
}

TruncSeries sigma(const TruncSeries& f) { return substitute(f, antipode_series(f.prime(), f.precision())); }

TruncSeries act(const PadicInt& alpha, const TruncSeries& f) { return mul(tau(alpha, f.precision()), f); }

} // namespace procyclic
