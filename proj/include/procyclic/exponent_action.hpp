#ifndef PROCYCLIC_EXPONENT_ACTION_HPP
#define PROCYCLIC_EXPONENT_ACTION_HPP

#include <cstddef>

#include "procyclic/fpx.hpp"
#include "procyclic/padic.hpp"

namespace procyclic {

/// Digits needed for an exponent acting on series of precision `prec`: least k with p^k >= prec.
std::size_t required_digits(const Prime& prime, std::size_t prec);

/// t^alpha -> (1 - x)^alpha mod x^prec, evaluated digit by digit as
/// prod_i (1 - x^{p^i})^{d_i}. Factors with p^i >= prec are 1 and skipped.
/// Throws usage_error when alpha carries fewer than required_digits() digits.
TruncSeries tau(const PadicInt& alpha, std::size_t prec);

/// The series 1 - (1 - x)^{-1} = -x - x^2 - ... at precision `prec`.
TruncSeries antipode_series(const Prime& prime, std::size_t prec);

/// Ring involution induced by t -> t^{-1}: f(x) -> f(1 - (1 - x)^{-1}).
TruncSeries sigma(const TruncSeries& f);

/// The action of t^alpha on the module F_p[[x]]: multiplication by tau(alpha).
TruncSeries act(const PadicInt& alpha, const TruncSeries& f);

} // namespace procyclic

#endif
