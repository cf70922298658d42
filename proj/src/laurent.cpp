#include "procyclic/laurent.hpp"

#include <sstream>

#include "procyclic/errors.hpp"

namespace procyclic {

LaurentTrunc::LaurentTrunc(std::int64_t val, TruncSeries body) : val_(val), body_(std::move(body)) {
    if (body_.is_zero()) {
        val_ = 0;
        return;
    }
    std::size_t v = body_.valuation();
    if (v > 0) {
        body_ = shift_down(body_, v);
        val_ += static_cast<std::int64_t>(v);
    }
}

LaurentTrunc LaurentTrunc::from_coefficients(Prime prime, std::int64_t lowest, std::vector<std::int64_t> coeffs) {
    return {lowest, TruncSeries(prime, std::move(coeffs))};
}

LaurentTrunc laurent_mul(const LaurentTrunc& a, const LaurentTrunc& b) {
    if (a.precision() != b.precision())
        throw usage_error("laurent_mul: mismatched relative precisions");
    if (a.is_zero() || b.is_zero()) return LaurentTrunc::zero(a.prime(), a.precision());
    return {a.valuation() + b.valuation(), mul(a.body(), b.body())};
}

LaurentTrunc laurent_invert(const LaurentTrunc& a) {
    if (a.is_zero()) throw not_a_unit_error("laurent_invert: zero is not invertible");
    return {-a.valuation(), invert(a.body())};
}

std::string to_string(const LaurentTrunc& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.precision(); ++i) {
        residue c = a.body()[i];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        std::int64_t e = a.valuation() + static_cast<std::int64_t>(i);
        os << c;
        if (e == 1) os << "*x";
        else if (e != 0) os << "*x^" << e;
    }
    os << " + O(x^" << a.valuation() + static_cast<std::int64_t>(a.precision()) << ")";
    return os.str();
}

} // namespace procyclic
