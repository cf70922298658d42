#include "procyclic/padic.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "procyclic/errors.hpp"

namespace procyclic {

namespace {

void require_compatible(const PadicInt& a, const PadicInt& b, const char* op) {
    if (!(a.prime() == b.prime())) throw usage_error(std::string(op) + ": mismatched primes");
    if (a.precision() != b.precision()) throw usage_error(std::string(op) + ": mismatched digit precisions");
}

} // namespace

PadicInt::PadicInt(Prime prime, std::size_t k) : prime_(prime), digits_(k, 0) {}

PadicInt PadicInt::from_digits(Prime prime, std::vector<residue> digits) {
    for (auto d : digits)
        if (d >= prime.value()) throw usage_error("from_digits: digit out of range");
    PadicInt r(prime, 0);
    r.digits_ = std::move(digits);
    return r;
}

PadicInt PadicInt::from_int(std::int64_t n, Prime prime, std::size_t k) {
    // |n| as unsigned avoids overflow at INT64_MIN.
    std::uint64_t m = n < 0 ? 0 - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
    std::vector<residue> digits(k, 0);
    for (std::size_t i = 0; i < k && m != 0; ++i) {
        digits[i] = static_cast<residue>(m % prime.value());
        m /= prime.value();
    }
    PadicInt r = from_digits(prime, std::move(digits));
    return n < 0 ? neg(r) : r;
}

PadicInt PadicInt::from_decimal(std::string_view text, Prime prime, std::size_t k) {
    std::size_t pos = 0;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) negative = text[pos++] == '-';
    std::vector<unsigned> dec;
    for (; pos < text.size(); ++pos) {
        char ch = text[pos];
        if (std::isspace(static_cast<unsigned char>(ch))) break;
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw usage_error("from_decimal: not a decimal integer: " + std::string(text));
        dec.push_back(static_cast<unsigned>(ch - '0'));
    }
    if (dec.empty()) throw usage_error("from_decimal: empty integer");
    for (; pos < text.size(); ++pos)
        if (!std::isspace(static_cast<unsigned char>(text[pos])))
            throw usage_error("from_decimal: trailing characters in " + std::string(text));

    // Repeated long division of the decimal string by p yields base-p digits.
    std::vector<residue> digits(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        std::uint64_t rem = 0;
        std::vector<unsigned> quotient;
        quotient.reserve(dec.size());
        for (unsigned d : dec) {
            std::uint64_t cur = rem * 10 + d;
            unsigned q = static_cast<unsigned>(cur / prime.value());
            rem = cur % prime.value();
            if (!quotient.empty() || q != 0) quotient.push_back(q);
        }
        digits[i] = static_cast<residue>(rem);
        dec = std::move(quotient);
        if (dec.empty()) break;
    }
    PadicInt r = from_digits(prime, std::move(digits));
    return negative ? neg(r) : r;
}

bool PadicInt::is_zero() const noexcept {
    return std::all_of(digits_.begin(), digits_.end(), [](residue d) { return d == 0; });
}

std::uint64_t PadicInt::to_uint64() const {
    std::uint64_t value = 0, place = 1;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (digits_[i] != 0) {
            if (place > std::numeric_limits<std::uint64_t>::max() / digits_[i])
                throw usage_error("to_uint64: value exceeds 64 bits");
            value += digits_[i] * place;
        }
        if (i + 1 < digits_.size()) {
            if (place > std::numeric_limits<std::uint64_t>::max() / prime_.value()) {
                for (std::size_t j = i + 1; j < digits_.size(); ++j)
                    if (digits_[j] != 0) throw usage_error("to_uint64: value exceeds 64 bits");
                break;
            }
            place *= prime_.value();
        }
    }
    return value;
}

PadicInt add(const PadicInt& a, const PadicInt& b) {
    require_compatible(a, b, "add");
    const std::uint32_t p = a.prime().value();
    std::vector<residue> out(a.precision());
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint32_t s = a.digit(i) + b.digit(i) + carry;
        out[i] = s % p;
        carry = s / p;
    }
    return PadicInt::from_digits(a.prime(), std::move(out));
}

PadicInt neg(const PadicInt& a) {
    // -a = (complement digits) + 1 mod p^k
    const std::uint32_t p = a.prime().value();
    std::vector<residue> out(a.precision());
    std::uint32_t carry = 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint32_t s = (p - 1 - a.digit(i)) + carry;
        out[i] = s % p;
        carry = s / p;
    }
    return PadicInt::from_digits(a.prime(), std::move(out));
}

PadicInt sub(const PadicInt& a, const PadicInt& b) { return add(a, neg(b)); }

PadicInt mul(const PadicInt& a, const PadicInt& b) {
    require_compatible(a, b, "mul");
    const std::uint64_t p = a.prime().value();
    const std::size_t k = a.precision();
    // column sums stay below k * p^2 + carry, well inside 64 bits for p <= 2^16
    std::vector<std::uint64_t> acc(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        if (a.digit(i) == 0) continue;
        for (std::size_t j = 0; i + j < k; ++j) acc[i + j] += static_cast<std::uint64_t>(a.digit(i)) * b.digit(j);
    }
    std::vector<residue> out(k);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < k; ++i) {
        std::uint64_t s = acc[i] + carry;
        out[i] = static_cast<residue>(s % p);
        carry = s / p;
    }
    return PadicInt::from_digits(a.prime(), std::move(out));
}

PadicInt truncate(const PadicInt& a, std::size_t k) {
    if (k > a.precision()) throw usage_error("truncate: cannot raise digit precision");
    return PadicInt::from_digits(a.prime(), {a.digits().begin(), a.digits().begin() + k});
}

std::string to_string(const PadicInt& a) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < a.precision(); ++i) os << (i ? "," : "") << a.digit(i);
    os << "]_" << a.prime().value();
    return os.str();
}

PadicInt parse_padic(std::string_view text, Prime prime, std::size_t k) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw usage_error(std::string("parse_padic: bad digit list: ") + e.what());
        }
        if (!j.is_array()) throw usage_error("parse_padic: expected a digit array");
        if (j.size() > k) throw usage_error("parse_padic: more digits than precision");
        std::vector<residue> digits(k, 0);
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (!j[i].is_number_integer()) throw usage_error("parse_padic: non-integer digit");
            auto d = j[i].get<std::int64_t>();
            if (d < 0 || d >= static_cast<std::int64_t>(prime.value()))
                throw usage_error("parse_padic: digit out of range");
            digits[i] = static_cast<residue>(d);
        }
        return PadicInt::from_digits(prime, std::move(digits));
    }
    return PadicInt::from_decimal(text, prime, k);
}

} // namespace procyclic
