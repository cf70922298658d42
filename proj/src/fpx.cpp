#include "procyclic/fpx.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

#include "procyclic/errors.hpp"

namespace procyclic {

namespace {

void require_compatible(const TruncSeries& a, const TruncSeries& b, const char* op) {
    if (!(a.prime() == b.prime()))
        throw usage_error(std::string(op) + ": mismatched primes");
    if (a.precision() != b.precision())
        throw usage_error(std::string(op) + ": mismatched precisions " +
                          std::to_string(a.precision()) + " vs " + std::to_string(b.precision()));
}

// out[0..n) = low n coefficients of a*b, with a, b of length n.
void schoolbook_low(const residue* a, const residue* b, std::size_t n, residue* out, const Prime& P) {
    const std::uint64_t p = P.value();
    for (std::size_t k = 0; k < n; ++k) {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i <= k; ++i) acc += static_cast<std::uint64_t>(a[i]) * b[k - i];
        out[k] = static_cast<residue>(acc % p);
    }
}

// out[0..2n-1) = a*b, a and b of length n.
void schoolbook_full(const residue* a, const residue* b, std::size_t n, residue* out, const Prime& P) {
    const std::uint64_t p = P.value();
    for (std::size_t k = 0; k + 1 < 2 * n; ++k) {
        std::uint64_t acc = 0;
        std::size_t lo = k >= n ? k - n + 1 : 0;
        std::size_t hi = std::min(k, n - 1);
        for (std::size_t i = lo; i <= hi; ++i) acc += static_cast<std::uint64_t>(a[i]) * b[k - i];
        out[k] = static_cast<residue>(acc % p);
    }
}

// Low n coefficients of a*b when a has at most sparse_operand_limit nonzero terms.
void sparse_low(const TruncSeries& a, const TruncSeries& b, residue* out) {
    const std::size_t n = a.precision();
    const std::uint64_t p = a.prime().value();
    std::vector<std::uint64_t> acc(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t c = a[i];
        if (c == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) acc[i + j] += c * b[j];
    }
    for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<residue>(acc[k] % p);
}

std::size_t count_nonzero(const TruncSeries& a, std::size_t stop) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < a.precision() && count <= stop; ++i) count += a[i] != 0;
    return count;
}

void karatsuba(const residue* a, const residue* b, std::size_t n, residue* out, const Prime& P) {
    if (n <= karatsuba_cutoff) {
        schoolbook_full(a, b, n, out, P);
        return;
    }
    const std::size_t lo = n / 2;
    const std::size_t hi = n - lo;  // hi >= lo

    std::vector<residue> z0(2 * lo - 1), z2(2 * hi - 1), z1(2 * hi - 1);
    karatsuba(a, b, lo, z0.data(), P);
    karatsuba(a + lo, b + lo, hi, z2.data(), P);

    std::vector<residue> as(hi), bs(hi);
    for (std::size_t i = 0; i < hi; ++i) {
        as[i] = a[lo + i];
        bs[i] = b[lo + i];
        if (i < lo) {
            as[i] = P.add(as[i], a[i]);
            bs[i] = P.add(bs[i], b[i]);
        }
    }
    karatsuba(as.data(), bs.data(), hi, z1.data(), P);
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = P.sub(z1[i], z2[i]);
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = P.sub(z1[i], z0[i]);

    std::fill(out, out + 2 * n - 1, 0);
    for (std::size_t i = 0; i < z0.size(); ++i) out[i] = z0[i];
    for (std::size_t i = 0; i < z2.size(); ++i) out[2 * lo + i] = P.add(out[2 * lo + i], z2[i]);
    for (std::size_t i = 0; i < z1.size(); ++i) out[lo + i] = P.add(out[lo + i], z1[i]);
}

} // namespace

TruncSeries::TruncSeries(Prime prime, std::size_t prec) : prime_(prime), coeffs_(prec, 0) {
    if (prec == 0) throw usage_error("series precision must be positive");
}

TruncSeries::TruncSeries(Prime prime, std::vector<std::int64_t> coeffs) : prime_(prime) {
    if (coeffs.empty()) throw usage_error("series precision must be positive");
    coeffs_.reserve(coeffs.size());
    for (auto c : coeffs) coeffs_.push_back(prime_.reduce(c));
}

TruncSeries::TruncSeries(Prime prime, std::vector<residue> coeffs, std::size_t prec)
    : prime_(prime), coeffs_(prec, 0) {
    if (prec == 0) throw usage_error("series precision must be positive");
    for (std::size_t i = 0; i < std::min(prec, coeffs.size()); ++i) coeffs_[i] = coeffs[i] % prime.value();
}

TruncSeries TruncSeries::from_reduced(Prime prime, std::vector<residue>&& coeffs) {
    if (coeffs.empty()) throw usage_error("series precision must be positive");
    TruncSeries s(prime, std::size_t{1});
    s.coeffs_ = std::move(coeffs);
    return s;
}

TruncSeries TruncSeries::one(Prime prime, std::size_t prec) { return monomial(prime, prec, 0, 1); }

TruncSeries TruncSeries::monomial(Prime prime, std::size_t prec, std::size_t degree, residue c) {
    TruncSeries s(prime, prec);
    if (degree < prec) s.coeffs_[degree] = c % prime.value();
    return s;
}

bool TruncSeries::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](residue c) { return c == 0; });
}

std::size_t TruncSeries::valuation() const noexcept {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return i;
    return coeffs_.size();
}

bool series_less(const TruncSeries& a, const TruncSeries& b) noexcept {
    if (a.precision() != b.precision()) return a.precision() < b.precision();
    auto ca = a.coeffs(), cb = b.coeffs();
    return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

TruncSeries add(const TruncSeries& a, const TruncSeries& b) {
    require_compatible(a, b, "add");
    const Prime& P = a.prime();
    std::vector<residue> out(a.precision());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = P.add(a[i], b[i]);
    return TruncSeries::from_reduced(P, std::move(out));
}

TruncSeries sub(const TruncSeries& a, const TruncSeries& b) {
    require_compatible(a, b, "sub");
    const Prime& P = a.prime();
    std::vector<residue> out(a.precision());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = P.sub(a[i], b[i]);
    return TruncSeries::from_reduced(P, std::move(out));
}

TruncSeries neg(const TruncSeries& a) {
    const Prime& P = a.prime();
    std::vector<residue> out(a.precision());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = P.neg(a[i]);
    return TruncSeries::from_reduced(P, std::move(out));
}

TruncSeries scale(const TruncSeries& a, residue c) {
    const Prime& P = a.prime();
    c %= P.value();
    std::vector<residue> out(a.precision());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = P.mul(a[i], c);
    return TruncSeries::from_reduced(P, std::move(out));
}

TruncSeries mul_schoolbook(const TruncSeries& a, const TruncSeries& b) {
    require_compatible(a, b, "mul");
    std::vector<residue> out(a.precision());
    schoolbook_low(a.coeffs().data(), b.coeffs().data(), a.precision(), out.data(), a.prime());
    return TruncSeries::from_reduced(a.prime(), std::move(out));
}

TruncSeries mul(const TruncSeries& a, const TruncSeries& b) {
    require_compatible(a, b, "mul");
    const std::size_t n = a.precision();
    if (n <= karatsuba_cutoff) return mul_schoolbook(a, b);
    // 64 products below 2^32 each cannot overflow the 64-bit accumulators.
    constexpr std::size_t sparse_operand_limit = 64;
    const bool a_sparse = count_nonzero(a, sparse_operand_limit) <= sparse_operand_limit;
    if (a_sparse || count_nonzero(b, sparse_operand_limit) <= sparse_operand_limit) {
        std::vector<residue> out(n);
        sparse_low(a_sparse ? a : b, a_sparse ? b : a, out.data());
        return TruncSeries::from_reduced(a.prime(), std::move(out));
    }

    // Only the low n coefficients are needed: drop the high half of the
    // product by splitting a = a0 + x^h a1 and b likewise, with
    // a*b mod x^n = a0*b0 + x^h (a0*b1 + a1*b0) mod x^n.
    const std::size_t h = (n + 1) / 2;
    const Prime& P = a.prime();
    std::vector<residue> full(2 * h - 1);
    karatsuba(a.coeffs().data(), b.coeffs().data(), h, full.data(), P);

    std::vector<residue> out(n, 0);
    for (std::size_t i = 0; i < n && i < full.size(); ++i) out[i] = full[i];

    const std::size_t rest = n - h;  // length of a1, b1 needed
    if (rest > 0) {
        TruncSeries a0 = TruncSeries::from_reduced(P, {a.coeffs().begin(), a.coeffs().begin() + rest});
        TruncSeries b0 = TruncSeries::from_reduced(P, {b.coeffs().begin(), b.coeffs().begin() + rest});
        TruncSeries a1 = TruncSeries::from_reduced(P, {a.coeffs().begin() + h, a.coeffs().end()});
        TruncSeries b1 = TruncSeries::from_reduced(P, {b.coeffs().begin() + h, b.coeffs().end()});
        TruncSeries cross = add(mul(a0, b1), mul(a1, b0));
        for (std::size_t i = 0; i < rest; ++i) out[h + i] = P.add(out[h + i], cross[i]);
    }
    return TruncSeries::from_reduced(P, std::move(out));
}

TruncSeries invert(const TruncSeries& a) {
    const Prime& P = a.prime();
    if (a[0] == 0) throw not_a_unit_error("series with zero constant term is not invertible");
    const std::size_t n = a.precision();
    // Newton iteration b <- b (2 - a b), doubling the correct length each step.
    TruncSeries b = TruncSeries::monomial(P, 1, 0, P.inv(a[0]));
    std::size_t len = 1;
    while (len < n) {
        len = std::min(2 * len, n);
        TruncSeries al = truncate(a, len);
        TruncSeries bl(P, std::vector<residue>(b.coeffs().begin(), b.coeffs().end()), len);
        TruncSeries two = TruncSeries::monomial(P, len, 0, 2 % P.value());
        b = mul(bl, sub(two, mul(al, bl)));
    }
    return b;
}

TruncSeries power(const TruncSeries& a, std::uint64_t e) {
    TruncSeries result = TruncSeries::one(a.prime(), a.precision());
    TruncSeries base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return result;
}

TruncSeries substitute(const TruncSeries& f, const TruncSeries& g) {
    require_compatible(f, g, "substitute");
    if (g[0] != 0) throw usage_error("substitute: inner series must have zero constant term");
    const Prime& P = f.prime();
    const std::size_t n = f.precision();
    // Horner: f(g) = c0 + g (c1 + g (c2 + ...)). Since g = O(x), terms beyond
    // the degree needed never contribute.
    TruncSeries acc(P, n);
    for (std::size_t i = n; i-- > 0;) {
        acc = mul(acc, g);
        acc = add(acc, TruncSeries::monomial(P, n, 0, f[i]));
    }
    return acc;
}

TruncSeries truncate(const TruncSeries& a, std::size_t prec) {
    if (prec == 0 || prec > a.precision())
        throw usage_error("truncate: precision " + std::to_string(prec) + " out of range");
    return TruncSeries::from_reduced(a.prime(), {a.coeffs().begin(), a.coeffs().begin() + prec});
}

TruncSeries shift_up(const TruncSeries& a, std::size_t k) {
    std::vector<residue> out(a.precision(), 0);
    for (std::size_t i = 0; i + k < out.size(); ++i) out[i + k] = a[i];
    return TruncSeries::from_reduced(a.prime(), std::move(out));
}

TruncSeries shift_down(const TruncSeries& a, std::size_t k) {
    if (k >= a.precision()) throw usage_error("shift_down: shift exceeds precision");
    for (std::size_t i = 0; i < k; ++i)
        if (a[i] != 0) throw usage_error("shift_down: series not divisible by x^k");
    return TruncSeries::from_reduced(a.prime(), {a.coeffs().begin() + k, a.coeffs().end()});
}

std::string to_string(const TruncSeries& a) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.precision(); ++i) {
        if (a[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << a[i];
        if (i == 1) os << "*x";
        if (i > 1) os << "*x^" << i;
    }
    if (first) os << "0";
    return os.str();
}

std::string to_json(const TruncSeries& a) {
    nlohmann::json j = std::vector<residue>(a.coeffs().begin(), a.coeffs().end());
    return j.dump();
}

namespace {

TruncSeries parse_text(std::string_view text, Prime prime, std::size_t prec) {
    if (prec == 0) throw usage_error("parse_series: text form needs an explicit precision");
    std::vector<residue> coeffs(prec, 0);
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw usage_error("parse_series: empty input");

    std::size_t pos = 0;
    auto read_int = [&](std::uint64_t& out) {
        std::size_t start = pos;
        out = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            out = (out * 10 + static_cast<std::uint64_t>(s[pos] - '0')) % (1ull << 62);
            ++pos;
        }
        return pos > start;
    };

    bool first = true;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (!first) {
            throw usage_error("parse_series: expected '+' or '-' at offset " + std::to_string(pos));
        }
        first = false;

        std::uint64_t c = 1;
        bool has_coeff = read_int(c);
        if (!has_coeff) c = 1;
        std::uint64_t degree = 0;
        if (pos < s.size() && s[pos] == '*') {
            if (!has_coeff) throw usage_error("parse_series: '*' without coefficient");
            ++pos;
            if (pos >= s.size() || s[pos] != 'x') throw usage_error("parse_series: expected 'x' after '*'");
        }
        if (pos < s.size() && s[pos] == 'x') {
            ++pos;
            degree = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                if (!read_int(degree)) throw usage_error("parse_series: expected exponent after '^'");
            }
        } else if (!has_coeff) {
            throw usage_error("parse_series: malformed term at offset " + std::to_string(pos));
        }
        residue r = static_cast<residue>(c % prime.value());
        if (negative) r = prime.neg(r);
        if (degree < prec) coeffs[degree] = prime.add(coeffs[degree], r);
    }
    return TruncSeries::from_reduced(prime, std::move(coeffs));
}

} // namespace

TruncSeries parse_series(std::string_view text, Prime prime, std::size_t prec) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw usage_error(std::string("parse_series: bad JSON: ") + e.what());
        }
        if (!j.is_array() || j.empty()) throw usage_error("parse_series: expected a nonempty integer array");
        std::vector<std::int64_t> raw;
        for (const auto& v : j) {
            if (!v.is_number_integer()) throw usage_error("parse_series: non-integer coefficient");
            raw.push_back(v.get<std::int64_t>());
        }
        if (prec != 0) {
            if (raw.size() > prec) throw usage_error("parse_series: more coefficients than precision");
            raw.resize(prec, 0);
        }
        return TruncSeries(prime, std::move(raw));
    }
    return parse_text(text, prime, prec);
}

} // namespace procyclic
