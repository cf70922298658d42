#include "procyclic/census.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "procyclic/errors.hpp"

namespace procyclic {

namespace {

constexpr std::uint64_t tuple_budget = std::uint64_t{1} << 26;

std::uint64_t checked_level_precision(const Prime& prime, unsigned level) {
    std::uint64_t n = saturating_pow(prime.value(), level);
    if (n > census_precision_budget)
        throw resource_error("census: p^level = " + std::to_string(prime.value()) + "^" + std::to_string(level) +
                             " exceeds the precision budget " + std::to_string(census_precision_budget));
    return n;
}

void sort_elements(std::vector<TruncSeries>& v) { std::sort(v.begin(), v.end(), series_less); }

} // namespace

std::size_t PackedSeriesHash::operator()(const PackedSeries& s) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto w : s.words) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

PackedSeries pack(const TruncSeries& s) {
    const unsigned bits = static_cast<unsigned>(std::bit_width(s.prime().value() - 1));
    const unsigned per_word = 64 / bits;
    PackedSeries out;
    out.words.assign((s.precision() + per_word - 1) / per_word + 1, 0);
    out.words.back() = s.precision();
    for (std::size_t i = 0; i < s.precision(); ++i)
        out.words[i / per_word] |= static_cast<std::uint64_t>(s[i]) << ((i % per_word) * bits);
    return out;
}

// -------------------------------------------------------------- CensusSet

CensusSet::CensusSet(Prime prime, unsigned level)
    : prime_(prime), level_(level), precision_(checked_level_precision(prime, level)) {}

bool CensusSet::insert(TruncSeries s) {
    if (s.precision() != precision_ || !(s.prime() == prime_))
        throw usage_error("CensusSet::insert: element has the wrong precision or prime");
    if (!index_.insert(pack(s)).second) return false;
    elements_.push_back(std::move(s));
    return true;
}

bool CensusSet::contains(const TruncSeries& s) const {
    if (s.precision() != precision_) return false;
    return index_.count(pack(s)) != 0;
}

// ---------------------------------------------------------------- enum_A

CensusSet enum_A(Prime prime, unsigned level) {
    CensusSet set(prime, level);
    const std::size_t n = set.precision();
    std::vector<residue> cur(n, 0);
    cur[0] = 1;
    std::vector<TruncSeries> powers;
    powers.reserve(n);
    for (std::size_t m = 0; m < n; ++m) {
        powers.push_back(TruncSeries::from_reduced(prime, std::vector<residue>(cur)));
        // cur <- cur * (1 - x), high to low in place
        for (std::size_t j = n; j-- > 1;) cur[j] = prime.sub(cur[j], cur[j - 1]);
    }
    sort_elements(powers);
    for (auto& s : powers) set.insert(std::move(s));
    return set;
}

// ------------------------------------------------------- census_ratio_set

RatioCensus census_ratio_set(Prime prime, const std::vector<std::int64_t>& alpha,
                             const std::vector<std::int64_t>& beta, unsigned k, unsigned level) {
    if (alpha.empty() || alpha.size() != beta.size())
        throw usage_error("census_ratio_set: alpha and beta must be nonempty and of equal length");
    if (level < k) throw usage_error("census_ratio_set: level i must be >= k");
    if (k < 1) throw usage_error("census_ratio_set: k must be >= 1");

    const CensusSet a_set = enum_A(prime, level);
    const std::size_t n_terms = alpha.size();
    const std::size_t prec = a_set.precision();
    const std::uint64_t admissible_val = saturating_pow(prime.value(), k);  // den must have valuation < p^k
    const std::uint64_t m = a_set.size();
    const std::uint64_t tuples = saturating_pow(m, 2 * n_terms);
    if (tuples > tuple_budget)
        throw resource_error("census_ratio_set: " + std::to_string(tuples) + " tuples exceed the enumeration budget");

    std::vector<residue> alpha_r, beta_r;
    for (auto x : alpha) alpha_r.push_back(prime.reduce(x));
    for (auto x : beta) beta_r.push_back(prime.reduce(x));

    const auto& elems = a_set.elements();
    std::vector<TruncSeries> found;
    std::unordered_set<PackedSeries, PackedSeriesHash> seen;
    std::uint64_t admissible = 0, max_solutions = 0;

    std::vector<std::size_t> idx(2 * n_terms, 0);
    for (std::uint64_t t = 0; t < tuples; ++t) {
        TruncSeries num(prime, prec), den(prime, prec);
        for (std::size_t j = 0; j < n_terms; ++j) {
            num = add(num, scale(elems[idx[j]], alpha_r[j]));
            den = add(den, scale(elems[idx[n_terms + j]], beta_r[j]));
        }
        const std::size_t v = den.valuation();
        if (v < admissible_val && v < prec) {
            ++admissible;
            std::uint64_t solutions = 0;
            if (num.valuation() >= v) {
                // r x^v u = num  =>  r = num x^{-v} u^{-1} mod x^{prec - v}; the top v coefficients are free.
                std::vector<residue> low(prec - v);
                if (v < prec) {
                    TruncSeries q = mul(shift_down(num, v), invert(shift_down(den, v)));
                    for (std::size_t j = 0; j < prec - v; ++j) low[j] = q[j];
                }
                solutions = saturating_pow(prime.value(), v);
                if (solutions > tuple_budget) throw resource_error("census_ratio_set: annihilator coset too large");
                std::vector<residue> r(prec, 0);
                std::copy(low.begin(), low.end(), r.begin());
                for (std::uint64_t s = 0; s < solutions; ++s) {
                    std::uint64_t code = s;
                    for (std::size_t j = prec - v; j < prec; ++j) {
                        r[j] = static_cast<residue>(code % prime.value());
                        code /= prime.value();
                    }
                    TruncSeries sol = TruncSeries::from_reduced(prime, std::vector<residue>(r));
                    if (seen.insert(pack(sol)).second) found.push_back(std::move(sol));
                }
            }
            max_solutions = std::max(max_solutions, solutions);
        }
        for (std::size_t j = idx.size(); j-- > 0;) {
            if (++idx[j] < m) break;
            idx[j] = 0;
        }
    }

    sort_elements(found);
    CensusSet set(prime, level);
    for (auto& s : found) set.insert(std::move(s));

    RatioCensus out{std::move(set), tuples, admissible, max_solutions, 0, false, false, false};
    out.bound_exponent = 2ull * level * n_terms + admissible_val;
    out.tuple_bound_holds = tuples <= saturating_pow(prime.value(), 2ull * level * n_terms);
    out.solution_bound_holds = max_solutions <= saturating_pow(prime.value(), admissible_val);
    out.bound_holds = out.set.size() <= saturating_pow(prime.value(), out.bound_exponent);
    return out;
}

CensusSet census_sum_set(const CensusSet& set, const std::vector<TruncSeries>& multipliers) {
    if (multipliers.empty()) throw usage_error("census_sum_set: need at least one multiplier");
    for (const auto& v : multipliers)
        if (v.precision() != set.precision()) throw usage_error("census_sum_set: multiplier precision mismatch");
    const std::uint64_t m = set.size();
    const std::uint64_t tuples = saturating_pow(m, multipliers.size());
    if (tuples > tuple_budget) throw resource_error("census_sum_set: too many combinations");

    std::vector<TruncSeries> found;
    std::unordered_set<PackedSeries, PackedSeriesHash> seen;
    std::vector<std::size_t> idx(multipliers.size(), 0);
    for (std::uint64_t t = 0; t < tuples; ++t) {
        TruncSeries acc(set.prime(), set.precision());
        for (std::size_t j = 0; j < idx.size(); ++j) acc = add(acc, mul(set.elements()[idx[j]], multipliers[j]));
        if (seen.insert(pack(acc)).second) found.push_back(std::move(acc));
        for (std::size_t j = idx.size(); j-- > 0;) {
            if (++idx[j] < m) break;
            idx[j] = 0;
        }
    }
    sort_elements(found);
    CensusSet out(set.prime(), set.level());
    for (auto& s : found) out.insert(std::move(s));
    return out;
}

// ------------------------------------------------------------ density_gap

bool ball_misses_census(const CensusSet& census, const TruncSeries& g) {
    const std::size_t n = census.precision();
    if (g.precision() < n) throw usage_error("ball_misses_census: witness shorter than the census precision");
    for (const auto& e : census.elements()) {
        bool same = true;
        for (std::size_t j = 0; j < n && same; ++j) same = e[j] == g[j];
        if (same) return false;
    }
    return true;
}

DensityGap density_gap(Prime prime, const CensusProvider& census, const TruncSeries& f, unsigned s, unsigned i_max) {
    if (!(f.prime() == prime)) throw usage_error("density_gap: centre has the wrong prime");
    const std::uint64_t ns = checked_level_precision(prime, s);
    std::vector<std::string> log;
    std::ostringstream blocked;

    for (unsigned i = 0; i <= i_max; ++i) {
        const unsigned level = s + i;
        const std::uint64_t nl = checked_level_precision(prime, level);
        CensusSet set = census(level);
        if (set.precision() != nl) throw usage_error("density_gap: provider returned the wrong precision");

        std::vector<residue> base(nl, 0);
        for (std::size_t j = 0; j < std::min<std::size_t>(nl, f.precision()); ++j) base[j] = f[j];

        const std::uint64_t free_coeffs = nl - ns;
        const std::uint64_t cosets = saturating_pow(prime.value(), free_coeffs);
        std::vector<residue> digits(free_coeffs, 0);  // digits[0] is the coefficient of x^{p^s}
        std::uint64_t scanned = 0;
        bool exhausted = false;
        while (!exhausted) {
            std::vector<residue> g(base);
            for (std::size_t j = 0; j < free_coeffs; ++j) g[ns + j] = prime.add(g[ns + j], digits[j]);
            TruncSeries candidate = TruncSeries::from_reduced(prime, std::move(g));
            ++scanned;
            if (!set.contains(candidate)) {
                std::ostringstream line;
                line << "level " << level << ": census size " << set.size() << ", gap after " << scanned << " of "
                     << cosets << " candidates in the ball";
                log.push_back(line.str());
                if (!ball_misses_census(set, candidate))
                    throw std::logic_error("density_gap: verifier rejected the hash-selected witness");
                log.push_back("verified: no census element at level " + std::to_string(level) + " lies in " +
                              to_string(candidate) + " + (x^" + std::to_string(nl) + ")");
                return {std::move(candidate), level, std::move(log)};
            }
            // next tuple in lexicographic order (last coordinate varies fastest)
            exhausted = true;
            for (std::size_t j = free_coeffs; j-- > 0;) {
                if (++digits[j] < prime.value()) {
                    exhausted = false;
                    break;
                }
                digits[j] = 0;
            }
        }
        std::ostringstream line;
        line << "level " << level << ": census size " << set.size() << " meets all " << cosets << " candidates in the ball";
        log.push_back(line.str());
        blocked << (i ? "; " : "") << line.str();
    }
    throw search_exhausted_error("density_gap: no gap up to level " + std::to_string(s + i_max) + " (" +
                                 blocked.str() + ")");
}

// --------------------------------------------------------------- kappa/mu

TensorRep kappa(const LaurentTrunc& l) {
    if (l.is_zero()) return {TruncSeries(l.prime(), l.precision()), 0};
    const std::int64_t v = l.valuation();
    if (v < 0) return {l.body(), static_cast<std::uint64_t>(-v)};
    const std::size_t shift = static_cast<std::size_t>(v);
    std::vector<residue> coeffs(shift + l.precision(), 0);
    for (std::size_t j = 0; j < l.precision(); ++j) coeffs[shift + j] = l.body()[j];
    return {TruncSeries::from_reduced(l.prime(), std::move(coeffs)), 0};
}

LaurentTrunc mu(const TensorRep& t) { return {-static_cast<std::int64_t>(t.shift), t.left}; }

TensorRep normalize(const TensorRep& t) {
    TensorRep out = t;
    if (out.left.is_zero()) {
        out.shift = 0;
        return out;
    }
    while (out.shift > 0 && out.left[0] == 0 && out.left.precision() > 1) {
        out.left = shift_down(out.left, 1);
        --out.shift;
    }
    return out;
}

} // namespace procyclic
