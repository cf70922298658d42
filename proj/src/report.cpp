#include "procyclic/report.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "procyclic/census.hpp"
#include "procyclic/cycmod.hpp"
#include "procyclic/errors.hpp"
#include "procyclic/exponent_action.hpp"
#include "procyclic/fpx.hpp"
#include "procyclic/grouph2.hpp"
#include "procyclic/laurent.hpp"
#include "procyclic/padic.hpp"

namespace procyclic {

namespace {

using ojson = nlohmann::ordered_json;

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

TruncSeries one_minus_x(const Prime& P, std::size_t prec) {
    return sub(TruncSeries::one(P, prec), TruncSeries::monomial(P, prec, 1));
}

PadicInt random_padic(SeededStream& rng, const Prime& P, std::size_t k) {
    std::vector<residue> digits(k);
    for (auto& d : digits) d = static_cast<residue>(rng.below(P.value()));
    return PadicInt::from_digits(P, std::move(digits));
}

TruncSeries random_series(SeededStream& rng, const Prime& P, std::size_t prec) {
    std::vector<residue> c(prec);
    for (auto& x : c) x = static_cast<residue>(rng.below(P.value()));
    return TruncSeries::from_reduced(P, std::move(c));
}

// Large powers as JSON: a number when it fits, else "p^e".
ojson power_value(std::uint64_t p, std::uint64_t e) {
    std::uint64_t v = saturating_pow(p, e);
    if (v != std::numeric_limits<std::uint64_t>::max()) return v;
    return std::to_string(p) + "^" + std::to_string(e);
}

std::string cell_text(const ojson& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_number_float()) {
        std::ostringstream os;
        os << std::setprecision(6) << v.get<double>();
        return os.str();
    }
    return v.dump();
}

} // namespace

const char* to_string(SectionStatus s) noexcept {
    switch (s) {
    case SectionStatus::pass: return "pass";
    case SectionStatus::fail: return "fail";
    case SectionStatus::skip: return "skip";
    }
    return "fail";
}

void ReportSection::fail_unless(bool ok, const std::string& why) {
    if (ok) return;
    status = SectionStatus::fail;
    notes.push_back("FAILED: " + why);
}

bool ReportDocument::passed() const noexcept {
    for (const auto& s : sections)
        if (s.status == SectionStatus::fail) return false;
    return true;
}

std::uint64_t SeededStream::next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::string to_json(const ReportDocument& doc, bool include_timings) {
    ojson j;
    j["schema_version"] = schema_version;
    j["tool_version"] = tool_version;
    j["config"] = doc.config;
    j["status"] = doc.passed() ? "pass" : "fail";
    ojson sections = ojson::array();
    for (const auto& s : doc.sections) {
        ojson js;
        js["name"] = s.name;
        js["status"] = to_string(s.status);
        js["columns"] = s.columns;
        ojson rows = ojson::array();
        for (const auto& r : s.rows) {
            ojson row;
            for (std::size_t c = 0; c < r.size() && c < s.columns.size(); ++c) row[s.columns[c]] = r[c];
            rows.push_back(std::move(row));
        }
        js["rows"] = std::move(rows);
        js["notes"] = s.notes;
        if (include_timings) js["seconds"] = s.seconds;
        sections.push_back(std::move(js));
    }
    j["sections"] = std::move(sections);
    return j.dump(2);
}

std::string to_text(const ReportDocument& doc, bool include_timings) {
    std::ostringstream os;
    for (const auto& s : doc.sections) {
        os << "== " << s.name << ": " << to_string(s.status);
        if (include_timings) os << " (" << std::fixed << std::setprecision(3) << s.seconds << " s)";
        os << "\n";
        std::vector<std::size_t> width(s.columns.size());
        for (std::size_t c = 0; c < s.columns.size(); ++c) width[c] = s.columns[c].size();
        for (const auto& r : s.rows)
            for (std::size_t c = 0; c < r.size() && c < width.size(); ++c)
                width[c] = std::max(width[c], cell_text(r[c]).size());
        for (std::size_t c = 0; c < s.columns.size(); ++c)
            os << (c ? "  " : "  ") << std::setw(static_cast<int>(width[c])) << s.columns[c];
        os << "\n";
        for (const auto& r : s.rows) {
            for (std::size_t c = 0; c < r.size() && c < width.size(); ++c)
                os << "  " << std::setw(static_cast<int>(width[c])) << cell_text(r[c]);
            os << "\n";
        }
        for (const auto& n : s.notes) os << "  " << n << "\n";
    }
    os << "overall: " << (doc.passed() ? "pass" : "fail") << "\n";
    return os.str();
}

// --------------------------------------------------------------- sections

ReportSection frobenius_section(const std::vector<std::uint32_t>& primes, unsigned i_max, std::size_t prec) {
    Stopwatch sw;
    ReportSection s;
    s.name = "frobenius";
    s.columns = {"p", "i", "p^i", "holds"};
    for (auto pv : primes) {
        Prime P(pv);
        const TruncSeries base = one_minus_x(P, prec);
        for (unsigned i = 0; i <= i_max; ++i) {
            const std::uint64_t e = saturating_pow(pv, i);
            TruncSeries lhs = power(base, e);
            TruncSeries rhs = TruncSeries::one(P, prec);
            if (e < prec) rhs = sub(rhs, TruncSeries::monomial(P, prec, e));
            const bool ok = lhs == rhs;
            s.rows.push_back({pv, i, e, ok});
            s.fail_unless(ok, "(1-x)^{p^i} != 1 - x^{p^i} for p=" + std::to_string(pv) + ", i=" + std::to_string(i));
        }
    }
    s.notes.push_back("precision " + std::to_string(prec));
    s.seconds = sw.seconds();
    return s;
}

ReportSection tau_section(const std::vector<std::uint32_t>& primes, std::size_t prec, unsigned trials,
                          std::uint64_t seed) {
    Stopwatch sw;
    ReportSection s;
    s.name = "tau";
    s.columns = {"p", "check", "trials", "failures"};
    SeededStream rng(seed);
    for (auto pv : primes) {
        Prime P(pv);
        const std::size_t k = required_digits(P, prec);

        const bool inverse_ok = tau(PadicInt::from_int(-1, P, k), prec) == invert(one_minus_x(P, prec));
        s.rows.push_back({pv, "tau(-1) = (1-x)^-1", 1, inverse_ok ? 0 : 1});
        s.fail_unless(inverse_ok, "tau(-1) differs from invert(1-x) at p=" + std::to_string(pv));

        unsigned hom_fail = 0, cont_fail = 0, pow_fail = 0;
        for (unsigned t = 0; t < trials; ++t) {
            PadicInt a = random_padic(rng, P, k), b = random_padic(rng, P, k);
            if (!(tau(a + b, prec) == mul(tau(a, prec), tau(b, prec)))) ++hom_fail;

            // alpha == beta mod p^j  =>  tau(alpha) == tau(beta) mod x^{p^j}
            const std::size_t j = 1 + rng.below(k);
            PadicInt shift = random_padic(rng, P, k);
            std::vector<residue> d(k, 0);
            for (std::size_t q = j; q < k; ++q) d[q] = shift.digit(q);
            PadicInt b2 = a + PadicInt::from_digits(P, d);
            const std::size_t modulus = std::min<std::uint64_t>(saturating_pow(pv, j), prec);
            if (!(truncate(tau(a, prec), modulus) == truncate(tau(b2, prec), modulus))) ++cont_fail;

            const std::uint64_t e = rng.below(12);
            if (!(tau(a * PadicInt::from_int(static_cast<std::int64_t>(e), P, k), prec) == power(tau(a, prec), e)))
                ++pow_fail;
        }
        s.rows.push_back({pv, "tau(a+b) = tau(a) tau(b)", trials, hom_fail});
        s.rows.push_back({pv, "continuity mod x^{p^j}", trials, cont_fail});
        s.rows.push_back({pv, "tau(a n) = tau(a)^n", trials, pow_fail});
        s.fail_unless(hom_fail == 0 && cont_fail == 0 && pow_fail == 0,
                      "tau property trials failed at p=" + std::to_string(pv));
    }
    s.notes.push_back("precision " + std::to_string(prec) + ", seed " + std::to_string(seed));
    s.seconds = sw.seconds();
    return s;
}

ReportSection antipode_section(const std::vector<std::uint32_t>& primes, unsigned i_max) {
    Stopwatch sw;
    ReportSection s;
    s.name = "antipode";
    s.columns = {"p", "i", "coinvariants_dim", "tensor_dim", "bijective"};
    for (auto pv : primes) {
        Prime P(pv);
        for (unsigned i = 1; i <= i_max; ++i) {
            FpCModule r = regular_module(P, i);
            AntipodeIsoReport rep = antipode_iso_check(r, ring_antipode(r, i));
            s.rows.push_back({pv, i, rep.coinvariants_dim, rep.tensor_dim, rep.bijective});
            s.fail_unless(rep.bijective && rep.coinvariants_dim == rep.tensor_dim,
                          "antipode map not bijective at p=" + std::to_string(pv) + ", i=" + std::to_string(i));
        }
    }
    s.seconds = sw.seconds();
    return s;
}

ReportSection collapse_section(const std::vector<std::uint32_t>& primes, unsigned i_max) {
    Stopwatch sw;
    ReportSection s;
    s.name = "collapse";
    s.columns = {"p", "i", "coinvariants_dim", "tensor_dim"};
    for (auto pv : primes) {
        Prime P(pv);
        for (unsigned i = 1; i <= i_max; ++i) {
            FpCModule r = regular_module(P, i);
            const std::size_t c = diagonal_coinvariants(r, r).dim;
            const std::size_t t = tensor_over_groupring(r, r).dim;
            s.rows.push_back({pv, i, c, t});
            s.fail_unless(c == i && t == i, "dims differ from i at p=" + std::to_string(pv) + ", i=" + std::to_string(i));
        }
    }
    s.seconds = sw.seconds();
    return s;
}

ReportSection census_section(std::uint32_t p, const std::vector<std::int64_t>& alpha,
                             const std::vector<std::int64_t>& beta, unsigned k, unsigned i_max) {
    Stopwatch sw;
    ReportSection s;
    s.name = "census";
    s.columns = {"level", "size", "bound_exponent", "bound", "ambient_exponent", "ambient", "ratio"};
    Prime P(p);
    double previous = 2.0;
    for (unsigned level = std::max(k, 1u); level <= i_max; ++level) {
        RatioCensus rc = census_ratio_set(P, alpha, beta, k, level);
        const std::uint64_t ambient_exp = saturating_pow(p, level);
        const double ratio = static_cast<double>(rc.set.size()) /
                             std::pow(static_cast<double>(p), static_cast<double>(ambient_exp));
        s.rows.push_back({level, rc.set.size(), rc.bound_exponent, power_value(p, rc.bound_exponent), ambient_exp,
                          power_value(p, ambient_exp), ratio});
        s.fail_unless(rc.tuple_bound_holds, "tuple count exceeds p^{2in} at level " + std::to_string(level));
        s.fail_unless(rc.solution_bound_holds, "solution count exceeds p^{p^k} at level " + std::to_string(level));
        s.fail_unless(rc.bound_holds, "|A^i| exceeds p^{2in+p^k} at level " + std::to_string(level));
        s.fail_unless(ratio < previous, "ratio not strictly decreasing at level " + std::to_string(level));
        previous = ratio;
    }
    s.seconds = sw.seconds();
    return s;
}

ReportSection density_gap_section(std::uint32_t p, unsigned s_level, unsigned i_max,
                                  const std::vector<std::string>& centre_text) {
    Stopwatch sw;
    ReportSection s;
    s.name = "density_gap";
    s.columns = {"centre", "level", "witness", "verified"};
    Prime P(p);
    CensusProvider provider = [P](unsigned level) { return enum_A(P, level); };
    const std::size_t prec = saturating_pow(p, s_level + i_max);
    std::vector<TruncSeries> centres;
    if (centre_text.empty())
        centres = {TruncSeries(P, prec), TruncSeries::one(P, prec), one_minus_x(P, prec)};
    for (const auto& text : centre_text) centres.push_back(parse_series(text, P, prec));
    for (const auto& f : centres) {
        try {
            DensityGap gap = density_gap(P, provider, f, s_level, i_max);
            const bool verified = ball_misses_census(enum_A(P, gap.level), gap.witness);
            s.rows.push_back({to_string(f), gap.level, to_string(gap.witness), verified});
            s.fail_unless(verified, "independent verifier rejected the witness for centre " + to_string(f));
            for (const auto& line : gap.log) s.notes.push_back(line);
        } catch (const search_exhausted_error& e) {
            s.rows.push_back({to_string(f), nullptr, nullptr, false});
            s.fail_unless(false, e.what());
        }
    }
    s.seconds = sw.seconds();
    return s;
}

ReportSection mu_kappa_section(const std::vector<std::uint32_t>& primes, std::size_t prec, unsigned trials,
                               std::uint64_t seed) {
    Stopwatch sw;
    ReportSection s;
    s.name = "mu_kappa";
    s.columns = {"p", "check", "trials", "failures"};
    SeededStream rng(seed ^ 0x6d75u);
    for (auto pv : primes) {
        Prime P(pv);
        unsigned mk_fail = 0, km_fail = 0;
        for (unsigned t = 0; t < trials; ++t) {
            TruncSeries body = random_series(rng, P, prec);
            std::vector<residue> c(body.coeffs().begin(), body.coeffs().end());
            if (c[0] == 0) c[0] = 1;
            const auto val = static_cast<std::int64_t>(rng.below(prec)) - static_cast<std::int64_t>(prec / 2);
            LaurentTrunc l(val, TruncSeries::from_reduced(P, std::move(c)));
            if (!(mu(kappa(l)) == l)) ++mk_fail;

            TensorRep rep = normalize({random_series(rng, P, prec), rng.below(prec)});
            if (!(kappa(mu(rep)) == rep)) ++km_fail;
        }
        s.rows.push_back({pv, "mu(kappa(l)) = l", trials, mk_fail});
        s.rows.push_back({pv, "kappa(mu(t)) = t, t normalized", trials, km_fail});
        s.fail_unless(mk_fail == 0 && km_fail == 0, "mu/kappa identity failed at p=" + std::to_string(pv));
    }
    s.notes.push_back("precision " + std::to_string(prec) + ", seed " + std::to_string(seed));
    s.seconds = sw.seconds();
    return s;
}

ReportSection homology_oracle_section(const Budget& budget) {
    Stopwatch sw;
    ReportSection s;
    s.name = "homology_oracle";
    s.columns = {"group", "p", "expected", "bar_h2"};
    struct Case {
        std::string name;
        std::uint32_t p;
        bool cyclic;
        unsigned exponent;
    };
    // expected: 1 for cyclic groups (universal coefficients), r(r+1)/2 for (Z/p)^r (Kunneth)
    const std::vector<Case> cases{{"Z/2", 2, true, 1},     {"Z/3", 3, true, 1},     {"Z/4", 2, true, 2},
                                  {"Z/8", 2, true, 3},     {"Z/9", 3, true, 2},     {"Z/16", 2, true, 4},
                                  {"(Z/2)^2", 2, false, 2}, {"(Z/3)^2", 3, false, 2}, {"(Z/2)^3", 2, false, 3}};
    for (const auto& c : cases) {
        Prime P(c.p);
        FiniteGroup g = c.cyclic ? cyclic_group(P, c.exponent, budget.max_group)
                                 : elementary_abelian(P, c.exponent, budget.max_group);
        const std::size_t expected = c.cyclic ? 1 : c.exponent * (c.exponent + 1) / 2;
        const std::size_t got = bar_h2(g, budget.max_bar);
        s.rows.push_back({c.name, c.p, expected, got});
        s.fail_unless(got == expected, "bar_h2(" + c.name + ") = " + std::to_string(got));
    }
    s.seconds = sw.seconds();
    return s;
}

namespace {

std::vector<element> socle_of_lamplighter(const FiniteGroup& g, unsigned i, unsigned copies) {
    // lamps in (x^{i-1}) with trivial cyclic part
    const Prime& P = g.prime();
    std::vector<element> out;
    for (element x = 0; x < g.order(); ++x) {
        SemidirectElement e = decode_lamplighter(x, P, i, copies);
        if (e.n != 0) continue;
        bool in = true;
        for (unsigned j = 0; j + 1 < i; ++j) in = in && e.v[j] == 0 && e.w[j] == 0;
        if (in) out.push_back(x);
    }
    return out;
}

} // namespace

ReportSection five_term_section(const Budget& budget) {
    Stopwatch sw;
    ReportSection s;
    s.name = "five_term";
    s.columns = {"G", "H", "|G|", "|H|", "coker", "hopf", "equal"};
    Prime two(2), three(3);

    struct Pair {
        std::string g_name, h_name;
        FiniteGroup g;
        std::vector<element> h;
    };
    std::vector<Pair> pairs;

    FiniteGroup v4 = elementary_abelian(two, 2);
    pairs.push_back({"(Z/2)^2", "diagonal", v4, {0, 3}});
    pairs.push_back({"(Z/2)^2", "first factor", v4, {0, 1}});
    pairs.push_back({"(Z/2)^2", "G", v4, {0, 1, 2, 3}});
    pairs.push_back({"(Z/2)^2", "1", v4, {0}});
    FiniteGroup z4 = cyclic_group(two, 2);
    pairs.push_back({"Z/4", "2Z/4", z4, {0, 2}});
    FiniteGroup z9 = cyclic_group(three, 2);
    pairs.push_back({"Z/9", "3Z/9", z9, {0, 3, 6}});
    FiniteGroup lamp = build_lamplighter(two, 2, 1, budget.max_group);
    pairs.push_back({"lamplighter(2,2,1)", "socle", lamp, socle_of_lamplighter(lamp, 2, 1)});
    pairs.push_back({"lamplighter(2,2,1)", "center", lamp, lamp.center()});
    pairs.push_back({"lamplighter(2,2,1)", "Frattini", lamp, frattini_subgroup(lamp)});
    FiniteGroup dl1 = build_lamplighter(two, 1, 2, budget.max_group);
    pairs.push_back({"DL^(1)", "lamps", dl1, socle_of_lamplighter(dl1, 1, 2)});

    for (const auto& pr : pairs) {
        FiveTermReport rep = five_term_check(pr.g, pr.h, budget.max_bar);
        s.rows.push_back({pr.g_name, pr.h_name, pr.g.order(), pr.h.size(), rep.cokernel_dim, rep.hopf_dim, rep.equal});
        s.fail_unless(rep.equal, "five-term dims differ for " + pr.g_name + " / " + pr.h_name);
    }
    s.seconds = sw.seconds();
    return s;
}

ReportSection tower_section(std::uint32_t p, unsigned i_max, const Budget& budget) {
    Stopwatch sw;
    ReportSection s;
    s.name = "tower";
    s.columns = {"i", "order", "h2_dim", "coinv_dim", "tensor_gr_dim", "elementary_h2", "inequality", "equality"};
    std::vector<TowerRow> rows;
    try {
        rows = tower_report(Prime(p), i_max, budget);
    } catch (const tower_resource_error& e) {
        rows = e.partial_rows();
        s.notes.push_back(std::string("stopped: ") + e.what());
        s.status = SectionStatus::skip;
        s.resource_exhausted = true;
    }
    for (const auto& r : rows) {
        s.rows.push_back({r.i, r.order, r.h2_dim, r.coinv_dim, r.tensor_gr_dim, r.elementary_h2, r.inequality_holds,
                          r.equality_observed});
        s.fail_unless(r.collapse_holds, "coinv/tensor dims differ from i at i=" + std::to_string(r.i));
        s.fail_unless(r.inequality_holds, "h2_dim below coinv_dim + 2 h2(V) at i=" + std::to_string(r.i));
        if (r.i == 1) s.fail_unless(r.h2_dim == 6, "DL^(1) = (Z/p)^3 should have h2 = 6");
    }
    s.seconds = sw.seconds();
    return s;
}

ReportDocument run_all(std::uint64_t seed, const Budget& budget) {
    ReportDocument doc;
    doc.config["seed"] = seed;
    doc.config["max_group"] = budget.max_group;
    doc.config["max_bar"] = budget.max_bar;
    doc.config["frobenius_precision"] = 4096;
    doc.config["tau_precision"] = 256;
    doc.config["mu_kappa_precision"] = 128;

    doc.sections.push_back(frobenius_section({2, 3, 5}, 10, 4096));
    doc.sections.push_back(tau_section({2, 3, 5}, 256, 100, seed));
    doc.sections.push_back(antipode_section({2, 3}, 6));
    doc.sections.push_back(collapse_section({2, 3}, 8));
    ReportSection census = census_section(2, {1}, {1}, 1, 4);
    if (!census.rows.empty()) {
        const double last = census.rows.back().back().get<double>();
        census.fail_unless(last < 1e-3, "final ratio not below 1e-3");
    }
    doc.sections.push_back(std::move(census));
    doc.sections.push_back(density_gap_section(2, 1, 4));
    doc.sections.push_back(mu_kappa_section({2, 3, 5}, 128, 100, seed));
    doc.sections.push_back(homology_oracle_section(budget));
    doc.sections.push_back(five_term_section(budget));
    doc.sections.push_back(tower_section(2, 2, budget));
    return doc;
}

} // namespace procyclic
