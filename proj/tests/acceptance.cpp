// Acceptance gate: one PASS/FAIL line per criterion, each with its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "procyclic/grouph2.hpp"
#include "procyclic/report.hpp"

using namespace procyclic;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

bool all_pass(const ReportSection& s) { return s.status == SectionStatus::pass; }

std::string first_note(const ReportSection& s) { return s.notes.empty() ? "" : s.notes.front(); }

int failures = 0;

void criterion(int number, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out{false, ""};
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double took = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = took < limit_seconds;
    const bool pass = out.ok && in_time;
    if (!pass) ++failures;
    std::printf("%s criterion %2d: %s (%.3f s, limit %.0f s)%s%s\n", pass ? "PASS" : "FAIL", number, title, took,
                limit_seconds, out.detail.empty() ? "" : ": ", out.detail.c_str());
    if (!in_time) std::printf("     criterion %d exceeded its time limit\n", number);
    std::fflush(stdout);
}

} // namespace

int main() {
    const Budget budget{};

    criterion(1, "Frobenius identity, p in {2,3,5}, i <= 10, precision 4096", 1.0, [] {
        ReportSection s = frobenius_section({2, 3, 5}, 10, 4096);
        return Outcome{all_pass(s) && s.rows.size() == 33, first_note(s)};
    });

    criterion(2, "tau(-1) = 1/(1-x) at precision 256; homomorphism and continuity on 100 trials", 5.0, [] {
        ReportSection s = tau_section({2, 3, 5}, 256, 100, default_seed);
        return Outcome{all_pass(s), first_note(s)};
    });

    criterion(3, "antipode map bijective with equal dims, p in {2,3}, i = 1..6", 10.0, [] {
        ReportSection s = antipode_section({2, 3}, 6);
        bool ok = all_pass(s) && s.rows.size() == 12;
        for (const auto& r : s.rows) ok = ok && r[2] == r[1] && r[3] == r[1] && r[4] == true;
        return Outcome{ok, first_note(s)};
    });

    criterion(4, "coinvariants and tensor over the group ring have dim i, p in {2,3}, i = 1..8", 30.0, [] {
        ReportSection s = collapse_section({2, 3}, 8);
        return Outcome{all_pass(s) && s.rows.size() == 16, first_note(s)};
    });

    criterion(5, "|A^i| <= p^{2in+p^k}, ratio strictly decreasing, final ratio < 1e-3", 120.0, [] {
        ReportSection s = census_section(2, {1}, {1}, 1, 4);
        if (s.rows.size() != 4) return Outcome{false, "expected levels 1..4"};
        const double last = s.rows.back().back().get<double>();
        return Outcome{all_pass(s) && last < 1e-3, "final ratio " + std::to_string(last)};
    });

    criterion(6, "density gap for p = 2, s = 1 within i_max = 4, independently verified", 60.0, [] {
        ReportSection s = density_gap_section(2, 1, 4);
        bool ok = all_pass(s) && !s.rows.empty();
        for (const auto& r : s.rows) ok = ok && r[3] == true;
        return Outcome{ok, first_note(s)};
    });

    criterion(7, "mu(kappa(l)) = l and kappa(mu(t)) = t on 100 random inputs at precision 128", 1.0, [] {
        ReportSection s = mu_kappa_section({2, 3, 5}, 128, 100, default_seed);
        return Outcome{all_pass(s), first_note(s)};
    });

    criterion(8, "bar H2 oracle on Z/p, (Z/p)^2, (Z/2)^3, Z/4", 120.0, [&] {
        ReportSection s = homology_oracle_section(budget);
        return Outcome{all_pass(s), first_note(s)};
    });

    criterion(9, "five-term exactness on at least 5 pairs incl. diagonal in (Z/2)^2 and lamplighter socle", 300.0,
              [&] {
                  ReportSection s = five_term_section(budget);
                  bool diag = false, socle = false;
                  for (const auto& r : s.rows) {
                      diag = diag || (r[0] == "(Z/2)^2" && r[1] == "diagonal" && r[6] == true);
                      socle = socle || (r[0] == "lamplighter(2,2,1)" && r[1] == "socle" && r[6] == true);
                  }
                  return Outcome{all_pass(s) && s.rows.size() >= 5 && diag && socle,
                                 std::to_string(s.rows.size()) + " pairs"};
              });

    criterion(10, "tower p = 2, i in {1,2}: coinv = i, h2 >= i + 2 h2((Z/2)^i), h2(DL^(1)) = 6", 600.0, [&] {
        std::vector<TowerRow> rows = tower_report(Prime(2), 2, budget);
        bool ok = rows.size() == 2;
        std::string detail;
        for (const auto& r : rows) {
            const std::size_t elem = bar_h2(elementary_abelian(Prime(2), r.i), budget.max_bar);
            ok = ok && r.coinv_dim == r.i && r.h2_dim >= r.i + 2 * elem;
            if (r.i == 1) ok = ok && r.h2_dim == 6;
            detail += (detail.empty() ? "" : ", ") + std::string("h2(DL^(") + std::to_string(r.i) +
                      ")) = " + std::to_string(r.h2_dim);
        }
        return Outcome{ok, detail};
    });

    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
