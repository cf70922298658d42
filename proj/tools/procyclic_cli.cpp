// Command-line front end.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage error,
// 3 a resource budget was exceeded (the partial report is still printed).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "procyclic/cycmod.hpp"
#include "procyclic/errors.hpp"
#include "procyclic/exponent_action.hpp"
#include "procyclic/grouph2.hpp"
#include "procyclic/padic.hpp"
#include "procyclic/report.hpp"

using namespace procyclic;
using ojson = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, check_failed = 1, usage = 2, resource = 3 };

struct Output {
    bool json = false;
    bool timings = false;
    std::string out_path;
};

int emit(const ReportDocument& doc, const Output& o) {
    const std::string text = o.json ? to_json(doc, o.timings) + "\n" : to_text(doc, o.timings);
    if (o.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out_path);
        if (!f) throw usage_error("cannot open " + o.out_path + " for writing");
        f << text;
    }
    for (const auto& s : doc.sections)
        if (s.resource_exhausted) return resource;
    return doc.passed() ? ok : check_failed;
}

ReportDocument single(ReportSection s, ojson config) {
    ReportDocument doc;
    doc.config = std::move(config);
    doc.sections.push_back(std::move(s));
    return doc;
}

FiniteGroup named_group(const std::string& kind, Prime p, unsigned i, const Budget& budget) {
    if (kind == "cyclic") return cyclic_group(p, i, budget.max_group);
    if (kind == "elab") return elementary_abelian(p, i, budget.max_group);
    if (kind == "lamp") return build_lamplighter(p, i, 1, budget.max_group);
    if (kind == "dl") return build_lamplighter(p, i, 2, budget.max_group);
    throw usage_error("unknown group kind " + kind);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw usage_error("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-precision checks for series, p-adic exponents, cyclic modules and p-group homology"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tool_version));

    Output out;
    const Budget budget = Budget::from_env();
    std::uint32_t p = 2;
    unsigned i = 1, i_max = 1, k = 1, n = 1, s_level = 1;
    std::size_t prec = 4096;
    std::uint64_t seed = default_seed;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", out.json, "JSON output"); };

    auto* frob = app.add_subcommand("verify-frobenius", "(1-x)^{p^i} = 1 - x^{p^i} for i = 0..imax");
    frob->add_option("--p", p, "prime")->required();
    frob->add_option("--imax", i_max, "largest i")->required();
    frob->add_option("--prec", prec, "series precision")->capture_default_str();
    add_json(frob);

    std::string alpha_text;
    auto* tau_cmd = app.add_subcommand("tau", "Print tau(alpha) = (1-x)^alpha");
    tau_cmd->add_option("--p", p, "prime")->required();
    tau_cmd->add_option("--alpha", alpha_text, "decimal integer or JSON digit list")->required();
    tau_cmd->add_option("--prec", prec, "series precision")->required();
    add_json(tau_cmd);

    auto* anti = app.add_subcommand("antipode-check", "Antipode bijection on R_i for i = 1..imax");
    anti->add_option("--p", p, "prime")->required();
    anti->add_option("--imax", i_max, "largest i")->required();
    add_json(anti);

    auto* coinv = app.add_subcommand("coinv", "Dims of (R_i x R_i)_C and R_i x_{F_p[C]} R_i, as JSON");
    coinv->add_option("--p", p, "prime")->required();
    coinv->add_option("--i", i, "truncation level")->required();

    std::vector<std::int64_t> alpha, beta;
    auto* census = app.add_subcommand("census", "Ratio-set census against the counting bound");
    census->add_option("--p", p, "prime")->required();
    census->add_option("--n", n, "number of terms")->capture_default_str();
    census->add_option("--k", k, "denominator level")->required();
    census->add_option("--imax", i_max, "largest level")->required();
    census->add_option("--alpha", alpha, "numerator coefficients (default all 1)");
    census->add_option("--beta", beta, "denominator coefficients (default all 1)");
    add_json(census);

    std::vector<std::string> centres;
    auto* gap = app.add_subcommand("density-gap", "Find a ball missing the census of powers of 1-x");
    gap->add_option("--p", p, "prime")->required();
    gap->add_option("--s", s_level, "ball level")->required();
    gap->add_option("--imax", i_max, "levels searched beyond s")->required();
    gap->add_option("--f", centres, "ball centre(s), series text or JSON array");
    add_json(gap);

    std::string group_kind = "dl", group_file, emit_path;
    auto* h2 = app.add_subcommand("h2", "dim H_2(G; F_p) by the bar complex");
    h2->add_option("--group", group_kind, "dl | lamp | elab | cyclic")
        ->check(CLI::IsMember({"dl", "lamp", "elab", "cyclic"}))
        ->capture_default_str();
    h2->add_option("--p", p, "prime");
    h2->add_option("--i", i, "level, rank or exponent");
    h2->add_option("--group-file", group_file, "read the group from a JSON table instead");
    h2->add_option("--emit-group", emit_path, "write the group table as JSON");
    add_json(h2);

    auto* tower = app.add_subcommand("tower", "Double lamplighter tower rows");
    tower->add_option("--p", p, "prime")->required();
    tower->add_option("--imax", i_max, "largest level")->required();
    add_json(tower);

    bool all = false;
    auto* report = app.add_subcommand("report", "Run the verification suite");
    report->add_flag("--all", all, "every section")->required();
    report->add_option("--seed", seed, "seed for randomized sections")->capture_default_str();
    report->add_option("--out", out.out_path, "write the report to a file");
    report->add_flag("--timings", out.timings, "include wall-clock timings (not byte-stable)");
    add_json(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        ojson config;
        config["p"] = p;

        if (*frob) {
            config["imax"] = i_max;
            config["precision"] = prec;
            return emit(single(frobenius_section({p}, i_max, prec), config), out);
        }
        if (*tau_cmd) {
            Prime P(p);
            PadicInt a = parse_padic(alpha_text, P, required_digits(P, prec));
            TruncSeries t = tau(a, prec);
            if (out.json) {
                ojson j;
                j["p"] = p;
                j["alpha"] = to_string(a);
                j["precision"] = prec;
                j["coefficients"] = ojson::parse(to_json(t));
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << to_string(t) << "\n" << to_json(t) << "\n";
            }
            return ok;
        }
        if (*anti) {
            config["imax"] = i_max;
            return emit(single(antipode_section({p}, i_max), config), out);
        }
        if (*coinv) {
            Prime P(p);
            FpCModule r = regular_module(P, i);
            AntipodeIsoReport rep = antipode_iso_check(r, ring_antipode(r, i));
            ojson j;
            j["p"] = p;
            j["i"] = i;
            j["coinvariants_dim"] = rep.coinvariants_dim;
            j["tensor_dim"] = rep.tensor_dim;
            j["bijective"] = rep.bijective;
            std::cout << j.dump(2) << "\n";
            return rep.bijective && rep.coinvariants_dim == i && rep.tensor_dim == i ? ok : check_failed;
        }
        if (*census) {
            if (alpha.empty()) alpha.assign(n, 1);
            if (beta.empty()) beta.assign(n, 1);
            config["n"] = n;
            config["k"] = k;
            config["imax"] = i_max;
            config["alpha"] = alpha;
            config["beta"] = beta;
            return emit(single(census_section(p, alpha, beta, k, i_max), config), out);
        }
        if (*gap) {
            config["s"] = s_level;
            config["imax"] = i_max;
            return emit(single(density_gap_section(p, s_level, i_max, centres), config), out);
        }
        if (*h2) {
            std::optional<FiniteGroup> g;
            std::string label;
            if (!group_file.empty()) {
                g.emplace(group_from_json(read_file(group_file), budget.max_group));
                label = group_file;
            } else {
                g.emplace(named_group(group_kind, Prime(p), i, budget));
                label = group_kind + "(" + std::to_string(p) + "," + std::to_string(i) + ")";
            }
            if (!emit_path.empty()) {
                std::ofstream f(emit_path);
                if (!f) throw usage_error("cannot open " + emit_path + " for writing");
                f << group_to_json(*g) << "\n";
            }
            config["p"] = g->prime().value();
            config["max_bar"] = budget.max_bar;
            ReportSection sec;
            sec.name = "h2";
            sec.columns = {"group", "order", "abelian", "h2_dim"};
            try {
                sec.rows.push_back({label, g->order(), g->is_abelian(), bar_h2(*g, budget.max_bar)});
            } catch (const resource_error& e) {
                sec.rows.push_back({label, g->order(), g->is_abelian(), nullptr});
                sec.status = SectionStatus::skip;
                sec.resource_exhausted = true;
                sec.notes.push_back(std::string("stopped: ") + e.what());
            }
            return emit(single(std::move(sec), config), out);
        }
        if (*tower) {
            config["imax"] = i_max;
            config["max_group"] = budget.max_group;
            config["max_bar"] = budget.max_bar;
            return emit(single(tower_section(p, i_max, budget), config), out);
        }
        if (*report) return emit(run_all(seed, budget), out);
    } catch (const resource_error& e) {
        std::cerr << "resource budget exceeded: " << e.what() << "\n";
        return resource;
    } catch (const search_exhausted_error& e) {
        std::cerr << e.what() << "\n";
        return check_failed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}
