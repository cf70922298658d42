#include "procyclic/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

#include <json.hpp>

#include "procyclic/errors.hpp"

namespace procyclic {

namespace {

std::size_t env_or(const char* name, std::size_t fallback) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw) return fallback;
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(raw, &pos);
        if (raw[pos] != '\0') throw usage_error(std::string(name) + ": not an integer");
        return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
        throw usage_error(std::string(name) + ": not an integer: " + raw);
    }
}

std::vector<element> closure(const std::vector<element>& table, std::size_t order, element identity,
                             const std::vector<element>& gens) {
    std::vector<bool> seen(order, false);
    std::deque<element> queue{identity};
    seen[identity] = true;
    while (!queue.empty()) {
        element x = queue.front();
        queue.pop_front();
        for (element g : gens) {
            element y = table[static_cast<std::size_t>(x) * order + g];
            if (!seen[y]) {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    std::vector<element> out;
    for (std::size_t x = 0; x < order; ++x)
        if (seen[x]) out.push_back(static_cast<element>(x));
    return out;
}

void check_budget(std::size_t order, std::size_t max_order, const char* what) {
    if (order > max_order)
        throw resource_error(std::string(what) + ": order " + std::to_string(order) + " exceeds the group budget " +
                             std::to_string(max_order));
}

} // namespace

Budget Budget::from_env() {
    Budget b;
    b.max_group = env_or("PROCYCLIC_MAX_GROUP", b.max_group);
    b.max_bar = env_or("PROCYCLIC_MAX_BAR", b.max_bar);
    return b;
}

// ------------------------------------------------------------ FiniteGroup

FiniteGroup::FiniteGroup(Prime prime, std::vector<element> table, std::vector<element> generators,
                         std::vector<std::string> generator_names)
    : prime_(prime), order_(0), table_(std::move(table)), identity_(0), generators_(std::move(generators)),
      generator_names_(std::move(generator_names)) {
    std::size_t m = 0;
    while (m * m < table_.size()) ++m;
    if (m == 0 || m * m != table_.size()) throw usage_error("FiniteGroup: table is not square");
    order_ = m;
    for (std::size_t o = m; o > 1; o /= prime_.value())
        if (o % prime_.value() != 0) throw usage_error("FiniteGroup: order " + std::to_string(m) + " is not a power of p");
    for (element x : table_)
        if (x >= m) throw usage_error("FiniteGroup: table entry out of range");
    if (generator_names_.size() != generators_.size()) throw usage_error("FiniteGroup: one name per generator");
    for (element g : generators_)
        if (g >= m) throw usage_error("FiniteGroup: generator out of range");

    // identity: the unique e with e x = x = x e
    bool found = false;
    for (std::size_t e = 0; e < m && !found; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < m && ok; ++x) ok = table_[e * m + x] == x && table_[x * m + e] == x;
        if (ok) {
            identity_ = static_cast<element>(e);
            found = true;
        }
    }
    if (!found) throw usage_error("FiniteGroup: no identity element");

    inverse_.assign(m, 0);
    for (std::size_t x = 0; x < m; ++x) {
        bool has = false;
        for (std::size_t y = 0; y < m && !has; ++y)
            if (table_[x * m + y] == identity_ && table_[y * m + x] == identity_) {
                inverse_[x] = static_cast<element>(y);
                has = true;
            }
        if (!has) throw usage_error("FiniteGroup: element " + std::to_string(x) + " has no inverse");
    }

    if (closure(table_, m, identity_, generators_).size() != m)
        throw usage_error("FiniteGroup: generators do not generate the table");

    if (m <= exhaustive_assoc_limit) {
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                const std::size_t ab = table_[a * m + b];
                for (std::size_t c = 0; c < m; ++c)
                    if (table_[ab * m + c] != table_[a * m + table_[b * m + c]])
                        throw usage_error("FiniteGroup: table is not associative");
            }
    } else {
        // Light's test: (a b) g = a (b g) for every generator g suffices.
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                const std::size_t ab = table_[a * m + b];
                for (element g : generators_)
                    if (table_[ab * m + g] != table_[a * m + table_[b * m + g]])
                        throw usage_error("FiniteGroup: table is not associative");
            }
    }
}

element FiniteGroup::pow(element a, std::uint64_t e) const noexcept {
    element result = identity_;
    while (e) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

bool FiniteGroup::is_abelian() const noexcept {
    for (std::size_t a = 0; a < order_; ++a)
        for (std::size_t b = a + 1; b < order_; ++b)
            if (table_[a * order_ + b] != table_[b * order_ + a]) return false;
    return true;
}

std::vector<element> FiniteGroup::center() const {
    std::vector<element> out;
    for (std::size_t z = 0; z < order_; ++z) {
        bool central = true;
        for (std::size_t g = 0; g < order_ && central; ++g) central = table_[z * order_ + g] == table_[g * order_ + z];
        if (central) out.push_back(static_cast<element>(z));
    }
    return out;
}

GroupHom::GroupHom(const FiniteGroup& source, const FiniteGroup& target, std::vector<element> images)
    : images_(std::move(images)) {
    if (images_.size() != source.order()) throw usage_error("GroupHom: image table has the wrong length");
    for (element y : images_)
        if (y >= target.order()) throw usage_error("GroupHom: image out of range");
    for (std::size_t a = 0; a < source.order(); ++a)
        for (std::size_t b = 0; b < source.order(); ++b)
            if (images_[source.mul(static_cast<element>(a), static_cast<element>(b))] !=
                target.mul(images_[a], images_[b]))
                throw usage_error("GroupHom: map is not a homomorphism");
}

// -------------------------------------------------------------- subgroups

std::vector<element> subgroup_closure(const FiniteGroup& g, const std::vector<element>& gens) {
    return closure(g.table(), g.order(), g.identity(), gens);
}

bool is_subgroup(const FiniteGroup& g, const std::vector<element>& h) {
    if (h.empty()) return false;
    std::vector<bool> in(g.order(), false);
    for (element x : h) {
        if (x >= g.order()) return false;
        in[x] = true;
    }
    if (!in[g.identity()]) return false;
    for (element a : h)
        for (element b : h)
            if (!in[g.mul(a, b)]) return false;
    return true;
}

bool is_normal(const FiniteGroup& g, const std::vector<element>& h) {
    if (!is_subgroup(g, h)) return false;
    std::vector<bool> in(g.order(), false);
    for (element x : h) in[x] = true;
    for (std::size_t x = 0; x < g.order(); ++x)
        for (element y : h)
            if (!in[g.mul(g.mul(g.inv(static_cast<element>(x)), y), static_cast<element>(x))]) return false;
    return true;
}

QuotientGroup quotient(const FiniteGroup& g, const std::vector<element>& h) {
    if (!is_normal(g, h)) throw usage_error("quotient: subgroup is not normal");
    const std::size_t m = g.order();
    std::vector<element> rep(m);
    for (std::size_t x = 0; x < m; ++x) {
        element best = static_cast<element>(x);
        for (element y : h) best = std::min(best, g.mul(static_cast<element>(x), y));
        rep[x] = best;
    }
    std::vector<element> reps;
    for (std::size_t x = 0; x < m; ++x)
        if (rep[x] == x) reps.push_back(static_cast<element>(x));
    std::vector<element> index_of(m, 0);
    for (std::size_t i = 0; i < reps.size(); ++i) index_of[reps[i]] = static_cast<element>(i);
    std::vector<element> images(m);
    for (std::size_t x = 0; x < m; ++x) images[x] = index_of[rep[x]];

    const std::size_t q = reps.size();
    std::vector<element> table(q * q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) table[i * q + j] = images[g.mul(reps[i], reps[j])];

    std::vector<element> gens;
    std::vector<std::string> names;
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
        element img = images[g.generators()[k]];
        if (img == images[g.identity()] || std::find(gens.begin(), gens.end(), img) != gens.end()) continue;
        gens.push_back(img);
        names.push_back(g.generator_names()[k]);
    }
    FiniteGroup qg(g.prime(), std::move(table), std::move(gens), std::move(names));
    GroupHom proj(g, qg, std::move(images));
    return {std::move(qg), std::move(proj)};
}

// --------------------------------------------------------------- builders

FiniteGroup cyclic_group(Prime prime, unsigned exponent, std::size_t max_order) {
    const std::uint64_t m = saturating_pow(prime.value(), exponent);
    check_budget(m, max_order, "cyclic_group");
    std::vector<element> table(m * m);
    for (std::uint64_t a = 0; a < m; ++a)
        for (std::uint64_t b = 0; b < m; ++b) table[a * m + b] = static_cast<element>((a + b) % m);
    std::vector<element> gens;
    std::vector<std::string> names;
    if (m > 1) {
        gens.push_back(1);
        names.push_back("t");
    }
    return FiniteGroup(prime, std::move(table), std::move(gens), std::move(names));
}

FiniteGroup elementary_abelian(Prime prime, unsigned rank, std::size_t max_order) {
    const std::uint64_t p = prime.value();
    const std::uint64_t m = saturating_pow(p, rank);
    check_budget(m, max_order, "elementary_abelian");
    std::vector<element> table(m * m);
    for (std::uint64_t a = 0; a < m; ++a)
        for (std::uint64_t b = 0; b < m; ++b) {
            std::uint64_t x = a, y = b, out = 0, place = 1;
            for (unsigned j = 0; j < rank; ++j) {
                out += ((x % p + y % p) % p) * place;
                x /= p;
                y /= p;
                place *= p;
            }
            table[a * m + b] = static_cast<element>(out);
        }
    std::vector<element> gens;
    std::vector<std::string> names;
    for (unsigned j = 0; j < rank; ++j) {
        gens.push_back(static_cast<element>(saturating_pow(p, j)));
        names.push_back("e" + std::to_string(j + 1));
    }
    return FiniteGroup(prime, std::move(table), std::move(gens), std::move(names));
}

element encode_lamplighter(const SemidirectElement& e, unsigned i, unsigned copies) {
    const std::uint64_t p = e.v.prime().value();
    const std::uint64_t cyc = saturating_pow(p, i);
    std::uint64_t lamps = 0, place = 1;
    for (unsigned c = 0; c < copies; ++c) {
        const TruncSeries& s = c == 0 ? e.v : e.w;
        for (unsigned j = 0; j < i; ++j) {
            lamps += s[j] * place;
            place *= p;
        }
    }
    return static_cast<element>(e.n % cyc + cyc * lamps);
}

SemidirectElement decode_lamplighter(element x, Prime prime, unsigned i, unsigned copies) {
    const std::uint64_t p = prime.value();
    const std::uint64_t cyc = saturating_pow(p, i);
    std::uint64_t n = x % cyc, lamps = x / cyc;
    std::vector<residue> v(i, 0), w(i, 0);
    for (unsigned c = 0; c < copies; ++c)
        for (unsigned j = 0; j < i; ++j) {
            (c == 0 ? v : w)[j] = static_cast<residue>(lamps % p);
            lamps /= p;
        }
    return {TruncSeries::from_reduced(prime, std::move(v)), TruncSeries::from_reduced(prime, std::move(w)), n};
}

FiniteGroup build_lamplighter(Prime prime, unsigned i, unsigned copies, std::size_t max_order) {
    if (i < 1) throw usage_error("build_lamplighter: i must be >= 1");
    if (copies != 1 && copies != 2) throw usage_error("build_lamplighter: copies must be 1 or 2");
    const std::uint64_t p = prime.value();
    const std::uint64_t cyc = saturating_pow(p, i);
    const std::uint64_t single = saturating_pow(p, i);  // |R_i|
    const std::uint64_t lamps = saturating_pow(single, copies);
    check_budget(std::max(lamps, cyc), max_order, "build_lamplighter");
    const std::uint64_t order = lamps * cyc;
    check_budget(order, max_order, "build_lamplighter");

    // act[n][u]: index of u (1 - x)^n in R_i, for a single copy.
    std::vector<std::vector<std::uint64_t>> act(cyc, std::vector<std::uint64_t>(single));
    TruncSeries factor = TruncSeries::one(prime, i);
    const TruncSeries one_minus_x = sub(TruncSeries::one(prime, i), TruncSeries::monomial(prime, i, 1));
    std::vector<residue> digits(i);
    for (std::uint64_t n = 0; n < cyc; ++n) {
        for (std::uint64_t u = 0; u < single; ++u) {
            std::uint64_t code = u;
            for (unsigned j = 0; j < i; ++j) {
                digits[j] = static_cast<residue>(code % p);
                code /= p;
            }
            TruncSeries image = mul(TruncSeries::from_reduced(prime, std::vector<residue>(digits)), factor);
            std::uint64_t out = 0, place = 1;
            for (unsigned j = 0; j < i; ++j) {
                out += image[j] * place;
                place *= p;
            }
            act[n][u] = out;
        }
        factor = mul(factor, one_minus_x);
    }
    if (!(factor == TruncSeries::one(prime, i)))
        throw std::logic_error("build_lamplighter: (1-x)^{p^i} is not 1 mod x^i");

    auto add_single = [&](std::uint64_t a, std::uint64_t b) {
        std::uint64_t out = 0, place = 1;
        for (unsigned j = 0; j < i; ++j) {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        return out;
    };

    std::vector<element> table(order * order);
    for (std::uint64_t x = 0; x < order; ++x) {
        const std::uint64_t n = x % cyc, u = x / cyc;
        for (std::uint64_t y = 0; y < order; ++y) {
            const std::uint64_t n2 = y % cyc, u2 = y / cyc;
            std::uint64_t lamp = 0, place = 1, a = u, b = u2;
            for (unsigned c = 0; c < copies; ++c) {
                lamp += add_single(act[n2][a % single], b % single) * place;
                a /= single;
                b /= single;
                place *= single;
            }
            table[x * order + y] = static_cast<element>((n + n2) % cyc + cyc * lamp);
        }
    }

    std::vector<element> gens{static_cast<element>(1 % cyc)};
    std::vector<std::string> names{"a"};
    gens.push_back(static_cast<element>(cyc));  // lamp 1 in copy 0
    names.push_back("b");
    if (copies == 2) {
        gens.push_back(static_cast<element>(cyc * single));
        names.push_back("c");
    }
    return FiniteGroup(prime, std::move(table), std::move(gens), std::move(names));
}

// ------------------------------------------------------------------- JSON

std::string group_to_json(const FiniteGroup& g) {
    nlohmann::ordered_json j;
    j["order"] = g.order();
    j["prime"] = g.prime().value();
    j["identity"] = g.identity();
    j["generators"] = g.generator_names();
    j["generator_elements"] = g.generators();
    j["table"] = g.table();
    return j.dump();
}

FiniteGroup group_from_json(const std::string& text, std::size_t max_order) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        const auto order = j.at("order").get<std::size_t>();
        check_budget(order, max_order, "group_from_json");
        Prime prime(j.at("prime").get<std::uint32_t>());
        auto table = j.at("table").get<std::vector<element>>();
        if (table.size() != order * order) throw usage_error("group_from_json: table size does not match order");
        auto names = j.value("generators", std::vector<std::string>{});
        auto gens = j.value("generator_elements", std::vector<element>{});
        if (gens.empty() && names.empty()) {
            // no generators supplied: use every element
            for (std::size_t x = 0; x < order; ++x) {
                gens.push_back(static_cast<element>(x));
                names.push_back("g" + std::to_string(x));
            }
        }
        FiniteGroup g(prime, std::move(table), std::move(gens), std::move(names));
        if (j.contains("identity") && j["identity"].get<element>() != g.identity())
            throw usage_error("group_from_json: declared identity disagrees with the table");
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw usage_error(std::string("group_from_json: ") + e.what());
    }
}

} // namespace procyclic
