#include "procyclic/grouph2.hpp"

#include <algorithm>
#include <string>

#include "procyclic/cycmod.hpp"
#include "procyclic/linfp.hpp"

namespace procyclic {

namespace {

// Positions of the non-identity elements, which index the normalized chains.
struct ChainIndex {
    std::vector<std::int64_t> pos;  // -1 for the identity
    std::size_t dim1;

    explicit ChainIndex(const FiniteGroup& g) : pos(g.order(), -1), dim1(g.order() - 1) {
        std::int64_t next = 0;
        for (std::size_t x = 0; x < g.order(); ++x)
            if (x != g.identity()) pos[x] = next++;
    }
    std::size_t dim2() const { return dim1 * dim1; }
    std::int64_t pair(element a, element b) const {
        if (pos[a] < 0 || pos[b] < 0) return -1;
        return pos[a] * static_cast<std::int64_t>(dim1) + pos[b];
    }
};

void accumulate(SparseVector& v, std::int64_t index, residue value, const Prime& P) {
    if (index < 0) return;
    const auto idx = static_cast<std::uint32_t>(index);
    for (auto it = v.begin(); it != v.end(); ++it)
        if (it->first == idx) {
            it->second = P.add(it->second, value);
            if (it->second == 0) v.erase(it);
            return;
        }
    v.emplace_back(idx, value);
}

void check_bar_budget(const FiniteGroup& g, std::size_t max_bar) {
    if (g.order() > max_bar)
        throw resource_error("bar_h2: order " + std::to_string(g.order()) + " exceeds the bar budget " +
                             std::to_string(max_bar));
}

// d_2 [a|b] = [b] - [ab] + [a]
SparseFpMatrix boundary2(const FiniteGroup& g, const ChainIndex& ix) {
    const Prime& P = g.prime();
    SparseFpMatrix d2(P, ix.dim1, ix.dim2());
    for (element a = 0; a < g.order(); ++a)
        for (element b = 0; b < g.order(); ++b) {
            std::int64_t col = ix.pair(a, b);
            if (col < 0) continue;
            d2.add(static_cast<std::size_t>(ix.pos[b]), static_cast<std::size_t>(col), 1);
            if (ix.pos[g.mul(a, b)] >= 0)
                d2.add(static_cast<std::size_t>(ix.pos[g.mul(a, b)]), static_cast<std::size_t>(col), P.neg(1));
            d2.add(static_cast<std::size_t>(ix.pos[a]), static_cast<std::size_t>(col), 1);
        }
    return d2;
}

// Feeds every column d_3 [a|b|c] = [b|c] - [ab|c] + [a|bc] - [a|b] into `basis`,
// stopping early once the basis is full.
void insert_boundary3(const FiniteGroup& g, const ChainIndex& ix, EchelonBasis& basis, std::size_t cap) {
    const Prime& P = g.prime();
    const residue minus_one = P.neg(1);
    SparseVector col;
    for (element a = 0; a < g.order(); ++a) {
        if (ix.pos[a] < 0) continue;
        for (element b = 0; b < g.order(); ++b) {
            if (ix.pos[b] < 0) continue;
            const element ab = g.mul(a, b);
            for (element c = 0; c < g.order(); ++c) {
                if (ix.pos[c] < 0) continue;
                if (basis.rank() >= cap) return;
                col.clear();
                accumulate(col, ix.pair(b, c), 1, P);
                accumulate(col, ix.pair(ab, c), minus_one, P);
                accumulate(col, ix.pair(a, g.mul(b, c)), 1, P);
                accumulate(col, ix.pair(a, b), minus_one, P);
                if (!col.empty()) basis.insert_sparse(col);
            }
        }
    }
}

std::vector<element> generated_by(const FiniteGroup& g, std::vector<element> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return subgroup_closure(g, gens);
}

unsigned log_p(std::size_t n, std::uint32_t p) {
    unsigned k = 0;
    while (n > 1) {
        n /= p;
        ++k;
    }
    return k;
}

} // namespace

std::size_t bar_h2(const FiniteGroup& g, std::size_t max_bar) {
    check_bar_budget(g, max_bar);
    if (g.order() == 1) return 0;
    ChainIndex ix(g);
    const std::size_t rank2 = rank_sparse(boundary2(g, ix));
    const std::size_t cycles = ix.dim2() - rank2;
    EchelonBasis b2(g.prime(), ix.dim2());
    insert_boundary3(g, ix, b2, cycles);
    return cycles - b2.rank();
}

std::vector<element> frattini_subgroup(const FiniteGroup& g) {
    std::vector<element> gens;
    for (element a = 0; a < g.order(); ++a) {
        gens.push_back(g.pow(a, g.prime().value()));
        for (element b = 0; b < g.order(); ++b) gens.push_back(g.commutator(a, b));
    }
    return generated_by(g, std::move(gens));
}

std::size_t hopf_quotient(const FiniteGroup& g, const std::vector<element>& h) {
    if (!is_normal(g, h)) throw usage_error("hopf_quotient: H is not a normal subgroup");
    std::vector<element> sorted_h(h);
    std::sort(sorted_h.begin(), sorted_h.end());

    std::vector<element> frattini = frattini_subgroup(g);
    std::vector<element> numerator;
    std::set_intersection(sorted_h.begin(), sorted_h.end(), frattini.begin(), frattini.end(),
                          std::back_inserter(numerator));

    std::vector<element> gens;
    for (element x : sorted_h) {
        gens.push_back(g.pow(x, g.prime().value()));
        for (element y = 0; y < g.order(); ++y) gens.push_back(g.commutator(x, y));
    }
    std::vector<element> denominator = generated_by(g, std::move(gens));
    if (!std::includes(numerator.begin(), numerator.end(), denominator.begin(), denominator.end()))
        throw std::logic_error("hopf_quotient: [H,G]H^p is not contained in H n [G,G]G^p");
    return log_p(numerator.size() / denominator.size(), g.prime().value());
}

FiveTermReport five_term_check(const FiniteGroup& g, const std::vector<element>& h, std::size_t max_bar) {
    check_bar_budget(g, max_bar);
    const Prime& P = g.prime();
    QuotientGroup q = quotient(g, h);
    const FiniteGroup& qg = q.group;

    FiveTermReport report{};
    report.hopf_dim = hopf_quotient(g, h);
    report.h2_group = bar_h2(g, max_bar);

    if (qg.order() > 1) {
        ChainIndex qix(qg);
        const std::size_t q_cycles = qix.dim2() - rank_sparse(boundary2(qg, qix));
        EchelonBasis image(P, qix.dim2());
        insert_boundary3(qg, qix, image, q_cycles);
        report.h2_quotient = q_cycles - image.rank();

        // Push the 2-cycles of G forward: [a|b] -> [f a | f b], zero when either image is 1.
        if (g.order() > 1) {
            ChainIndex gix(g);
            RowEchelonForm e = rref(boundary2(g, gix).to_dense());
            std::vector<bool> is_pivot(gix.dim2(), false);
            for (auto c : e.pivots) is_pivot[c] = true;
            std::vector<std::pair<element, element>> chain_of(gix.dim2());
            for (element a = 0; a < g.order(); ++a)
                for (element b = 0; b < g.order(); ++b)
                    if (gix.pair(a, b) >= 0) chain_of[static_cast<std::size_t>(gix.pair(a, b))] = {a, b};

            SparseVector pushed;
            for (std::size_t f = 0; f < gix.dim2() && image.rank() < q_cycles; ++f) {
                if (is_pivot[f]) continue;
                pushed.clear();
                // kernel vector: e_f - sum_r R[r][f] e_{pivot r}
                auto push = [&](std::size_t col, residue coeff) {
                    auto [a, b] = chain_of[col];
                    accumulate(pushed, qix.pair(q.projection(a), q.projection(b)), coeff, P);
                };
                push(f, 1);
                for (std::size_t r = 0; r < e.rank(); ++r)
                    if (e.reduced(r, f) != 0) push(e.pivots[r], P.neg(e.reduced(r, f)));
                if (!pushed.empty()) image.insert_sparse(pushed);
            }
        }
        report.cokernel_dim = q_cycles - image.rank();
    }
    report.equal = report.cokernel_dim == report.hopf_dim;
    return report;
}

std::vector<TowerRow> tower_report(Prime prime, unsigned i_max, const Budget& budget) {
    std::vector<TowerRow> rows;
    for (unsigned i = 1; i <= i_max; ++i) {
        const std::uint64_t order = saturating_pow(prime.value(), 3ull * i);
        if (order > budget.max_bar || order > budget.max_group)
            throw tower_resource_error("tower_report: DL^(" + std::to_string(i) + ") has order " +
                                           std::to_string(order) + ", beyond the bar budget " +
                                           std::to_string(budget.max_bar),
                                       rows);
        FiniteGroup dl = build_lamplighter(prime, i, 2, budget.max_group);
        TowerRow row{};
        row.i = i;
        row.order = dl.order();
        row.h2_dim = bar_h2(dl, budget.max_bar);
        FpCModule r = regular_module(prime, i);
        row.coinv_dim = diagonal_coinvariants(r, r).dim;
        row.tensor_gr_dim = tensor_over_groupring(r, r).dim;
        row.elementary_h2 = bar_h2(elementary_abelian(prime, i, budget.max_group), budget.max_bar);
        row.collapse_holds = row.coinv_dim == i && row.tensor_gr_dim == i;
        row.inequality_holds = row.h2_dim >= row.coinv_dim + 2 * row.elementary_h2;
        row.equality_observed = row.h2_dim == row.coinv_dim + 2 * row.elementary_h2;
        rows.push_back(row);
    }
    return rows;
}

} // namespace procyclic
