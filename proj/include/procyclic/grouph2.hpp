#ifndef PROCYCLIC_GROUPH2_HPP
#define PROCYCLIC_GROUPH2_HPP

#include <cstddef>
#include <vector>

#include "procyclic/errors.hpp"
#include "procyclic/group.hpp"

namespace procyclic {

/// dim_{F_p} H_2(G; F_p) from the normalized bar complex,
/// dim C_2 - rank d_2 - rank d_3 with C_n spanned by [g_1|...|g_n], g_j != 1.
/// Throws resource_error when |G| exceeds max_bar.
std::size_t bar_h2(const FiniteGroup& g, std::size_t max_bar = 64);

/// Sorted elements of [G,G] G^p.
std::vector<element> frattini_subgroup(const FiniteGroup& g);

/// dim_{F_p} of (H n [G,G] G^p) / ([H,G] H^p); H must be normal (usage_error otherwise).
std::size_t hopf_quotient(const FiniteGroup& g, const std::vector<element>& h);

struct FiveTermReport {
    std::size_t cokernel_dim;  // coker(H_2(G) -> H_2(G/H))
    std::size_t hopf_dim;
    std::size_t h2_group;
    std::size_t h2_quotient;
    bool equal;
};

/// Computes coker(H_2(G) -> H_2(G/H)) through the chain map induced on
/// normalized bar complexes and compares it with hopf_quotient(G, H).
FiveTermReport five_term_check(const FiniteGroup& g, const std::vector<element>& h, std::size_t max_bar = 64);

struct TowerRow {
    unsigned i;
    std::size_t order;
    std::size_t h2_dim;
    std::size_t coinv_dim;
    std::size_t tensor_gr_dim;
    std::size_t elementary_h2;  // bar_h2((Z/p)^i)
    bool collapse_holds;        // coinv_dim = tensor_gr_dim = i
    bool inequality_holds;      // h2_dim >= coinv_dim + 2 elementary_h2
    bool equality_observed;     // h2_dim == coinv_dim + 2 elementary_h2 (recorded, not asserted)
};

/// Thrown when a tower level exceeds a budget; carries the rows computed so far.
class tower_resource_error : public resource_error {
public:
    tower_resource_error(const std::string& what, std::vector<TowerRow> rows)
        : resource_error(what), rows_(std::move(rows)) {}
    const std::vector<TowerRow>& partial_rows() const noexcept { return rows_; }

private:
    std::vector<TowerRow> rows_;
};

/// Rows i = 1..i_max for the double lamplighter quotients DL^(i) = build_lamplighter(p, i, 2).
std::vector<TowerRow> tower_report(Prime prime, unsigned i_max, const Budget& budget = {});

} // namespace procyclic

#endif
