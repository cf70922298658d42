#ifndef PROCYCLIC_GROUP_HPP
#define PROCYCLIC_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "procyclic/fpx.hpp"
#include "procyclic/prime.hpp"

namespace procyclic {

using element = std::uint32_t;

/// Size limits for group tables and bar complexes. Defaults can be overridden
/// through PROCYCLIC_MAX_GROUP and PROCYCLIC_MAX_BAR.
struct Budget {
    std::size_t max_group = 4096;
    std::size_t max_bar = 64;

    static Budget from_env();
};

/// A p-group given by its multiplication table.
///
/// Construction validates closure, the identity, inverses and p-power order.
/// Associativity is checked on all triples up to exhaustive_assoc_limit
/// elements and by Light's test against the generators above that.
class FiniteGroup {
public:
    static constexpr std::size_t exhaustive_assoc_limit = 512;

    /// `table` is row-major, table[a * order + b] = a b. `generators` must generate the group.
    FiniteGroup(Prime prime, std::vector<element> table, std::vector<element> generators,
                std::vector<std::string> generator_names);

    const Prime& prime() const noexcept { return prime_; }
    std::size_t order() const noexcept { return order_; }
    element identity() const noexcept { return identity_; }
    element mul(element a, element b) const noexcept { return table_[static_cast<std::size_t>(a) * order_ + b]; }
    element inv(element a) const noexcept { return inverse_[a]; }
    element pow(element a, std::uint64_t e) const noexcept;
    element commutator(element a, element b) const noexcept { return mul(mul(inv(a), inv(b)), mul(a, b)); }

    const std::vector<element>& table() const noexcept { return table_; }
    const std::vector<element>& generators() const noexcept { return generators_; }
    const std::vector<std::string>& generator_names() const noexcept { return generator_names_; }

    bool is_abelian() const noexcept;
    std::vector<element> center() const;

private:
    Prime prime_;
    std::size_t order_;
    std::vector<element> table_;
    element identity_;
    std::vector<element> inverse_;
    std::vector<element> generators_;
    std::vector<std::string> generator_names_;
};

/// A homomorphism given by its image table.
class GroupHom {
public:
    /// Verifies f(xy) = f(x) f(y) for all pairs.
    GroupHom(const FiniteGroup& source, const FiniteGroup& target, std::vector<element> images);

    element operator()(element x) const noexcept { return images_[x]; }
    const std::vector<element>& images() const noexcept { return images_; }

private:
    std::vector<element> images_;
};

/// Sorted element list of the subgroup generated by `gens` (breadth-first closure).
std::vector<element> subgroup_closure(const FiniteGroup& g, const std::vector<element>& gens);
bool is_subgroup(const FiniteGroup& g, const std::vector<element>& h);
bool is_normal(const FiniteGroup& g, const std::vector<element>& h);

struct QuotientGroup {
    FiniteGroup group;
    GroupHom projection;
};

/// G/H with cosets numbered by their smallest element.
QuotientGroup quotient(const FiniteGroup& g, const std::vector<element>& h);

FiniteGroup cyclic_group(Prime prime, unsigned exponent, std::size_t max_order = 4096);
FiniteGroup elementary_abelian(Prime prime, unsigned rank, std::size_t max_order = 4096);

/// (u, n) with u in R_i^copies (R_i = F_p[x]/(x^i)) and n mod p^i.
struct SemidirectElement {
    TruncSeries v;
    TruncSeries w;  // zero when copies = 1
    std::uint64_t n;
    friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
};

/// Finite quotient (R_i^copies) x| C_{p^i} of the (double) lamplighter group,
/// with (u, n)(u', n') = (u (1-x)^{n'} + u', n + n').
///
/// Element index: n + p^i * (lamp coordinates read as a base-p number,
/// copy 0 coefficients first). Generators a = (0, 1), b, c = lamp 1 in copy 0, 1.
FiniteGroup build_lamplighter(Prime prime, unsigned i, unsigned copies, std::size_t max_order = 4096);

element encode_lamplighter(const SemidirectElement& e, unsigned i, unsigned copies);
SemidirectElement decode_lamplighter(element x, Prime prime, unsigned i, unsigned copies);

/// {"order", "prime", "identity", "generators": [names], "generator_elements", "table": row-major}
std::string group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const std::string& text, std::size_t max_order = 4096);

} // namespace procyclic

#endif
