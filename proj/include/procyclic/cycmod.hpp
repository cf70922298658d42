#ifndef PROCYCLIC_CYCMOD_HPP
#define PROCYCLIC_CYCMOD_HPP

#include <cstddef>

#include "procyclic/linfp.hpp"

namespace procyclic {

/// A finite-dimensional F_p-module for a cyclic p-group, given by the matrix T
/// of the generator acting on column vectors.
///
/// The order exponent k is the least k with T^{p^k} = I; construction fails
/// when T is singular or has no p-power order.
class FpCModule {
public:
    explicit FpCModule(FpMatrix action);

    const Prime& prime() const noexcept { return action_.prime(); }
    std::size_t dim() const noexcept { return action_.rows(); }
    const FpMatrix& action() const noexcept { return action_; }
    unsigned order_exponent() const noexcept { return order_exponent_; }

private:
    FpMatrix action_;
    unsigned order_exponent_;
};

/// R_i = F_p[x]/(x^i) in basis 1, x, ..., x^{i-1}, generator acting by multiplication by 1 - x.
FpCModule regular_module(Prime prime, std::size_t i);

/// dim copies of the trivial module.
FpCModule trivial_module(Prime prime, std::size_t dim);

/// An additive automorphism S of M with S T = T^{-1} S.
class ModuleAntipode {
public:
    /// Throws usage_error if S is singular or the twist identity fails.
    ModuleAntipode(const FpCModule& module, FpMatrix s);

    const FpMatrix& matrix() const noexcept { return s_; }

private:
    FpMatrix s_;
};

/// The ring antipode f(x) -> f(1 - (1 - x)^{-1}) restricted to R_i.
ModuleAntipode ring_antipode(const FpCModule& regular, std::size_t i);

/// A quotient of M (x) M' (basis index a * dim' + b for e_a (x) e_b).
///
/// `projection` is dim x (d d'): it sends a tensor coordinate vector to its
/// coordinates in the quotient basis, which consists of the non-pivot
/// tensor basis vectors of the relation span.
struct QuotientDescription {
    std::size_t dim;
    FpMatrix projection;
    FpSubspace relations;
};

/// (M (x) M')_C: quotient by T m (x) T' m' - m (x) m'.
QuotientDescription diagonal_coinvariants(const FpCModule& m, const FpCModule& m2);
/// M (x)_{F_p[C]} M': quotient by T m (x) m' - m (x) T' m'.
QuotientDescription tensor_over_groupring(const FpCModule& m, const FpCModule& m2);

struct AntipodeIsoReport {
    bool bijective;
    std::size_t coinvariants_dim;
    std::size_t tensor_dim;
};

/// Checks that id (x) S carries the coinvariant relations exactly onto the
/// tensor-over-group-ring relations, i.e. descends to a bijection.
AntipodeIsoReport antipode_iso_check(const FpCModule& m, const ModuleAntipode& s);

struct ZActionHomology {
    std::size_t h0;  // dim coker(I - T)
    std::size_t h1;  // dim ker(I - T)
};

ZActionHomology z_action_homology(const FpCModule& m);

} // namespace procyclic

#endif
