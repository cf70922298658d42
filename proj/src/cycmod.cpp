#include "procyclic/cycmod.hpp"

#include <string>

#include "procyclic/errors.hpp"
#include "procyclic/exponent_action.hpp"
#include "procyclic/fpx.hpp"

namespace procyclic {

namespace {

unsigned minimal_order_exponent(const FpMatrix& t) {
    // p-elements of GL_d(F_p) are unipotent, so p^k >= d always suffices.
    const std::uint64_t p = t.prime().value();
    FpMatrix power = t;
    for (unsigned k = 0;; ++k) {
        if (is_identity(power)) return k;
        if (saturating_pow(p, k) >= t.rows()) break;
        power = matrix_power(power, p);
    }
    throw usage_error("FpCModule: generator action does not have p-power order");
}

QuotientDescription describe_quotient(const Prime& P, std::size_t ambient, const EchelonBasis& eb) {
    FpSubspace relations = eb.subspace();
    std::vector<bool> is_pivot(ambient, false);
    for (auto c : relations.pivots()) is_pivot[c] = true;
    std::vector<std::size_t> free_index(ambient, 0);
    std::size_t q = 0;
    for (std::size_t j = 0; j < ambient; ++j)
        if (!is_pivot[j]) free_index[j] = q++;

    // e_j for a pivot j equals -(sum of the free entries of its basis row) modulo relations.
    FpMatrix projection(P, q, ambient);
    for (std::size_t j = 0; j < ambient; ++j)
        if (!is_pivot[j]) projection.set(free_index[j], j, 1);
    for (std::size_t r = 0; r < relations.dim(); ++r) {
        std::size_t pj = relations.pivots()[r];
        for (std::size_t j = 0; j < ambient; ++j)
            if (!is_pivot[j] && relations.basis()(r, j) != 0)
                projection.set(free_index[j], pj, P.neg(relations.basis()(r, j)));
    }
    return {q, std::move(projection), std::move(relations)};
}

void require_same_prime(const FpCModule& a, const FpCModule& b) {
    if (!(a.prime() == b.prime())) throw usage_error("modules over different primes");
}

// Relations L(e_a) (x) R(e_b) - e_a (x) e_b over basis pairs (a, b); the sign
// pattern of the two actions differs between the two quotients.
template <class Build>
QuotientDescription relation_quotient(const FpCModule& m, const FpCModule& m2, Build build) {
    require_same_prime(m, m2);
    const Prime& P = m.prime();
    const std::size_t d = m.dim(), d2 = m2.dim();
    EchelonBasis eb(P, d * d2);
    std::vector<residue> v(d * d2);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d2; ++b) {
            std::fill(v.begin(), v.end(), 0);
            build(a, b, v);
            eb.insert(v);
        }
    return describe_quotient(P, d * d2, eb);
}

} // namespace

FpCModule::FpCModule(FpMatrix action) : action_(std::move(action)), order_exponent_(0) {
    if (action_.rows() != action_.cols()) throw usage_error("FpCModule: action matrix must be square");
    if (rank(action_) != action_.rows()) throw usage_error("FpCModule: action matrix must be invertible");
    order_exponent_ = minimal_order_exponent(action_);
}

FpCModule regular_module(Prime prime, std::size_t i) {
    if (i == 0) throw usage_error("regular_module: i must be >= 1");
    // column j holds (1 - x) x^j = x^j - x^{j+1} mod x^i
    FpMatrix t(prime, i, i);
    for (std::size_t j = 0; j < i; ++j) {
        t.set(j, j, 1);
        if (j + 1 < i) t.set(j + 1, j, prime.neg(1));
    }
    return FpCModule(std::move(t));
}

FpCModule trivial_module(Prime prime, std::size_t dim) { return FpCModule(FpMatrix::identity(prime, dim)); }

ModuleAntipode::ModuleAntipode(const FpCModule& module, FpMatrix s) : s_(std::move(s)) {
    const std::size_t d = module.dim();
    if (s_.rows() != d || s_.cols() != d || !(s_.prime() == module.prime()))
        throw usage_error("ModuleAntipode: matrix shape or prime does not match the module");
    if (rank(s_) != d) throw usage_error("ModuleAntipode: matrix is not invertible");
    // S T = T^{-1} S  <=>  T S T = S
    const FpMatrix& t = module.action();
    if (!(multiply(multiply(t, s_), t) == s_)) throw usage_error("ModuleAntipode: twist identity S T = T^-1 S fails");
}

ModuleAntipode ring_antipode(const FpCModule& regular, std::size_t i) {
    const Prime& P = regular.prime();
    FpMatrix s(P, i, i);
    for (std::size_t j = 0; j < i; ++j) {
        TruncSeries image = sigma(TruncSeries::monomial(P, i, j));
        for (std::size_t r = 0; r < i; ++r) s.set(r, j, image[r]);
    }
    return ModuleAntipode(regular, std::move(s));
}

QuotientDescription diagonal_coinvariants(const FpCModule& m, const FpCModule& m2) {
    const Prime& P = m.prime();
    const FpMatrix& t = m.action();
    const FpMatrix& t2 = m2.action();
    const std::size_t d2 = m2.dim();
    return relation_quotient(m, m2, [&](std::size_t a, std::size_t b, std::vector<residue>& v) {
        for (std::size_t r = 0; r < m.dim(); ++r) {
            if (t(r, a) == 0) continue;
            for (std::size_t s = 0; s < d2; ++s)
                v[r * d2 + s] = P.add(v[r * d2 + s], P.mul(t(r, a), t2(s, b)));
        }
        v[a * d2 + b] = P.sub(v[a * d2 + b], 1);
    });
}

QuotientDescription tensor_over_groupring(const FpCModule& m, const FpCModule& m2) {
    const Prime& P = m.prime();
    const FpMatrix& t = m.action();
    const FpMatrix& t2 = m2.action();
    const std::size_t d2 = m2.dim();
    return relation_quotient(m, m2, [&](std::size_t a, std::size_t b, std::vector<residue>& v) {
        for (std::size_t r = 0; r < m.dim(); ++r) v[r * d2 + b] = P.add(v[r * d2 + b], t(r, a));
        for (std::size_t s = 0; s < d2; ++s) v[a * d2 + s] = P.sub(v[a * d2 + s], t2(s, b));
    });
}

AntipodeIsoReport antipode_iso_check(const FpCModule& m, const ModuleAntipode& s) {
    if (s.matrix().rows() != m.dim()) throw usage_error("antipode_iso_check: antipode belongs to another module");
    QuotientDescription coinv = diagonal_coinvariants(m, m);
    QuotientDescription tensor = tensor_over_groupring(m, m);

    // Phi = id (x) S is invertible, so it descends to a bijection iff
    // Phi(coinvariant relations) equals the tensor relations.
    const Prime& P = m.prime();
    const std::size_t n = m.dim() * m.dim();
    FpMatrix phi = kronecker(FpMatrix::identity(P, m.dim()), s.matrix());
    EchelonBasis image(P, n);
    for (std::size_t r = 0; r < coinv.relations.dim(); ++r) image.insert(apply(phi, coinv.relations.basis().row(r)));

    bool inside = true;
    for (std::size_t r = 0; r < tensor.relations.dim() && inside; ++r)
        inside = image.contains(tensor.relations.basis().row(r));
    bool bijective = inside && image.rank() == tensor.relations.dim();
    return {bijective, coinv.dim, tensor.dim};
}

ZActionHomology z_action_homology(const FpCModule& m) {
    FpMatrix one_minus_t = subtract(FpMatrix::identity(m.prime(), m.dim()), m.action());
    std::size_t r = rank(one_minus_t);
    return {m.dim() - r, m.dim() - r};
}

} // namespace procyclic
