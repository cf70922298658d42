#ifndef PROCYCLIC_CENSUS_HPP
#define PROCYCLIC_CENSUS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_set>
#include <vector>

#include "procyclic/fpx.hpp"
#include "procyclic/laurent.hpp"

namespace procyclic {

/// Hashable packing of a coefficient vector into 64-bit words.
struct PackedSeries {
    std::vector<std::uint64_t> words;
    friend bool operator==(const PackedSeries&, const PackedSeries&) = default;
};

struct PackedSeriesHash {
    std::size_t operator()(const PackedSeries& s) const noexcept;
};

PackedSeries pack(const TruncSeries& s);

/// A deduplicated set of series in F_p[x]/(x^{p^level}), kept sorted.
class CensusSet {
public:
    CensusSet(Prime prime, unsigned level);

    const Prime& prime() const noexcept { return prime_; }
    unsigned level() const noexcept { return level_; }
    std::size_t precision() const noexcept { return precision_; }
    std::size_t size() const noexcept { return elements_.size(); }
    const std::vector<TruncSeries>& elements() const noexcept { return elements_; }

    /// Returns false if the element was already present. Precision must be p^level.
    bool insert(TruncSeries s);
    bool contains(const TruncSeries& s) const;

private:
    Prime prime_;
    unsigned level_;
    std::size_t precision_;
    std::vector<TruncSeries> elements_;
    std::unordered_set<PackedSeries, PackedSeriesHash> index_;
};

/// Largest p^level accepted by the enumerations below.
inline constexpr std::uint64_t census_precision_budget = std::uint64_t{1} << 16;

/// A^i: the p^i distinct powers (1 - x)^m mod x^{p^i}, m = 0 .. p^i - 1.
CensusSet enum_A(Prime prime, unsigned level);

struct RatioCensus {
    CensusSet set;
    std::uint64_t tuples;               // (a, b) tuples enumerated: |A^i|^{2n}
    std::uint64_t admissible_tuples;    // tuples whose denominator avoids (x^{p^k})
    std::uint64_t max_solutions;        // largest solution count of a single r * den = num
    std::uint64_t bound_exponent;       // 2 i n + p^k
    bool tuple_bound_holds;             // tuples <= p^{2in}
    bool solution_bound_holds;          // max_solutions <= p^{p^k}
    bool bound_holds;                   // |set| <= p^{2in + p^k}
};

/// All r in F_p[x]/(x^{p^i}) with r * den = num, where num = sum alpha_j a_j,
/// den = sum beta_j b_j, a_j, b_j in A^i and den not in (x^{p^k}).
///
/// With den = x^v u (u a unit) a solution exists iff x^v divides num, and the
/// solutions then form the coset num u^{-1} x^{-v} + (x^{p^i - v}).
RatioCensus census_ratio_set(Prime prime, const std::vector<std::int64_t>& alpha,
                             const std::vector<std::int64_t>& beta, unsigned k, unsigned level);

/// { sum_m r_m v_m : r_m in the set } for the given multipliers (all at the set's precision).
CensusSet census_sum_set(const CensusSet& set, const std::vector<TruncSeries>& multipliers);

using CensusProvider = std::function<CensusSet(unsigned level)>;

struct DensityGap {
    TruncSeries witness;  // g in f + (x^{p^s}), at precision p^level
    unsigned level;
    std::vector<std::string> log;
};

/// Searches levels L = s, s+1, ..., s+i_max for a coset g + (x^{p^L}) inside
/// f + (x^{p^s}) that misses the census at level L. Candidates run through
/// the free coefficients of degrees p^s .. p^L - 1 in lexicographic order.
/// The returned coset is re-verified by a linear membership scan; throws
/// search_exhausted_error with the per-level counts when no gap exists.
DensityGap density_gap(Prime prime, const CensusProvider& census, const TruncSeries& f, unsigned s, unsigned i_max);

/// Linear scan: true iff no census element agrees with g in its first p^level coefficients.
bool ball_misses_census(const CensusSet& census, const TruncSeries& g);

/// l (x) x^{-shift} in F_p[[x]] (x)_R F_p((x)).
struct TensorRep {
    TruncSeries left;
    std::uint64_t shift;
    friend bool operator==(const TensorRep&, const TensorRep&) = default;
};

/// sum_{i>=-n} a_i x^i  ->  (sum_{i>=0} a_{i+n} x^i) (x) x^{-n}, n = max(0, -val).
TensorRep kappa(const LaurentTrunc& l);
/// left * x^{-shift}.
LaurentTrunc mu(const TensorRep& t);
/// Moves factors of x across the tensor sign (a x (x) b = a (x) x b) until the
/// shift is zero or left has a nonzero constant term.
TensorRep normalize(const TensorRep& t);

} // namespace procyclic

#endif
