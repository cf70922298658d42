#ifndef PROCYCLIC_REPORT_HPP
#define PROCYCLIC_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "procyclic/group.hpp"
#include "procyclic/prime.hpp"

namespace procyclic {

inline constexpr const char* tool_version = "0.3.0";
inline constexpr int schema_version = 1;
inline constexpr std::uint64_t default_seed = 20240917;

enum class SectionStatus { pass, fail, skip };

const char* to_string(SectionStatus s) noexcept;

struct ReportSection {
    std::string name;
    SectionStatus status = SectionStatus::pass;
    std::vector<std::string> columns;
    std::vector<std::vector<nlohmann::ordered_json>> rows;
    std::vector<std::string> notes;
    double seconds = 0.0;
    bool resource_exhausted = false;  // stopped early on a size budget

    void fail_unless(bool ok, const std::string& why);
};

struct ReportDocument {
    nlohmann::ordered_json config;
    std::vector<ReportSection> sections;

    bool passed() const noexcept;
};

/// Deterministic JSON: timings are emitted only when requested.
std::string to_json(const ReportDocument& doc, bool include_timings = false);
std::string to_text(const ReportDocument& doc, bool include_timings = false);

// One section per verification family. Each returns pass/fail with its table.

ReportSection frobenius_section(const std::vector<std::uint32_t>& primes, unsigned i_max, std::size_t prec);
ReportSection tau_section(const std::vector<std::uint32_t>& primes, std::size_t prec, unsigned trials,
                          std::uint64_t seed);
ReportSection antipode_section(const std::vector<std::uint32_t>& primes, unsigned i_max);
ReportSection collapse_section(const std::vector<std::uint32_t>& primes, unsigned i_max);
ReportSection census_section(std::uint32_t p, const std::vector<std::int64_t>& alpha,
                             const std::vector<std::int64_t>& beta, unsigned k, unsigned i_max);
/// Centres are series in text or JSON form; the default set is 0, 1, 1 + x.
ReportSection density_gap_section(std::uint32_t p, unsigned s, unsigned i_max,
                                  const std::vector<std::string>& centres = {});
ReportSection mu_kappa_section(const std::vector<std::uint32_t>& primes, std::size_t prec, unsigned trials,
                               std::uint64_t seed);
ReportSection homology_oracle_section(const Budget& budget);
ReportSection five_term_section(const Budget& budget);
ReportSection tower_section(std::uint32_t p, unsigned i_max, const Budget& budget);

/// Every acceptance section, in fixed order.
ReportDocument run_all(std::uint64_t seed, const Budget& budget);

/// SplitMix64 step; the raw stream is reproducible across platforms,
/// unlike the standard distributions.
class SeededStream {
public:
    explicit SeededStream(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() noexcept;
    std::uint64_t below(std::uint64_t bound) noexcept { return bound ? next() % bound : 0; }

private:
    std::uint64_t state_;
};

} // namespace procyclic

#endif
