#pragma once

#include "zdlat/claims.hpp"
#include "zdlat/ideal.hpp"
#include "zdlat/lattice.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace zdlat {

/// Largest census size without an explicit opt-in.
inline constexpr std::size_t kDefaultCensusBound = 7;
/// Hard ceiling for enumeration.
inline constexpr std::size_t kMaxCensusSize = 8;

/// One isomorphism-class representative. Elements are ordered along a linear
/// extension with bottom first and top last; labels are 0, a, b, ..., 1.
struct CensusLattice {
    std::string id; ///< "n<size>-<k>", k counting from 1 within the size class
    Lattice lattice;
};

/// One representative per isomorphism class of lattices with at most
/// `max_size` elements, ordered by size then by generation order. Throws
/// PreconditionError for max_size 0 or above kMaxCensusSize.
std::vector<CensusLattice> enumerate_lattices(std::size_t max_size);

enum class IdealFilter { all, proper, principal };
const char* to_string(IdealFilter f);
std::optional<IdealFilter> parse_ideal_filter(std::string_view text);

struct CensusConfig {
    std::size_t max_size = kDefaultCensusBound;
    bool distributive_only = false;
    std::vector<ClaimId> claims{std::begin(kAllClaims), std::end(kAllClaims)};
    IdealFilter ideal_filter = IdealFilter::proper;
    std::size_t worker_count = 1;
    /// Must be set to sweep size 8.
    bool allow_size_8 = false;

    /// Throws PreconditionError on an invalid configuration.
    void validate() const;
};

struct ClaimTally {
    std::size_t holds = 0;
    std::size_t fails = 0;
    std::size_t vacuous = 0;
    std::size_t total() const { return holds + fails + vacuous; }
};

struct Counterexample {
    std::string lattice_id;
    Lattice lattice;
    IdealSet ideal;
    ClaimReport report;
};

struct CensusSummary {
    std::size_t max_size = 0;
    /// lattice_counts[s - 1]: isomorphism classes with s elements.
    std::vector<std::size_t> lattice_counts;
    /// Same, after the distributivity filter.
    std::vector<std::size_t> swept_counts;
    std::size_t instance_count = 0;
    /// In the configured claim order.
    std::vector<std::pair<ClaimId, ClaimTally>> per_claim;
    /// Girth of Gamma_I over all swept instances whose graph has a cycle.
    std::vector<std::pair<std::size_t, std::size_t>> girth_histogram;
    /// Instances with a cyclic Gamma_I in which every vertex is a core vertex
    /// or has degree one, and the number of cyclic instances.
    std::size_t cyclic_instances = 0;
    std::size_t cyclic_core_or_pendant = 0;
    std::vector<Counterexample> counterexamples;
};

/// Sweeps every selected claim over every (lattice, ideal) instance. Claims
/// that assume distributivity are recorded VACUOUS on other lattices. The
/// result does not depend on worker_count.
CensusSummary run_census(const CensusConfig& config);

/// Fixed-column text rendering.
std::string format_summary(const CensusSummary& summary);
nlohmann::json summary_to_json(const CensusSummary& summary);

/// First FAILS instance in enumeration order over proper ideals.
std::optional<Counterexample> search_counterexample(ClaimId claim, std::size_t max_size, bool allow_size_8 = false);
/// Same, resolving the claim by name; throws PreconditionError on unknown ids.
std::optional<Counterexample> search_counterexample(std::string_view claim, std::size_t max_size,
                                                    bool allow_size_8 = false);

/// Lattice file (with `#` header lines describing the instance) that replays
/// the counterexample through `zdlat check`.
std::string counterexample_file(const Counterexample& cex);

/// Writes up to `per_claim_limit` files per claim into `dir`; returns the
/// paths written.
std::vector<std::filesystem::path> write_counterexamples(const std::vector<Counterexample>& cexs,
                                                         const std::filesystem::path& dir,
                                                         std::size_t per_claim_limit);

} // namespace zdlat
