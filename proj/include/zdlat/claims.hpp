#pragma once

#include "zdlat/ideal.hpp"
#include "zdlat/lattice.hpp"
#include "zdlat/zdgraph.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zdlat {

/// The statements about zero-divisor graphs and radicals that can be checked
/// on a finite (lattice, ideal) instance.
enum class ClaimId {
    P1_3,            ///< Gamma_I connected, diameter <= 3, girth <= 7 when cyclic
    L1_4,            ///< path a-x-y: I u {x} is an ideal or the path lies on a cycle of length <= 4
    T1_5a,           ///< every core edge lies on a 3- or 4-cycle
    T1_5b,           ///< with |V| >= 3, every vertex is in the core or has degree one
    CASE4,           ///< no path a-x-y-b with deg(a)=1, x,y outside the core, b in the core
    P1_6,            ///< intersection of [a]^u over a in I equal to {1} implies no cut vertex
    P2_1_contained,  ///< sqrt(I) = I, primes contained in I
    P2_1_containing, ///< sqrt(I) = I, primes containing I
    T2_3,            ///< I is a finite intersection of primes
    GAMMA0,          ///< Gamma_{0}(L) isomorphic to Gamma(L)
};

inline constexpr ClaimId kAllClaims[] = {ClaimId::P1_3,  ClaimId::L1_4,           ClaimId::T1_5a,
                                         ClaimId::T1_5b, ClaimId::CASE4,          ClaimId::P1_6,
                                         ClaimId::P2_1_contained, ClaimId::P2_1_containing, ClaimId::T2_3,
                                         ClaimId::GAMMA0};

const char* to_string(ClaimId id);
std::optional<ClaimId> parse_claim_id(std::string_view text);

/// Claims whose statement assumes a distributive lattice; their checkers
/// reject other lattices with PreconditionError.
bool requires_distributive(ClaimId id);

enum class ClaimStatus { holds, fails, vacuous };
const char* to_string(ClaimStatus s);

/// Counterexample data. `elements` are lattice elements whose meaning depends
/// on the claim: a vertex pair, a path or cycle in order, a single vertex, or
/// a set.
struct Witness {
    std::vector<Element> elements;
    std::string description;
};

struct ClaimReport {
    ClaimId claim;
    ClaimStatus status = ClaimStatus::vacuous;
    std::optional<Witness> witness;
    /// Measured quantities, in insertion order (diameter, girth, ...).
    std::vector<std::pair<std::string, std::string>> details;
    /// Readings and conventions applied while checking.
    std::vector<std::string> notes;
};

ClaimReport check_P1_3(const Lattice& l, const IdealSet& ideal);
ClaimReport check_L1_4(const Lattice& l, const IdealSet& ideal);
ClaimReport check_T1_5a(const Lattice& l, const IdealSet& ideal);
ClaimReport check_T1_5b(const Lattice& l, const IdealSet& ideal);
/// Both halves of the core-structure theorem.
std::vector<ClaimReport> check_T1_5(const Lattice& l, const IdealSet& ideal);
ClaimReport check_CASE4(const Lattice& l, const IdealSet& ideal);
ClaimReport check_P1_6(const Lattice& l, const IdealSet& ideal);
ClaimReport check_P2_1(const Lattice& l, const IdealSet& ideal, RadicalVariant variant);
ClaimReport check_T2_3(const Lattice& l, const IdealSet& ideal);
/// Independent of the ideal. VACUOUS when L has no non-zero zero divisors
/// (Gamma_{0}(L) empty), FAILS otherwise with the corrected relation, Gamma_{0}
/// isomorphic to Gamma minus the bottom, recorded in the details.
ClaimReport check_GAMMA0(const Lattice& l);

ClaimReport check_claim(ClaimId id, const Lattice& l, const IdealSet& ideal);

/// Gamma_{(0]}(L) against Gamma(L) with the bottom vertex removed.
std::optional<std::vector<std::size_t>> gamma0_correction(const Lattice& l);

/// Replays a FAILS report's witness against the instance alone; true when the
/// witness still demonstrates the violation.
bool witness_reproduces(const Lattice& l, const IdealSet& ideal, const ClaimReport& report);

/// `claim STATUS key=value ... witness=[...] "description"`.
std::string format_report_line(const Lattice& l, const ClaimReport& report);
nlohmann::json report_to_json(const Lattice& l, const ClaimReport& report);

} // namespace zdlat
