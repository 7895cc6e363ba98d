#pragma once

#include "zdlat/lattice.hpp"

#include <optional>
#include <vector>

namespace zdlat {

/// A subset of a lattice together with the properties verified for it at
/// construction. Obtain one through make_ideal_set (or the enumerators) so the
/// flags are always computed, never asserted.
class IdealSet {
public:
    struct Status {
        bool is_ideal = false;
        bool is_proper = false;
        bool is_prime = false;
        bool is_filter = false;
        friend bool operator==(const Status&, const Status&) = default;
    };

    ElementSet members() const { return members_; }
    std::size_t lattice_size() const { return lattice_size_; }
    const Status& status() const { return status_; }
    bool is_ideal() const { return status_.is_ideal; }
    bool is_proper() const { return status_.is_proper; }
    bool is_prime() const { return status_.is_prime; }
    bool is_filter() const { return status_.is_filter; }

    friend IdealSet make_ideal_set(const Lattice& l, ElementSet members);
    friend bool operator==(const IdealSet&, const IdealSet&) = default;

private:
    ElementSet members_;
    std::size_t lattice_size_ = 0;
    Status status_;
};

/// Classifies `members` (which must lie inside the lattice).
IdealSet make_ideal_set(const Lattice& l, ElementSet members);

/// Non-empty, down-closed and join-closed.
bool is_ideal(const Lattice& l, ElementSet s);
/// Non-empty, up-closed and meet-closed.
bool is_filter(const Lattice& l, ElementSet s);
/// Proper ideal with meet(a,b) in S implying a in S or b in S.
bool is_prime_ideal(const Lattice& l, ElementSet s);
/// Second route to primality: S is a proper non-empty subset whose
/// complement is a filter and which is itself an ideal.
bool is_prime_by_complement(const Lattice& l, ElementSet s);

/// All ideals, in canonical order (cardinality, then lexicographic).
std::vector<IdealSet> enumerate_ideals(const Lattice& l);
std::vector<IdealSet> enumerate_prime_ideals(const Lattice& l);

/// (I:x) = {z : z ^ x in I}.
ElementSet quotient_ideal(const Lattice& l, const IdealSet& ideal, Element x);

/// Which primes "belong" to I: those contained in it or those containing it.
enum class RadicalVariant { contained, containing };

const char* to_string(RadicalVariant v);
std::optional<RadicalVariant> parse_radical_variant(std::string_view text);

struct RadicalResult {
    /// Intersection of the qualifying primes. Absent when no prime qualifies;
    /// the empty intersection is never silently read as the whole lattice.
    std::optional<ElementSet> value;
    std::size_t family_size = 0;
    /// The qualifying primes in canonical order.
    std::vector<IdealSet> family;
};

RadicalResult radical(const Lattice& l, const IdealSet& ideal, RadicalVariant variant);

/// Smallest family of qualifying primes whose intersection is exactly I, or
/// nothing if no subfamily achieves it. Ties go to the canonically first
/// family.
std::optional<std::vector<IdealSet>> is_finite_intersection_of_primes(const Lattice& l, const IdealSet& ideal,
                                                                      RadicalVariant variant);

/// Resolves comma-separated labels into an ideal; throws PreconditionError on
/// unknown labels or when the set is not an ideal.
IdealSet ideal_from_labels(const Lattice& l, std::string_view comma_separated);

} // namespace zdlat
