#pragma once

#include "zdlat/element_set.hpp"
#include "zdlat/error.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zdlat {

/// A lattice as written down: labels plus the Hasse-diagram cover pairs.
struct LatticeSpec {
    std::vector<std::string> element_labels;
    std::vector<std::pair<std::string, std::string>> cover_pairs; ///< (lower, upper)

    friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

/// Parses the lattice file format:
///
///     # comment
///     elements: 0 a b 1
///     covers: 0<a, 0<b,
///             a<1, b<1
///
/// Throws ParseError (with line/column) on syntax errors, duplicate labels and
/// cover pairs naming unknown labels.
LatticeSpec parse_lattice(std::string_view text);

/// Inverse of parse_lattice. Labels must be valid tokens.
std::string serialize(const LatticeSpec& spec);

/// True when `label` can appear in a lattice file.
bool is_valid_label(std::string_view label);

/// Finite bounded lattice over dense indices 0..n-1. Immutable once built; the
/// order relation and both operation tables are precomputed so every query is
/// a lookup.
class Lattice {
public:
    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Element e) const { return labels_.at(e); }
    /// Index of a label; nullopt when absent.
    std::optional<Element> find(std::string_view label) const;
    /// Index of a label; throws PreconditionError when absent.
    Element index_of(std::string_view label) const;

    Element bottom() const { return bottom_; }
    Element top() const { return top_; }

    bool leq(Element a, Element b) const
    {
        check(a);
        check(b);
        return down_[b].contains(a);
    }
    Element meet(Element a, Element b) const
    {
        check(a);
        check(b);
        return meet_[a * size() + b];
    }
    Element join(Element a, Element b) const
    {
        check(a);
        check(b);
        return join_[a * size() + b];
    }

    /// {x : a <= x}.
    ElementSet upper_set(Element a) const
    {
        check(a);
        return up_[a];
    }
    /// (a] = {x : x <= a}.
    ElementSet principal_ideal(Element a) const
    {
        check(a);
        return down_[a];
    }
    ElementSet all() const { return ElementSet::universe(size()); }

    /// Elements covering / covered by `a` in the Hasse diagram.
    ElementSet upper_covers(Element a) const { check(a); return upper_covers_[a]; }
    ElementSet lower_covers(Element a) const { check(a); return lower_covers_[a]; }
    /// Length of the longest chain from bottom to `a`.
    std::size_t height(Element a) const { check(a); return height_[a]; }

    /// Cover relations recomputed from the order, in index order.
    LatticeSpec to_spec() const;

    /// Stable hash of the labelled order relation, used to tie derived objects
    /// to the lattice they were built from.
    std::uint64_t fingerprint() const { return fingerprint_; }

    friend Lattice build_lattice(const LatticeSpec& spec);

private:
    void check(Element e) const
    {
        if (e >= size())
            throw std::out_of_range("element index " + std::to_string(e) + " out of range");
    }

    std::vector<std::string> labels_;
    std::vector<ElementSet> down_;
    std::vector<ElementSet> up_;
    std::vector<ElementSet> upper_covers_;
    std::vector<ElementSet> lower_covers_;
    std::vector<std::size_t> height_;
    std::vector<Element> meet_;
    std::vector<Element> join_;
    Element bottom_ = 0;
    Element top_ = 0;
    std::uint64_t fingerprint_ = 0;
};

/// Builds and validates a lattice. Throws LatticeError when the covers contain
/// a cycle, when there is no unique bottom or top, or when some pair lacks a
/// unique meet or join.
Lattice build_lattice(const LatticeSpec& spec);

inline Lattice parse_and_build(std::string_view text) { return build_lattice(parse_lattice(text)); }

/// Free-function spellings of the table lookups.
inline Element meet(const Lattice& l, Element a, Element b) { return l.meet(a, b); }
inline Element join(const Lattice& l, Element a, Element b) { return l.join(a, b); }
inline ElementSet upper_set(const Lattice& l, Element a) { return l.upper_set(a); }
inline ElementSet principal_ideal(const Lattice& l, Element a) { return l.principal_ideal(a); }

bool is_distributive(const Lattice& l);
/// Scans the dual law a v (b ^ c) = (a v b) ^ (a v c); agrees with
/// is_distributive on every lattice.
bool is_join_distributive(const Lattice& l);
bool is_modular(const Lattice& l);

struct SublatticeWitness {
    enum class Kind { M3, N5 };
    Kind kind;
    /// M3: bottom, three atoms, top. N5: bottom, a, c, b, top with a < c and
    /// b incomparable to both.
    std::vector<Element> embedding;
};

const char* to_string(SublatticeWitness::Kind kind);

/// Searches all 5-subsets for a meet/join-closed copy of M3 or N5. Returns
/// nothing iff the lattice is distributive.
std::optional<SublatticeWitness> find_forbidden_sublattice(const Lattice& l);

/// Re-checks a witness against the ambient operations.
bool validate_witness(const Lattice& l, const SublatticeWitness& w);

/// Order isomorphism l1 -> l2 as a permutation vector (result[a] is the image
/// of a), found by exact backtracking.
std::optional<std::vector<Element>> lattices_isomorphic(const Lattice& l1, const Lattice& l2);

/// Per-element signature sorted into a vector; equal for isomorphic lattices.
std::vector<std::uint64_t> invariant_vector(const Lattice& l);

/// "{0,a,c}": member labels sorted by label text.
std::string format_set(const Lattice& l, ElementSet s);
/// "0,a,c": same order, no braces. Used for CLI ideal arguments.
std::string format_label_list(const Lattice& l, ElementSet s);

} // namespace zdlat
