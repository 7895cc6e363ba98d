#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace zdlat {

/// Dense element index into a lattice (or vertex position in a graph).
using Element = std::size_t;

/// Largest universe an ElementSet can address.
inline constexpr std::size_t kMaxElements = 64;

/// A subset of {0, ..., 63} stored as a bit mask. Every set-valued quantity in
/// the library (ideals, up-sets, vertex sets, adjacency rows) uses this type.
class ElementSet {
public:
    constexpr ElementSet() = default;
    constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
    ElementSet(std::initializer_list<Element> elements)
    {
        for (Element e : elements)
            insert(e);
    }

    /// {0, ..., n-1}.
    static constexpr ElementSet universe(std::size_t n)
    {
        return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr ElementSet singleton(Element e) { return ElementSet(std::uint64_t{1} << e); }

    static ElementSet from(const std::vector<Element>& elements)
    {
        ElementSet s;
        for (Element e : elements)
            s.insert(e);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(Element e) const { return e < 64 && ((bits_ >> e) & 1U) != 0; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

    void insert(Element e)
    {
        if (e >= kMaxElements)
            throw std::out_of_range("element index exceeds ElementSet capacity");
        bits_ |= std::uint64_t{1} << e;
    }
    constexpr void erase(Element e)
    {
        if (e < 64)
            bits_ &= ~(std::uint64_t{1} << e);
    }

    /// Smallest member; undefined on the empty set.
    constexpr Element first() const { return static_cast<Element>(std::countr_zero(bits_)); }

    constexpr bool is_subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }

    /// Members in increasing index order.
    std::vector<Element> to_vector() const
    {
        std::vector<Element> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(static_cast<Element>(std::countr_zero(b)));
        return out;
    }

    /// Calls f(e) for each member in increasing order.
    template <typename F>
    void for_each(F&& f) const
    {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            f(static_cast<Element>(std::countr_zero(b)));
    }

    friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
    friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
    /// Set difference.
    friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
    ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
    ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
    ElementSet& operator-=(ElementSet o) { bits_ &= ~o.bits_; return *this; }

    friend constexpr bool operator==(ElementSet, ElementSet) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Canonical set order: cardinality first, then lexicographic on the sorted
/// member lists.
bool canonical_less(ElementSet a, ElementSet b);

} // namespace zdlat
