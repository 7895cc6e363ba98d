#include "zdlat/ideal.hpp"

#include <algorithm>

namespace zdlat {

namespace {

void check_inside(const Lattice& l, ElementSet s)
{
    if (!s.is_subset_of(l.all()))
        throw PreconditionError("set contains elements outside the lattice");
}

void require_ideal(const IdealSet& ideal, const Lattice& l)
{
    if (ideal.lattice_size() != l.size() || !ideal.is_ideal())
        throw PreconditionError("argument is not a verified ideal of this lattice");
}

} // namespace

bool is_ideal(const Lattice& l, ElementSet s)
{
    check_inside(l, s);
    if (s.empty())
        return false;
    bool ok = true;
    s.for_each([&](Element x) {
        if (!l.principal_ideal(x).is_subset_of(s))
            ok = false;
        s.for_each([&](Element y) {
            if (!s.contains(l.join(x, y)))
                ok = false;
        });
    });
    return ok;
}

bool is_filter(const Lattice& l, ElementSet s)
{
    check_inside(l, s);
    if (s.empty())
        return false;
    bool ok = true;
    s.for_each([&](Element x) {
        if (!l.upper_set(x).is_subset_of(s))
            ok = false;
        s.for_each([&](Element y) {
            if (!s.contains(l.meet(x, y)))
                ok = false;
        });
    });
    return ok;
}

bool is_prime_ideal(const Lattice& l, ElementSet s)
{
    if (!is_ideal(l, s) || s == l.all())
        return false;
    for (Element a = 0; a < l.size(); ++a) {
        if (s.contains(a))
            continue;
        for (Element b = 0; b < l.size(); ++b)
            if (!s.contains(b) && s.contains(l.meet(a, b)))
                return false;
    }
    return true;
}

bool is_prime_by_complement(const Lattice& l, ElementSet s)
{
    check_inside(l, s);
    if (s.empty() || s == l.all())
        return false;
    return is_ideal(l, s) && is_filter(l, l.all() - s);
}

IdealSet make_ideal_set(const Lattice& l, ElementSet members)
{
    check_inside(l, members);
    IdealSet out;
    out.members_ = members;
    out.lattice_size_ = l.size();
    out.status_.is_ideal = is_ideal(l, members);
    out.status_.is_proper = members != l.all();
    out.status_.is_prime = out.status_.is_ideal && is_prime_ideal(l, members);
    out.status_.is_filter = is_filter(l, members);
    return out;
}

std::vector<IdealSet> enumerate_ideals(const Lattice& l)
{
    // In a finite lattice an ideal contains the join of its members, so the
    // ideals are exactly the principal ideals (a].
    std::vector<ElementSet> sets;
    for (Element a = 0; a < l.size(); ++a)
        sets.push_back(l.principal_ideal(a));
    std::sort(sets.begin(), sets.end(), canonical_less);
    std::vector<IdealSet> out;
    out.reserve(sets.size());
    for (ElementSet s : sets)
        out.push_back(make_ideal_set(l, s));
    return out;
}

std::vector<IdealSet> enumerate_prime_ideals(const Lattice& l)
{
    std::vector<IdealSet> out;
    for (auto& ideal : enumerate_ideals(l))
        if (ideal.is_prime())
            out.push_back(ideal);
    return out;
}

ElementSet quotient_ideal(const Lattice& l, const IdealSet& ideal, Element x)
{
    require_ideal(ideal, l);
    ElementSet out;
    for (Element z = 0; z < l.size(); ++z)
        if (ideal.members().contains(l.meet(z, x)))
            out.insert(z);
    return out;
}

const char* to_string(RadicalVariant v) { return v == RadicalVariant::contained ? "contained" : "containing"; }

std::optional<RadicalVariant> parse_radical_variant(std::string_view text)
{
    if (text == "contained" || text == "CONTAINED")
        return RadicalVariant::contained;
    if (text == "containing" || text == "CONTAINING")
        return RadicalVariant::containing;
    return std::nullopt;
}

namespace {

std::vector<IdealSet> qualifying_primes(const Lattice& l, const IdealSet& ideal, RadicalVariant variant)
{
    std::vector<IdealSet> out;
    for (auto& p : enumerate_prime_ideals(l)) {
        bool qualifies = variant == RadicalVariant::contained ? p.members().is_subset_of(ideal.members())
                                                              : ideal.members().is_subset_of(p.members());
        if (qualifies)
            out.push_back(p);
    }
    return out;
}

} // namespace

RadicalResult radical(const Lattice& l, const IdealSet& ideal, RadicalVariant variant)
{
    require_ideal(ideal, l);
    RadicalResult result;
    result.family = qualifying_primes(l, ideal, variant);
    result.family_size = result.family.size();
    if (!result.family.empty()) {
        ElementSet acc = l.all();
        for (const auto& p : result.family)
            acc &= p.members();
        result.value = acc;
    }
    return result;
}

std::optional<std::vector<IdealSet>> is_finite_intersection_of_primes(const Lattice& l, const IdealSet& ideal,
                                                                      RadicalVariant variant)
{
    require_ideal(ideal, l);
    const auto family = qualifying_primes(l, ideal, variant);
    const ElementSet target = ideal.members();

    // Intersections only shrink as primes are added, so if the whole family
    // does not reach I no subfamily does either.
    ElementSet everything = l.all();
    for (const auto& p : family)
        everything &= p.members();
    if (family.empty() || everything != target)
        return std::nullopt;

    const std::size_t m = family.size();
    std::vector<std::size_t> pick;
    // Depth-first over index-increasing combinations of a fixed size; the
    // first hit at the smallest size is the canonical answer.
    auto search = [&](auto&& self, std::size_t start, std::size_t remaining, ElementSet acc) -> bool {
        if (remaining == 0)
            return acc == target;
        for (std::size_t i = start; i + remaining <= m; ++i) {
            ElementSet next = acc & family[i].members();
            if (!target.is_subset_of(next))
                continue;
            pick.push_back(i);
            if (self(self, i + 1, remaining - 1, next))
                return true;
            pick.pop_back();
        }
        return false;
    };
    for (std::size_t k = 1; k <= m; ++k) {
        pick.clear();
        if (search(search, 0, k, l.all())) {
            std::vector<IdealSet> out;
            for (std::size_t i : pick)
                out.push_back(family[i]);
            return out;
        }
    }
    return std::nullopt;
}

IdealSet ideal_from_labels(const Lattice& l, std::string_view comma_separated)
{
    ElementSet members;
    std::size_t pos = 0;
    while (pos <= comma_separated.size()) {
        std::size_t stop = comma_separated.find(',', pos);
        if (stop == std::string_view::npos)
            stop = comma_separated.size();
        std::string_view tok = comma_separated.substr(pos, stop - pos);
        while (!tok.empty() && tok.front() == ' ')
            tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ')
            tok.remove_suffix(1);
        if (!tok.empty())
            members.insert(l.index_of(tok));
        pos = stop + 1;
    }
    IdealSet ideal = make_ideal_set(l, members);
    if (!ideal.is_ideal())
        throw PreconditionError(format_set(l, members) + " is not an ideal");
    return ideal;
}

} // namespace zdlat
