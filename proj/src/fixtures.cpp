#include "zdlat/fixtures.hpp"

namespace zdlat {

const std::string_view kFigure1Text = R"(# Nine-element distributive lattice (3-chain x 3-chain).
# The four edges through y are read as covers c<y, x<y, y<z, y<d.
elements: 0 c x a y b z d 1
covers: 0<c, c<a, a<z, z<1,
        0<x, x<b, b<d, d<1,
        c<y, x<y, y<z, y<d
)";

const IdealSet& Fixture::ideal(std::string_view wanted) const
{
    for (const auto& [n, i] : distinguished_ideals)
        if (n == wanted)
            return i;
    throw PreconditionError("fixture " + name + " has no ideal named '" + std::string(wanted) + "'");
}

Lattice figure1_lattice() { return parse_and_build(kFigure1Text); }

LatticeSpec example_1_7_spec(std::size_t n)
{
    if (n < 6)
        throw PreconditionError("the truncation needs n >= 6");
    if (n + 3 > kMaxElements)
        throw PreconditionError("truncation too large for the 64-element limit");
    LatticeSpec spec;
    const std::string top = "S1-" + std::to_string(n);
    spec.element_labels = {"0", "S3", "S1", "S12", "S4"};
    for (std::size_t k = 5; k <= n; ++k)
        spec.element_labels.push_back("S4-" + std::to_string(k));
    spec.element_labels.push_back(top);

    spec.cover_pairs = {{"0", "S3"}, {"0", "S1"}, {"S1", "S12"}, {"0", "S4"}};
    std::string prev = "S4";
    for (std::size_t k = 5; k <= n; ++k) {
        std::string next = "S4-" + std::to_string(k);
        spec.cover_pairs.emplace_back(prev, next);
        prev = next;
    }
    spec.cover_pairs.emplace_back("S3", top);
    spec.cover_pairs.emplace_back("S12", top);
    spec.cover_pairs.emplace_back(prev, top);
    return spec;
}

Lattice fixture_example_1_7(std::size_t n) { return build_lattice(example_1_7_spec(n)); }

IdealSet example_1_7_chain_ideal(const Lattice& l)
{
    ElementSet chain = ElementSet::singleton(l.bottom());
    for (Element e = 0; e < l.size(); ++e)
        if (l.label(e).rfind("S4", 0) == 0)
            chain.insert(e);
    return make_ideal_set(l, chain);
}

std::vector<Fixture> paper_fixtures()
{
    std::vector<Fixture> out;
    {
        Lattice l = figure1_lattice();
        std::vector<std::pair<std::string, IdealSet>> ideals;
        ideals.emplace_back("zero", make_ideal_set(l, ElementSet::singleton(l.bottom())));
        ideals.emplace_back("z", make_ideal_set(l, l.principal_ideal(l.index_of("z"))));
        out.push_back({"figure1", std::move(l), std::move(ideals)});
    }
    {
        Lattice l = fixture_example_1_7(6);
        std::vector<std::pair<std::string, IdealSet>> ideals;
        ideals.emplace_back("chain", example_1_7_chain_ideal(l));
        out.push_back({"example1.7-n6", std::move(l), std::move(ideals)});
    }
    return out;
}

} // namespace zdlat
