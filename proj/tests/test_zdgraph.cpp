#include "doctest.h"
#include "support.hpp"

#include "zdlat/claims.hpp"
#include "zdlat/fixtures.hpp"
#include "zdlat/zdgraph.hpp"

using namespace zdlat;

namespace {

IdealSet zero_ideal(const Lattice& l) { return make_ideal_set(l, ElementSet::singleton(l.bottom())); }

std::size_t count_of(const std::string& text, const std::string& needle)
{
    std::size_t n = 0;
    for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1))
        ++n;
    return n;
}

} // namespace

TEST_CASE("zero-divisor graphs of the nine-element lattice")
{
    Lattice l = figure1_lattice();
    ZdGraph g = build_gamma(l);
    CHECK(g.vertex_labels == std::vector<std::string>{"0", "c", "x", "a", "b"});
    CHECK(g.graph.edge_count() == 8);
    CHECK(g.graph.degree(*g.position_of(l.bottom())) == 4);

    ZdGraph g0 = build_gamma_I(l, zero_ideal(l));
    CHECK(g0.vertex_labels == std::vector<std::string>{"c", "x", "a", "b"});
    CHECK(g0.graph.edge_count() == 4);
    auto inv = invariants(g0);
    CHECK(inv.girth == std::optional<std::size_t>{4});
    CHECK(inv.diameter == std::optional<std::size_t>{2});
    CHECK(inv.clique_number == 2);
    CHECK(inv.chromatic_number == 2);
    CHECK_FALSE(graphs_isomorphic(g, g0));

    // Deleting 0 from Gamma(L) gives Gamma_{0}(L) exactly.
    ZdGraph minus0 = induced_subgraph(g, g.vertex_set() - ElementSet{l.bottom()});
    CHECK(minus0.vertex_elements == g0.vertex_elements);
    CHECK(minus0.graph == g0.graph);
    CHECK(minus0.origin.restricted);

    ZdGraph gz = build_gamma_I(l, make_ideal_set(l, l.principal_ideal(l.index_of("z"))));
    CHECK(gz.order() == 0);
    CHECK(invariants(gz).connected);
}

TEST_CASE("graph construction preconditions")
{
    Lattice l = figure1_lattice();
    CHECK_THROWS_AS(build_gamma_I(l, make_ideal_set(l, l.all())), PreconditionError);
    CHECK_THROWS_AS(build_gamma_I(l, make_ideal_set(l, ElementSet{l.index_of("a")})), PreconditionError);
    Lattice other = fixture_example_1_7(6);
    CHECK_THROWS_AS(build_gamma_I(l, zero_ideal(other)), PreconditionError);
    CHECK_THROWS_AS(build_gamma(parse_and_build("elements: 0\ncovers:\n")), PreconditionError);
    ZdGraph g0 = build_gamma_I(l, zero_ideal(l));
    CHECK_THROWS_AS(induced_subgraph(g0, ElementSet{l.bottom()}), PreconditionError);
}

TEST_CASE("the two-element chain")
{
    Lattice l = parse_and_build("elements: 0 1\ncovers: 0<1\n");
    ZdGraph g = build_gamma(l);
    CHECK(g.order() == 1);
    CHECK(build_gamma_I(l, zero_ideal(l)).order() == 0);
}

TEST_CASE("vertices and edges follow the meet-in-I rule on every census instance")
{
    for (const auto& c : testing::census(7)) {
        const Lattice& l = c.lattice;
        for (const auto& i : testing::proper_ideals(l)) {
            ZdGraph g = build_gamma_I(l, i);
            CHECK(adjacency_matches_origin(g, l));
            ElementSet expected;
            for (Element x = 0; x < l.size(); ++x)
                for (Element y = 0; y < l.size(); ++y)
                    if (!i.members().contains(x) && !i.members().contains(y) && x != y
                        && i.members().contains(l.meet(x, y)))
                        expected.insert(x);
            CHECK(g.vertex_set() == expected);
            CHECK_FALSE(g.vertex_set().intersects(i.members()));
            // Every vertex has a neighbour.
            for (std::size_t p = 0; p < g.order(); ++p)
                CHECK(g.graph.degree(p) > 0);
        }
        if (l.size() >= 2) {
            ZdGraph g = build_gamma(l);
            CHECK(adjacency_matches_origin(g, l));
            CHECK(g.vertex_set().contains(l.bottom()));
            ZdGraph g0 = build_gamma_I(l, zero_ideal(l));
            CHECK(g.vertex_set() == (g0.vertex_set() | ElementSet{l.bottom()}));
            ZdGraph minus0 = induced_subgraph(g, g0.vertex_set());
            CHECK(minus0.vertex_elements == g0.vertex_elements);
            CHECK(minus0.graph == g0.graph);
        }
    }
}

TEST_CASE("adjacency check notices tampering and foreign lattices")
{
    Lattice l = figure1_lattice();
    ZdGraph g = build_gamma_I(l, zero_ideal(l));
    CHECK(adjacency_matches_origin(g, l));
    ZdGraph tampered = g;
    tampered.graph.add_edge(0, 2); // c and a: c ^ a = c
    CHECK_FALSE(adjacency_matches_origin(tampered, l));
    CHECK_FALSE(adjacency_matches_origin(g, fixture_example_1_7(6)));
}

TEST_CASE("DOT export")
{
    Lattice l = parse_and_build("elements: 0 a b 1\ncovers: 0<a, 0<b, a<1, b<1\n");
    std::string dot = to_dot(build_gamma_I(l, zero_ideal(l)));
    CHECK(dot.rfind("graph zd {", 0) == 0);
    CHECK(count_of(dot, "a -- b") == 1);
    CHECK(dot.back() == '\n');

    Lattice ex = fixture_example_1_7(6);
    std::string quoted = to_dot(build_gamma_I(ex, zero_ideal(ex)));
    CHECK(count_of(quoted, "\"S4-6\"") > 0);
    CHECK(count_of(quoted, " -- ") == build_gamma_I(ex, zero_ideal(ex)).graph.edge_count());
}

TEST_CASE("invariant text")
{
    Lattice l = figure1_lattice();
    ZdGraph g0 = build_gamma_I(l, zero_ideal(l));
    std::string text = format_invariants(g0, invariants(g0));
    CHECK(text.find("vertices: 4\n") != std::string::npos);
    CHECK(text.find("girth: 4\n") != std::string::npos);
    CHECK(text.find("cut_vertices: {}\n") != std::string::npos);
    ZdGraph gz = build_gamma_I(l, make_ideal_set(l, l.principal_ideal(l.index_of("z"))));
    CHECK(format_invariants(gz, invariants(gz)).find("girth: acyclic\n") != std::string::npos);
}
