#include "zdlat/verify.hpp"

#include "zdlat/census.hpp"
#include "zdlat/claims.hpp"
#include "zdlat/zdgraph.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <tuple>

namespace zdlat {

namespace {

ElementSet labels_to_set(const Lattice& l, std::initializer_list<const char*> labels)
{
    ElementSet s;
    for (const char* name : labels)
        s.insert(l.index_of(name));
    return s;
}

std::string expect_set(const Lattice& l, ElementSet got, ElementSet want)
{
    if (got == want)
        return {};
    return "got " + format_set(l, got) + ", expected " + format_set(l, want);
}

} // namespace

std::vector<PaperCheck> verify_paper(std::string_view figure1_text)
{
    std::vector<PaperCheck> checks;
    // Each check returns an empty string on success or a failure detail.
    auto run = [&](std::string name, const std::function<std::string()>& body) {
        PaperCheck c{std::move(name)};
        try {
            c.detail = body();
            c.passed = c.detail.empty();
        }
        catch (const std::exception& e) {
            c.detail = std::string("error: ") + e.what();
        }
        checks.push_back(std::move(c));
    };

    std::optional<Lattice> fig;
    run("figure1.parse", [&]() -> std::string {
        auto spec = parse_lattice(figure1_text);
        if (spec.element_labels.size() != 9 || spec.cover_pairs.size() != 12)
            return std::to_string(spec.element_labels.size()) + " elements and " + std::to_string(spec.cover_pairs.size())
                   + " covers, expected 9 and 12";
        fig = build_lattice(spec);
        return {};
    });
    auto need_fig = [&]() -> const Lattice& {
        if (!fig)
            throw Error("nine-element lattice unavailable");
        return *fig;
    };

    run("figure1.distributive", [&]() -> std::string {
        const Lattice& l = need_fig();
        if (!is_distributive(l))
            return "lattice is not distributive";
        if (auto w = find_forbidden_sublattice(l))
            return std::string("found forbidden sublattice ") + to_string(w->kind);
        return {};
    });
    run("figure1.meets", [&]() -> std::string {
        const Lattice& l = need_fig();
        auto m = [&](const char* a, const char* b) { return l.label(l.meet(l.index_of(a), l.index_of(b))); };
        std::string out;
        for (auto [a, b, want] : {std::tuple{"a", "b", "0"}, std::tuple{"a", "x", "0"}, std::tuple{"c", "b", "0"},
                                  std::tuple{"c", "x", "0"}, std::tuple{"0", "z", "0"}, std::tuple{"a", "d", "c"},
                                  std::tuple{"z", "d", "y"}, std::tuple{"b", "z", "x"}}) {
            if (m(a, b) != want)
                out += std::string(a) + "^" + b + "=" + m(a, b) + " (expected " + want + ") ";
        }
        return out;
    });

    run("figure1.gamma.vertices", [&]() -> std::string {
        const Lattice& l = need_fig();
        ZdGraph g = build_gamma(l);
        return expect_set(l, g.vertex_set(), labels_to_set(l, {"0", "a", "b", "c", "x"}));
    });
    run("figure1.gamma0.vertices", [&]() -> std::string {
        const Lattice& l = need_fig();
        ZdGraph g = build_gamma_I(l, make_ideal_set(l, ElementSet::singleton(l.bottom())));
        return expect_set(l, g.vertex_set(), labels_to_set(l, {"a", "b", "c", "x"}));
    });
    run("figure1.gamma0.not-isomorphic-to-gamma", [&]() -> std::string {
        const Lattice& l = need_fig();
        ZdGraph g = build_gamma(l);
        ZdGraph g0 = build_gamma_I(l, make_ideal_set(l, ElementSet::singleton(l.bottom())));
        if (g.order() != 5 || g0.order() != 4)
            return "|V| = " + std::to_string(g.order()) + " and " + std::to_string(g0.order()) + ", expected 5 and 4";
        return graphs_isomorphic(g, g0) ? "graphs are isomorphic" : "";
    });
    run("figure1.gamma0.isomorphic-to-gamma-minus-0", [&]() -> std::string {
        return gamma0_correction(need_fig()) ? "" : "no isomorphism found";
    });
    run("figure1.gamma0.four-cycle", [&]() -> std::string {
        const Lattice& l = need_fig();
        auto inv = invariants(build_gamma_I(l, make_ideal_set(l, ElementSet::singleton(l.bottom()))));
        if (inv.edge_count != 4 || inv.girth != std::optional<std::size_t>{4} || inv.diameter != std::optional<std::size_t>{2}
            || !inv.cut_vertices.empty() || inv.clique_number != 2 || inv.chromatic_number != 2)
            return "invariants differ from the 4-cycle";
        return {};
    });
    run("figure1.gamma.wheel", [&]() -> std::string {
        auto inv = invariants(build_gamma(need_fig()));
        if (inv.edge_count != 8 || inv.girth != std::optional<std::size_t>{3} || inv.diameter != std::optional<std::size_t>{2}
            || inv.clique_number != 3 || inv.chromatic_number != 3)
            return "invariants differ from the 4-cycle plus hub";
        return {};
    });

    run("figure1.principal-ideal-z", [&]() -> std::string {
        const Lattice& l = need_fig();
        return expect_set(l, l.principal_ideal(l.index_of("z")), labels_to_set(l, {"0", "c", "a", "x", "y", "z"}));
    });
    run("figure1.prime-ideals", [&]() -> std::string {
        const Lattice& l = need_fig();
        std::vector<ElementSet> got, want;
        for (const auto& p : enumerate_prime_ideals(l))
            got.push_back(p.members());
        for (const char* g : {"a", "b", "z", "d"})
            want.push_back(l.principal_ideal(l.index_of(g)));
        std::sort(want.begin(), want.end(), canonical_less);
        if (got == want)
            return {};
        std::string s = "got";
        for (auto p : got)
            s += " " + format_set(l, p);
        return s;
    });
    run("figure1.radical-contained", [&]() -> std::string {
        const Lattice& l = need_fig();
        IdealSet z = make_ideal_set(l, l.principal_ideal(l.index_of("z")));
        auto rad = radical(l, z, RadicalVariant::contained);
        if (!rad.value)
            return "no prime contained in (z]";
        if (auto e = expect_set(l, *rad.value, labels_to_set(l, {"0", "a", "c"})); !e.empty())
            return e;
        if (rad.family_size != 2 || rad.family[0].members() != l.principal_ideal(l.index_of("a"))
            || rad.family[1].members() != z.members())
            return "prime family is not {(a], (z]}";
        return *rad.value == z.members() ? "radical equals I" : "";
    });
    run("figure1.radical-containing", [&]() -> std::string {
        const Lattice& l = need_fig();
        IdealSet z = make_ideal_set(l, l.principal_ideal(l.index_of("z")));
        auto rad = radical(l, z, RadicalVariant::containing);
        if (!rad.value || rad.family_size != 1)
            return "expected exactly one prime containing (z]";
        return expect_set(l, *rad.value, z.members());
    });
    run("figure1.claim.P2.1-CONTAINED-fails", [&]() -> std::string {
        const Lattice& l = need_fig();
        IdealSet z = make_ideal_set(l, l.principal_ideal(l.index_of("z")));
        auto r = check_P2_1(l, z, RadicalVariant::contained);
        if (r.status != ClaimStatus::fails)
            return std::string("status ") + to_string(r.status);
        return witness_reproduces(l, z, r) ? "" : "witness does not replay";
    });
    run("figure1.claims.zero-ideal-hold", [&]() -> std::string {
        const Lattice& l = need_fig();
        IdealSet zero = make_ideal_set(l, ElementSet::singleton(l.bottom()));
        std::string out;
        for (ClaimId id : {ClaimId::P1_3, ClaimId::L1_4, ClaimId::T1_5a, ClaimId::T1_5b, ClaimId::CASE4}) {
            auto r = check_claim(id, l, zero);
            if (r.status != ClaimStatus::holds)
                out += std::string(to_string(id)) + " is " + to_string(r.status) + " ";
        }
        return out;
    });

    run("example1.7.lattice", [&]() -> std::string {
        Lattice l = fixture_example_1_7(6);
        if (l.size() != 8)
            return std::to_string(l.size()) + " elements, expected 8";
        if (l.label(l.bottom()) != "0" || l.label(l.top()) != "S1-6")
            return "bounds are " + l.label(l.bottom()) + " and " + l.label(l.top());
        return {};
    });
    run("example1.7.not-distributive", [&]() -> std::string {
        Lattice l = fixture_example_1_7(6);
        if (is_distributive(l))
            return "lattice is distributive";
        auto w = find_forbidden_sublattice(l);
        if (!w || !validate_witness(l, *w))
            return "no valid M3/N5 witness";
        return {};
    });
    run("example1.7.hypothesis-fails", [&]() -> std::string {
        Lattice l = fixture_example_1_7(6);
        IdealSet chain = example_1_7_chain_ideal(l);
        if (!chain.is_ideal() || !chain.is_proper())
            return "chain is not a proper ideal";
        auto r = check_P1_6(l, chain);
        if (r.status != ClaimStatus::vacuous)
            return std::string("status ") + to_string(r.status);
        ElementSet want = labels_to_set(l, {"S4-6", "S1-6"});
        for (const auto& [k, v] : r.details)
            if (k == "hypothesis_set" && v != format_set(l, want))
                return "hypothesis set " + v + ", expected " + format_set(l, want);
        return {};
    });

    run("search.P2.1-CONTAINED.three-chain", [&]() -> std::string {
        auto hit = search_counterexample(ClaimId::P2_1_contained, 3);
        if (!hit)
            return "no counterexample up to size 3";
        const Lattice& l = hit->lattice;
        if (l.size() != 3 || format_set(l, hit->ideal.members()) != "{0,a}")
            return "found " + hit->lattice_id + " with ideal " + format_set(l, hit->ideal.members());
        return {};
    });
    run("search.GAMMA0.diamond", [&]() -> std::string {
        auto hit = search_counterexample(ClaimId::GAMMA0, 4);
        if (!hit)
            return "no counterexample up to size 4";
        const Lattice& l = hit->lattice;
        if (l.size() != 4 || l.upper_covers(l.bottom()).size() != 2)
            return "found " + hit->lattice_id + ", expected the 4-element diamond";
        return {};
    });
    return checks;
}

std::string format_verification(const std::vector<PaperCheck>& checks)
{
    std::ostringstream out;
    std::size_t failed = 0;
    for (const auto& c : checks) {
        if (c.passed) {
            out << "PASS " << c.name << '\n';
        }
        else {
            ++failed;
            out << "FAIL " << c.name << ": " << c.detail << '\n';
        }
    }
    if (failed == 0)
        out << "all " << checks.size() << " checks passed\n";
    else
        out << failed << " of " << checks.size() << " checks failed\n";
    return out.str();
}

} // namespace zdlat
