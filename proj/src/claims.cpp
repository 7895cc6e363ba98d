#include "zdlat/claims.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace zdlat {

namespace {

constexpr const char* kVertexRuleNote =
    "vertex rule: x in L\\I is a vertex iff x^y in I for some y in L\\I, y != x (meet-in-I reading)";

struct ClaimName {
    ClaimId id;
    const char* name;
};

constexpr ClaimName kNames[] = {
    {ClaimId::P1_3, "P1.3"},
    {ClaimId::L1_4, "L1.4"},
    {ClaimId::T1_5a, "T1.5a"},
    {ClaimId::T1_5b, "T1.5b"},
    {ClaimId::CASE4, "CASE4"},
    {ClaimId::P1_6, "P1.6"},
    {ClaimId::P2_1_contained, "P2.1-CONTAINED"},
    {ClaimId::P2_1_containing, "P2.1-CONTAINING"},
    {ClaimId::T2_3, "T2.3"},
    {ClaimId::GAMMA0, "GAMMA0"},
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// Validates the instance. Returns false (and marks the report VACUOUS) when
/// the ideal is the whole lattice.
bool admit(const Lattice& l, const IdealSet& ideal, ClaimReport& report)
{
    if (ideal.lattice_size() != l.size() || !ideal.is_ideal())
        throw PreconditionError(std::string(to_string(report.claim)) + ": argument is not an ideal of the lattice");
    if (requires_distributive(report.claim) && !is_distributive(l))
        throw PreconditionError(std::string(to_string(report.claim)) + ": the lattice is not distributive");
    if (!ideal.is_proper()) {
        report.status = ClaimStatus::vacuous;
        report.notes.emplace_back("ideal is the whole lattice; the statement concerns proper ideals");
        return false;
    }
    return true;
}

Witness witness_of(const ZdGraph& g, std::initializer_list<std::size_t> positions, std::string description)
{
    Witness w;
    for (auto p : positions)
        w.elements.push_back(g.vertex_elements[p]);
    w.description = std::move(description);
    return w;
}

/// Whether edge uv lies on a triangle or a 4-cycle.
bool on_short_cycle(const SimpleGraph& g, std::size_t u, std::size_t v)
{
    if (g.neighbours(u).intersects(g.neighbours(v)))
        return true;
    ElementSet nu = g.neighbours(u) - ElementSet{v};
    ElementSet nv = g.neighbours(v) - ElementSet{u};
    bool found = false;
    nu.for_each([&](std::size_t w) {
        if ((g.neighbours(w) & (nv - ElementSet{w})).size() > 0)
            found = true;
    });
    return found;
}

/// Whether the path a-x-y extends to a cycle of length at most four.
bool path_on_short_cycle(const SimpleGraph& g, std::size_t a, std::size_t x, std::size_t y)
{
    if (g.adjacent(a, y))
        return true;
    ElementSet closers = (g.neighbours(a) & g.neighbours(y)) - ElementSet{a, x, y};
    return !closers.empty();
}

bool is_bridge(const SimpleGraph& g, std::size_t u, std::size_t v)
{
    SimpleGraph cut(g.order());
    for (auto [p, q] : g.edges())
        if (!(p == std::min(u, v) && q == std::max(u, v)))
            cut.add_edge(p, q);
    return !bfs_distances(cut, u)[v].has_value();
}

std::size_t component_count(const SimpleGraph& g)
{
    std::size_t count = 0;
    ElementSet seen;
    for (std::size_t s = 0; s < g.order(); ++s) {
        if (seen.contains(s))
            continue;
        ++count;
        auto d = bfs_distances(g, s);
        for (std::size_t v = 0; v < g.order(); ++v)
            if (d[v])
                seen.insert(v);
    }
    return count;
}

ElementSet hypothesis_set(const Lattice& l, const IdealSet& ideal)
{
    ElementSet acc = l.all();
    ideal.members().for_each([&](Element a) { acc &= l.upper_set(a); });
    return acc;
}

} // namespace

const char* to_string(ClaimId id)
{
    for (const auto& n : kNames)
        if (n.id == id)
            return n.name;
    return "?";
}

std::optional<ClaimId> parse_claim_id(std::string_view text)
{
    for (const auto& n : kNames)
        if (text == n.name)
            return n.id;
    return std::nullopt;
}

bool requires_distributive(ClaimId id)
{
    switch (id) {
    case ClaimId::L1_4:
    case ClaimId::T1_5a:
    case ClaimId::T1_5b:
    case ClaimId::P2_1_contained:
    case ClaimId::P2_1_containing:
    case ClaimId::T2_3:
        return true;
    default:
        return false;
    }
}

const char* to_string(ClaimStatus s)
{
    switch (s) {
    case ClaimStatus::holds:
        return "HOLDS";
    case ClaimStatus::fails:
        return "FAILS";
    default:
        return "VACUOUS";
    }
}

// ---------------------------------------------------------------------------
// Checkers

ClaimReport check_P1_3(const Lattice& l, const IdealSet& ideal)
{
    ClaimReport r{ClaimId::P1_3};
    r.notes.emplace_back("statement is phrased for a proper filter; checked with I a proper ideal");
    if (!admit(l, ideal, r))
        return r;
    r.notes.emplace_back(kVertexRuleNote);
    ZdGraph g = build_gamma_I(l, ideal);
    const SimpleGraph& sg = g.graph;
    auto d = diameter(sg);
    auto gr = girth(sg);
    r.details.emplace_back("vertices", std::to_string(g.order()));
    r.details.emplace_back("diameter", d ? std::to_string(*d) : "inf");
    r.details.emplace_back("girth", gr ? std::to_string(*gr) : "acyclic");
    if (g.order() <= 1) {
        r.status = ClaimStatus::vacuous;
        r.notes.emplace_back("graph has at most one vertex");
        return r;
    }
    for (std::size_t u = 0; u < sg.order(); ++u) {
        auto dist = bfs_distances(sg, u);
        for (std::size_t v = u + 1; v < sg.order(); ++v) {
            if (!dist[v]) {
                r.status = ClaimStatus::fails;
                r.witness = witness_of(g, {u, v}, "vertices in different components");
                return r;
            }
            if (*dist[v] > 3) {
                r.status = ClaimStatus::fails;
                r.witness = witness_of(g, {u, v}, "distance " + std::to_string(*dist[v]) + " > 3");
                return r;
            }
        }
    }
    if (gr && *gr > 7) {
        r.status = ClaimStatus::fails;
        Witness w;
        for (auto p : shortest_cycle(sg))
            w.elements.push_back(g.vertex_elements[p]);
        w.description = "shortest cycle has length " + std::to_string(*gr) + " > 7";
        r.witness = w;
        return r;
    }
    r.status = ClaimStatus::holds;
    return r;
}

ClaimReport check_L1_4(const Lattice& l, const IdealSet& ideal)
{
    ClaimReport r{ClaimId::L1_4};
    if (!admit(l, ideal, r))
        return r;
    r.notes.emplace_back(kVertexRuleNote);
    ZdGraph g = build_gamma_I(l, ideal);
    const SimpleGraph& sg = g.graph;
    std::size_t paths = 0, by_ideal = 0, by_cycle = 0;
    for (std::size_t x = 0; x < sg.order(); ++x) {
        const bool extends = is_ideal(l, ideal.members() | ElementSet::singleton(g.vertex_elements[x]));
        ElementSet nx = sg.neighbours(x);
        nx.for_each([&](std::size_t a) {
            nx.for_each([&](std::size_t y) {
                if (a == y || r.status == ClaimStatus::fails)
                    return;
                ++paths;
                const bool cyc = path_on_short_cycle(sg, a, x, y);
                by_ideal += extends;
                by_cycle += cyc;
                if (!extends && !cyc) {
                    r.status = ClaimStatus::fails;
                    r.witness = witness_of(g, {a, x, y},
                                           "I u {x} is not an ideal and the path lies on no cycle of length <= 4");
                }
            });
        });
        if (r.status == ClaimStatus::fails)
            break;
    }
    r.details.emplace_back("paths", std::to_string(paths));
    r.details.emplace_back("ideal_branch", std::to_string(by_ideal));
    r.details.emplace_back("cycle_branch", std::to_string(by_cycle));
    if (r.status != ClaimStatus::fails)
        r.status = paths == 0 ? ClaimStatus::vacuous : ClaimStatus::holds;
    return r;
}

ClaimReport check_T1_5a(const Lattice& l, const IdealSet& ideal)
{
    ClaimReport r{ClaimId::T1_5a};
    if (!admit(l, ideal, r))
        return r;
    r.notes.emplace_back(kVertexRuleNote);
    r.notes.emplace_back("core: union of all cycles (edges that are not bridges)");
    ZdGraph g = build_gamma_I(l, ideal);
    GraphInvariants inv = invariants(g);
    r.details.emplace_back("girth", inv.girth ? std::to_string(*inv.girth) : "acyclic");
    r.details.emplace_back("core_edges", std::to_string(inv.core_edges.size()));
    if (!inv.has_cycle()) {
        r.status = ClaimStatus::vacuous;
        r.notes.emplace_back("graph has no cycle");
        return r;
    }
    for (auto [u, v] : inv.core_edges) {
        if (!on_short_cycle(g.graph, u, v)) {
            r.status = ClaimStatus::fails;
            r.witness = witness_of(g, {u, v}, "core edge on no 3-cycle or 4-cycle");
            return r;
        }
    }
    r.status = ClaimStatus::holds;
    return r;
}

ClaimReport check_T1_5b(const Lattice& l, const IdealSet& ideal)
{
    ClaimReport r{ClaimId::T1_5b};
    if (!admit(l, ideal, r))
        return r;
    r.notes.emplace_back(kVertexRuleNote);
    ZdGraph g = build_gamma_I(l, ideal);
    GraphInvariants inv = invariants(g);
    r.details.emplace_back("vertices", std::to_string(inv.vertex_count));
    r.details.emplace_back("core_vertices", std::to_string(inv.core_vertices.size()));
    if (!inv.has_cycle() || inv.vertex_count < 3) {
        r.status = ClaimStatus::vacuous;
        r.notes.emplace_back("graph has no cycle");
        return r;
    }
    for (std::size_t v = 0; v < g.order(); ++v) {
        if (!inv.core_vertices.contains(v) && inv.degrees[v] != 1) {
            r.status = ClaimStatus::fails;
            r.witness = witness_of(g, {v}, "vertex outside the core with degree " + std::to_string(inv.degrees[v]));
            return r;
        }
    }
    r.status = ClaimStatus::holds;
    return r;
}

std::vector<ClaimReport> check_T1_5(const Lattice& l, const IdealSet& ideal)
{
    return {check_T1_5a(l, ideal), check_T1_5b(l, ideal)};
}

ClaimReport check_CASE4(const Lattice& l, const IdealSet& ideal)
{
    ClaimReport r{ClaimId::CASE4};
    if (!admit(l, ideal, r))
        return r;
    if (!is_distributive(l)) {
        r.status = ClaimStatus::vacuous;
        r.notes.emplace_back("lattice is not distributive");
        return r;
    }
    r.notes.emplace_back(kVertexRuleNote);
    ZdGraph g = build_gamma_I(l, ideal);
    const SimpleGraph& sg = g.graph;
    GraphInvariants inv = invariants(g);
    if (!inv.has_cycle()) {
        r.status = ClaimStatus::vacuous;
        r.notes.emplace_back("graph has no cycle");
        return r;
    }
    bool pendants_ok = true;
    std::size_t pendants = 0;
    for (std::size_t a = 0; a < sg.order(); ++a) {
        if (sg.degree(a) != 1)
            continue;
        ++pendants;
        if (!sg.neighbours(a).intersects(inv.core_vertices))
            pendants_ok = false;
    }
    r.details.emplace_back("pendants", std::to_string(pendants));
    r.details.emplace_back("pendants_adjacent_to_core", yes_no(pendants_ok));
    for (std::size_t a = 0; a < sg.order(); ++a) {
        if (sg.degree(a) != 1)
            continue;
        std::size_t x = sg.neighbours(a).first();
        if (inv.core_vertices.contains(x))
            continue;
        for (std::size_t y : (sg.neighbours(x) - ElementSet{a}).to_vector()) {
            if (inv.core_vertices.contains(y))
                continue;
            ElementSet ends = (sg.neighbours(y) - ElementSet{x, a}) & inv.core_vertices;
            if (!ends.empty()) {
                r.status = ClaimStatus::fails;
                r.witness = witness_of(g, {a, x, y, ends.first()},
                                       "pendant a reaches core vertex b through two non-core vertices");
                return r;
            }
        }
    }
    r.status = ClaimStatus::holds;
    return r;
}

ClaimReport check_P1_6(const Lattice& l, const IdealSet& ideal)
{
    ClaimReport r{ClaimId::P1_6};
    r.notes.emplace_back("hypothesis read as: intersection over a in I of [a]^u equals {1}");
    if (!admit(l, ideal, r))
        return r;
    ElementSet hyp = hypothesis_set(l, ideal);
    r.details.emplace_back("hypothesis_set", format_set(l, hyp));
    if (hyp != ElementSet::singleton(l.top())) {
        r.status = ClaimStatus::vacuous;
        r.notes.emplace_back("hypothesis fails: the intersection is not {1}");
        return r;
    }
    if (!is_distributive(l)) {
        r.status = ClaimStatus::vacuous;
        r.notes.emplace_back("lattice is not distributive");
        return r;
    }
    ZdGraph g = build_gamma_I(l, ideal);
    GraphInvariants inv = invariants(g);
    r.details.emplace_back("cut_vertices", std::to_string(inv.cut_vertices.size()));
    if (!inv.cut_vertices.empty()) {
        r.status = ClaimStatus::fails;
        r.witness = witness_of(g, {inv.cut_vertices.first()}, "cut vertex");
        return r;
    }
    r.status = ClaimStatus::holds;
    return r;
}

ClaimReport check_P2_1(const Lattice& l, const IdealSet& ideal, RadicalVariant variant)
{
    ClaimReport r{variant == RadicalVariant::contained ? ClaimId::P2_1_contained : ClaimId::P2_1_containing};
    r.notes.emplace_back(variant == RadicalVariant::contained ? "radical over primes P with P subset of I"
                                                              : "radical over primes P with I subset of P");
    if (!admit(l, ideal, r))
        return r;
    RadicalResult rad = radical(l, ideal, variant);
    r.details.emplace_back("family_size", std::to_string(rad.family_size));
    if (!rad.value) {
        r.status = ClaimStatus::vacuous;
        r.notes.emplace_back("no qualifying prime ideal; the intersection is undefined");
        return r;
    }
    r.details.emplace_back("radical", format_set(l, *rad.value));
    if (*rad.value == ideal.members()) {
        r.status = ClaimStatus::holds;
        return r;
    }
    r.status = ClaimStatus::fails;
    r.witness = Witness{rad.value->to_vector(), "radical differs from I"};
    return r;
}

ClaimReport check_T2_3(const Lattice& l, const IdealSet& ideal)
{
    ClaimReport r{ClaimId::T2_3};
    r.notes.emplace_back("finite instance: chi and omega are finite, so (i) and (ii) hold; (iii) is checked");
    if (!admit(l, ideal, r))
        return r;
    ZdGraph g = build_gamma_I(l, ideal);
    GraphInvariants inv = invariants(g);
    r.details.emplace_back("omega", std::to_string(inv.clique_number));
    r.details.emplace_back("chi", std::to_string(inv.chromatic_number));
    bool any = false;
    for (auto variant : {RadicalVariant::contained, RadicalVariant::containing}) {
        auto family = is_finite_intersection_of_primes(l, ideal, variant);
        std::string value = "none";
        if (family) {
            any = true;
            value.clear();
            for (const auto& p : *family)
                value += (value.empty() ? "" : "+") + format_set(l, p.members());
        }
        r.details.emplace_back(std::string("iii_") + to_string(variant), value);
    }
    if (any) {
        r.status = ClaimStatus::holds;
        return r;
    }
    r.status = ClaimStatus::fails;
    r.witness = Witness{ideal.members().to_vector(), "I is not an intersection of qualifying primes"};
    return r;
}

std::optional<std::vector<std::size_t>> gamma0_correction(const Lattice& l)
{
    ZdGraph gamma = build_gamma(l);
    ZdGraph gamma0 = build_gamma_I(l, make_ideal_set(l, ElementSet::singleton(l.bottom())));
    ZdGraph without_zero = induced_subgraph(gamma, gamma.vertex_set() - ElementSet::singleton(l.bottom()));
    return graphs_isomorphic(gamma0, without_zero);
}

ClaimReport check_GAMMA0(const Lattice& l)
{
    ClaimReport r{ClaimId::GAMMA0};
    if (l.size() < 2) {
        r.status = ClaimStatus::vacuous;
        r.notes.emplace_back("one-element lattice");
        return r;
    }
    ZdGraph gamma = build_gamma(l);
    ZdGraph gamma0 = build_gamma_I(l, make_ideal_set(l, ElementSet::singleton(l.bottom())));
    r.details.emplace_back("gamma_vertices", std::to_string(gamma.order()));
    r.details.emplace_back("gamma0_vertices", std::to_string(gamma0.order()));
    r.details.emplace_back("gamma0_iso_gamma_minus_0", yes_no(gamma0_correction(l).has_value()));
    if (gamma0.order() == 0) {
        r.status = ClaimStatus::vacuous;
        r.notes.emplace_back("no non-zero zero divisors: Gamma_{0}(L) is empty");
        return r;
    }
    if (graphs_isomorphic(gamma, gamma0)) {
        r.status = ClaimStatus::holds;
        return r;
    }
    r.status = ClaimStatus::fails;
    r.witness = Witness{gamma.vertex_elements, "Gamma(L) has " + std::to_string(gamma.order())
                                                   + " vertices, Gamma_{0}(L) has " + std::to_string(gamma0.order())};
    return r;
}

ClaimReport check_claim(ClaimId id, const Lattice& l, const IdealSet& ideal)
{
    switch (id) {
    case ClaimId::P1_3:
        return check_P1_3(l, ideal);
    case ClaimId::L1_4:
        return check_L1_4(l, ideal);
    case ClaimId::T1_5a:
        return check_T1_5a(l, ideal);
    case ClaimId::T1_5b:
        return check_T1_5b(l, ideal);
    case ClaimId::CASE4:
        return check_CASE4(l, ideal);
    case ClaimId::P1_6:
        return check_P1_6(l, ideal);
    case ClaimId::P2_1_contained:
        return check_P2_1(l, ideal, RadicalVariant::contained);
    case ClaimId::P2_1_containing:
        return check_P2_1(l, ideal, RadicalVariant::containing);
    case ClaimId::T2_3:
        return check_T2_3(l, ideal);
    case ClaimId::GAMMA0:
        return check_GAMMA0(l);
    }
    throw PreconditionError("unknown claim");
}

// ---------------------------------------------------------------------------
// Witness replay

bool witness_reproduces(const Lattice& l, const IdealSet& ideal, const ClaimReport& report)
{
    if (report.status != ClaimStatus::fails || !report.witness)
        return false;
    const auto& el = report.witness->elements;
    for (Element e : el)
        if (e >= l.size())
            return false;

    if (report.claim == ClaimId::P2_1_contained || report.claim == ClaimId::P2_1_containing) {
        auto variant = report.claim == ClaimId::P2_1_contained ? RadicalVariant::contained : RadicalVariant::containing;
        auto rad = radical(l, ideal, variant);
        return rad.value && *rad.value == ElementSet::from(el) && *rad.value != ideal.members();
    }
    if (report.claim == ClaimId::T2_3) {
        return !is_finite_intersection_of_primes(l, ideal, RadicalVariant::contained)
               && !is_finite_intersection_of_primes(l, ideal, RadicalVariant::containing);
    }
    if (report.claim == ClaimId::GAMMA0) {
        ZdGraph gamma = build_gamma(l);
        ZdGraph gamma0 = build_gamma_I(l, make_ideal_set(l, ElementSet::singleton(l.bottom())));
        return gamma.vertex_elements == el && gamma0.order() > 0 && !graphs_isomorphic(gamma, gamma0);
    }

    // Graph-shaped witnesses: translate elements to vertex positions.
    ZdGraph g = build_gamma_I(l, ideal);
    std::vector<std::size_t> pos;
    for (Element e : el) {
        auto p = g.position_of(e);
        if (!p)
            return false;
        pos.push_back(*p);
    }
    const SimpleGraph& sg = g.graph;
    switch (report.claim) {
    case ClaimId::P1_3: {
        if (pos.size() == 2) {
            auto d = bfs_distances(sg, pos[0])[pos[1]];
            return !d || *d > 3;
        }
        return is_cycle(sg, pos) && pos.size() > 7 && girth(sg).value_or(0) > 7;
    }
    case ClaimId::L1_4: {
        if (pos.size() != 3)
            return false;
        auto [a, x, y] = std::tuple{pos[0], pos[1], pos[2]};
        return a != y && sg.adjacent(a, x) && sg.adjacent(x, y)
               && !is_ideal(l, ideal.members() | ElementSet::singleton(el[1])) && !sg.adjacent(a, y)
               && ((sg.neighbours(a) & sg.neighbours(y)) - ElementSet{a, x, y}).empty();
    }
    case ClaimId::T1_5a: {
        if (pos.size() != 2 || !sg.adjacent(pos[0], pos[1]))
            return false;
        return !is_bridge(sg, pos[0], pos[1]) && !on_short_cycle(sg, pos[0], pos[1]);
    }
    case ClaimId::T1_5b: {
        if (pos.size() != 1 || sg.order() < 3 || !girth(sg))
            return false;
        std::size_t v = pos[0];
        bool all_bridges = true;
        sg.neighbours(v).for_each([&](std::size_t w) { all_bridges = all_bridges && is_bridge(sg, v, w); });
        return sg.degree(v) != 1 && all_bridges;
    }
    case ClaimId::CASE4: {
        if (pos.size() != 4)
            return false;
        auto in_core = [&](std::size_t v) {
            bool any = false;
            sg.neighbours(v).for_each([&](std::size_t w) { any = any || !is_bridge(sg, v, w); });
            return any;
        };
        return sg.degree(pos[0]) == 1 && sg.adjacent(pos[0], pos[1]) && sg.adjacent(pos[1], pos[2])
               && sg.adjacent(pos[2], pos[3]) && !in_core(pos[1]) && !in_core(pos[2]) && in_core(pos[3]);
    }
    case ClaimId::P1_6: {
        if (pos.size() != 1 || hypothesis_set(l, ideal) != ElementSet::singleton(l.top()))
            return false;
        ElementSet rest = ElementSet::universe(sg.order()) - ElementSet::singleton(pos[0]);
        return component_count(sg.induced(rest)) > component_count(sg);
    }
    default:
        return false;
    }
}

// ---------------------------------------------------------------------------
// Output

namespace {

std::string witness_labels(const Lattice& l, const Witness& w)
{
    std::string s = "[";
    for (std::size_t i = 0; i < w.elements.size(); ++i)
        s += (i ? "," : "") + l.label(w.elements[i]);
    return s + "]";
}

} // namespace

std::string format_report_line(const Lattice& l, const ClaimReport& report)
{
    std::ostringstream out;
    out << to_string(report.claim) << ' ' << to_string(report.status);
    for (const auto& [k, v] : report.details)
        out << ' ' << k << '=' << v;
    if (report.witness)
        out << " witness=" << witness_labels(l, *report.witness) << " \"" << report.witness->description << '"';
    return out.str();
}

nlohmann::json report_to_json(const Lattice& l, const ClaimReport& report)
{
    nlohmann::json j;
    j["claim"] = to_string(report.claim);
    j["status"] = to_string(report.status);
    nlohmann::json details = nlohmann::json::array();
    for (const auto& [k, v] : report.details)
        details.push_back({{"key", k}, {"value", v}});
    j["details"] = details;
    if (report.witness) {
        nlohmann::json labels = nlohmann::json::array();
        for (Element e : report.witness->elements)
            labels.push_back(l.label(e));
        j["witness"] = {{"elements", labels}, {"description", report.witness->description}};
    }
    else {
        j["witness"] = nullptr;
    }
    j["notes"] = report.notes;
    return j;
}

} // namespace zdlat
