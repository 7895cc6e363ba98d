#include "zdlat/zdgraph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace zdlat {

std::optional<std::size_t> ZdGraph::position_of(Element e) const
{
    auto it = std::lower_bound(vertex_elements.begin(), vertex_elements.end(), e);
    if (it == vertex_elements.end() || *it != e)
        return std::nullopt;
    return static_cast<std::size_t>(it - vertex_elements.begin());
}

namespace {

/// Shared construction: `adjacent(x, y)` decides edges among `candidates`,
/// and a candidate becomes a vertex iff it has at least one edge.
template <typename Adjacent>
ZdGraph build_from_rule(const Lattice& l, ElementSet candidates, Adjacent adjacent, GraphOrigin origin)
{
    ZdGraph g;
    candidates.for_each([&](Element x) {
        bool has_partner = false;
        candidates.for_each([&](Element y) {
            if (y != x && adjacent(x, y))
                has_partner = true;
        });
        if (has_partner)
            g.vertex_elements.push_back(x);
    });
    g.graph = SimpleGraph(g.vertex_elements.size());
    for (std::size_t i = 0; i < g.vertex_elements.size(); ++i) {
        g.vertex_labels.push_back(l.label(g.vertex_elements[i]));
        for (std::size_t j = i + 1; j < g.vertex_elements.size(); ++j)
            if (adjacent(g.vertex_elements[i], g.vertex_elements[j]))
                g.graph.add_edge(i, j);
    }
    g.origin = origin;
    return g;
}

} // namespace

ZdGraph build_gamma(const Lattice& l)
{
    if (l.size() < 2)
        throw PreconditionError("Gamma(L) needs a lattice with at least two elements");
    const Element zero = l.bottom();
    GraphOrigin origin{GraphOrigin::Rule::classic, l.fingerprint(), ElementSet::singleton(zero), false};
    // x is a vertex when x ^ y = 0 for some non-zero y; 0 qualifies through
    // any non-zero y, including y = 1.
    ZdGraph g;
    for (Element x = 0; x < l.size(); ++x) {
        for (Element y = 0; y < l.size(); ++y) {
            if (y != zero && y != x && l.meet(x, y) == zero) {
                g.vertex_elements.push_back(x);
                break;
            }
        }
    }
    g.graph = SimpleGraph(g.vertex_elements.size());
    for (std::size_t i = 0; i < g.vertex_elements.size(); ++i) {
        g.vertex_labels.push_back(l.label(g.vertex_elements[i]));
        for (std::size_t j = i + 1; j < g.vertex_elements.size(); ++j)
            if (l.meet(g.vertex_elements[i], g.vertex_elements[j]) == zero)
                g.graph.add_edge(i, j);
    }
    g.origin = origin;
    return g;
}

ZdGraph build_gamma_I(const Lattice& l, const IdealSet& ideal)
{
    if (ideal.lattice_size() != l.size() || !ideal.is_ideal())
        throw PreconditionError("Gamma_I(L) needs an ideal of L");
    if (!ideal.is_proper())
        throw PreconditionError("Gamma_I(L) needs a proper ideal (I = L leaves no vertices to consider)");
    const ElementSet in_ideal = ideal.members();
    GraphOrigin origin{GraphOrigin::Rule::ideal, l.fingerprint(), in_ideal, false};
    return build_from_rule(
        l, l.all() - in_ideal, [&](Element x, Element y) { return in_ideal.contains(l.meet(x, y)); }, origin);
}

ZdGraph induced_subgraph(const ZdGraph& g, ElementSet keep)
{
    ElementSet positions;
    keep.for_each([&](Element e) {
        auto p = g.position_of(e);
        if (!p)
            throw PreconditionError("element " + std::to_string(e) + " is not a vertex of the graph");
        positions.insert(*p);
    });
    ZdGraph out;
    out.graph = g.graph.induced(positions);
    positions.for_each([&](std::size_t p) {
        out.vertex_elements.push_back(g.vertex_elements[p]);
        out.vertex_labels.push_back(g.vertex_labels[p]);
    });
    out.origin = g.origin;
    out.origin.restricted = true;
    return out;
}

bool adjacency_matches_origin(const ZdGraph& g, const Lattice& l)
{
    if (g.origin.lattice_fingerprint != l.fingerprint())
        return false;
    for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t j = 0; j < g.order(); ++j) {
            bool expected = i != j && g.origin.ideal.contains(l.meet(g.vertex_elements[i], g.vertex_elements[j]));
            if (g.graph.adjacent(i, j) != expected)
                return false;
        }
    return true;
}

GraphInvariants invariants(const ZdGraph& g) { return compute_invariants(g.graph); }

std::string to_dot(const ZdGraph& g, const std::string& name)
{
    // Plain identifiers and numerals go out bare, anything else is quoted.
    auto quote = [](const std::string& s) {
        auto word = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
        const bool numeral = !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
        const bool ident = !s.empty() && !(s[0] >= '0' && s[0] <= '9') && std::all_of(s.begin(), s.end(), word);
        if (numeral || ident)
            return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\')
                out += '\\';
            out += c;
        }
        return out + "\"";
    };
    std::ostringstream out;
    out << "graph " << quote(name) << " {\n";
    for (const auto& label : g.vertex_labels)
        out << "  " << quote(label) << ";\n";
    for (auto [u, v] : g.graph.edges())
        out << "  " << quote(g.vertex_labels[u]) << " -- " << quote(g.vertex_labels[v]) << ";\n";
    out << "}\n";
    return out.str();
}

std::string format_invariants(const ZdGraph& g, const GraphInvariants& inv)
{
    auto set_of = [&](ElementSet positions) {
        std::vector<std::string> names;
        positions.for_each([&](std::size_t p) { names.push_back(g.vertex_labels[p]); });
        std::sort(names.begin(), names.end());
        std::string s = "{";
        for (std::size_t i = 0; i < names.size(); ++i)
            s += (i ? "," : "") + names[i];
        return s + "}";
    };
    auto edges_of = [&](const std::vector<Edge>& edges) {
        std::string s = "{";
        for (std::size_t i = 0; i < edges.size(); ++i)
            s += (i ? "," : "") + g.vertex_labels[edges[i].first] + "-" + g.vertex_labels[edges[i].second];
        return s + "}";
    };
    std::ostringstream out;
    out << "vertices: " << inv.vertex_count << '\n';
    out << "edges: " << inv.edge_count << '\n';
    out << "connected: " << (inv.connected ? "yes" : "no") << (inv.vertex_count == 0 ? " (empty graph)" : "") << '\n';
    out << "diameter: " << (inv.diameter ? std::to_string(*inv.diameter) : "inf") << '\n';
    out << "girth: " << (inv.girth ? std::to_string(*inv.girth) : "acyclic") << '\n';
    out << "cut_vertices: " << set_of(inv.cut_vertices) << '\n';
    out << "bridges: " << edges_of(inv.bridges) << '\n';
    out << "core_vertices: " << set_of(inv.core_vertices) << '\n';
    out << "core_edges: " << edges_of(inv.core_edges) << '\n';
    out << "omega: " << inv.clique_number << '\n';
    out << "chi: " << inv.chromatic_number << '\n';
    return out.str();
}

} // namespace zdlat
