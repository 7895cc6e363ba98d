#pragma once

#include "zdlat/graph.hpp"
#include "zdlat/ideal.hpp"
#include "zdlat/lattice.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace zdlat {

/// Where a zero-divisor graph came from.
struct GraphOrigin {
    enum class Rule {
        /// Vertices {x : x ^ y = 0 for some y != 0}; the bottom counts.
        classic,
        /// Vertices {x not in I : x ^ y in I for some y not in I, y != x}.
        ideal,
    };
    Rule rule = Rule::ideal;
    std::uint64_t lattice_fingerprint = 0;
    /// The ideal I; {bottom} for the classic rule.
    ElementSet ideal;
    /// Set once the graph has been restricted by induced_subgraph.
    bool restricted = false;
};

/// Zero-divisor graph over a vertex subset of a lattice. Vertex i of `graph`
/// is the lattice element vertex_elements[i]; vertex_elements is increasing.
struct ZdGraph {
    SimpleGraph graph;
    std::vector<Element> vertex_elements;
    std::vector<std::string> vertex_labels;
    GraphOrigin origin;

    std::size_t order() const { return graph.order(); }
    ElementSet vertex_set() const { return ElementSet::from(vertex_elements); }
    /// Graph vertex carrying lattice element `e`, or nullopt.
    std::optional<std::size_t> position_of(Element e) const;
};

/// Gamma(L): vertex set taken literally from the classic rule, so 0 is a
/// vertex whenever L has a non-zero element; edges join distinct x, y with
/// x ^ y = 0. Requires at least two elements.
ZdGraph build_gamma(const Lattice& l);

/// Gamma_I(L). The vertex condition uses "meet in I", matching the adjacency
/// rule; at I = {0} both readings coincide. Throws PreconditionError if I is
/// not a proper ideal of L.
ZdGraph build_gamma_I(const Lattice& l, const IdealSet& ideal);

/// Restriction to the vertices whose lattice elements are in `keep`. Throws
/// PreconditionError if `keep` names an element that is not a vertex.
ZdGraph induced_subgraph(const ZdGraph& g, ElementSet keep);

/// True when the adjacency matrix is exactly what the origin's meet-in-I rule
/// produces on `l`.
bool adjacency_matches_origin(const ZdGraph& g, const Lattice& l);

GraphInvariants invariants(const ZdGraph& g);

/// Isomorphism of the underlying graphs, as a map between vertex positions.
inline std::optional<std::vector<std::size_t>> graphs_isomorphic(const ZdGraph& g1, const ZdGraph& g2)
{
    return graphs_isomorphic(g1.graph, g2.graph);
}

/// Graphviz text, `graph name { ... }`, with lattice labels as node names.
std::string to_dot(const ZdGraph& g, const std::string& name = "zd");

/// Flat `key: value` report with the stable keys connected, diameter, girth,
/// cut_vertices, core_vertices, omega, chi (plus a few extras).
std::string format_invariants(const ZdGraph& g, const GraphInvariants& inv);

} // namespace zdlat
