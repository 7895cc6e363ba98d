#pragma once

#include "zdlat/element_set.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zdlat {

using Edge = std::pair<std::size_t, std::size_t>; ///< (u, v) with u < v

/// Simple undirected graph on vertices 0..n-1 (n <= 64), adjacency stored as
/// one bit row per vertex.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t n);
    /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
    SimpleGraph(std::size_t n, const std::vector<Edge>& edges);

    std::size_t order() const { return rows_.size(); }
    ElementSet neighbours(std::size_t v) const { return rows_.at(v); }
    bool adjacent(std::size_t u, std::size_t v) const { return rows_.at(u).contains(v); }
    std::size_t degree(std::size_t v) const { return rows_.at(v).size(); }
    std::size_t edge_count() const;

    void add_edge(std::size_t u, std::size_t v);

    /// Edges with u < v, sorted.
    std::vector<Edge> edges() const;

    /// Subgraph induced on `keep`, vertices renumbered in increasing order.
    SimpleGraph induced(ElementSet keep) const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    std::vector<ElementSet> rows_;
};

/// Exact structural invariants of a graph.
struct GraphInvariants {
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    /// The empty graph counts as connected.
    bool connected = true;
    /// Absent when the graph is disconnected (infinite diameter).
    std::optional<std::size_t> diameter;
    /// Absent when the graph is acyclic.
    std::optional<std::size_t> girth;
    ElementSet cut_vertices;
    std::vector<Edge> bridges;
    ElementSet core_vertices;
    std::vector<Edge> core_edges;
    std::size_t clique_number = 0;
    std::size_t chromatic_number = 0;
    std::vector<std::size_t> degrees;

    bool has_cycle() const { return girth.has_value(); }
};

GraphInvariants compute_invariants(const SimpleGraph& g);

/// Shortest-path distances from `source`; unreachable vertices get nullopt.
std::vector<std::optional<std::size_t>> bfs_distances(const SimpleGraph& g, std::size_t source);

std::optional<std::size_t> diameter(const SimpleGraph& g);
std::optional<std::size_t> girth(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);
/// Vertices of one shortest cycle in traversal order; empty when acyclic.
std::vector<std::size_t> shortest_cycle(const SimpleGraph& g);
/// True when `cycle` lists distinct vertices joined consecutively (and last
/// to first) by edges, with at least three vertices.
bool is_cycle(const SimpleGraph& g, const std::vector<std::size_t>& cycle);

struct CutStructure {
    ElementSet cut_vertices;
    std::vector<Edge> bridges;
};
/// Articulation points and bridges by DFS low-link.
CutStructure cut_structure(const SimpleGraph& g);

/// Maximum clique by branch and bound; returns the vertex set.
ElementSet maximum_clique(const SimpleGraph& g);
/// Exact chromatic number. Lower bound from the clique, upper bound from a
/// DSATUR greedy colouring, then exact k-colourability search in between.
std::size_t chromatic_number(const SimpleGraph& g);
/// A proper colouring with `k` colours, if one exists.
std::optional<std::vector<std::size_t>> colour_with(const SimpleGraph& g, std::size_t k);

/// Isomorphism g1 -> g2 (result[v] is the image of v) by backtracking with
/// degree pruning.
std::optional<std::vector<std::size_t>> graphs_isomorphic(const SimpleGraph& g1, const SimpleGraph& g2);

} // namespace zdlat
