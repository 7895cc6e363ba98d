#include "zdlat/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace zdlat {

SimpleGraph::SimpleGraph(std::size_t n)
{
    if (n > kMaxElements)
        throw std::invalid_argument("graphs are limited to 64 vertices");
    rows_.assign(n, ElementSet{});
}

SimpleGraph::SimpleGraph(std::size_t n, const std::vector<Edge>& edges) : SimpleGraph(n)
{
    for (auto [u, v] : edges)
        add_edge(u, v);
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v)
{
    if (u >= order() || v >= order())
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v)
        throw std::invalid_argument("self-loops are not allowed");
    rows_[u].insert(v);
    rows_[v].insert(u);
}

std::size_t SimpleGraph::edge_count() const
{
    std::size_t twice = 0;
    for (auto r : rows_)
        twice += r.size();
    return twice / 2;
}

std::vector<Edge> SimpleGraph::edges() const
{
    std::vector<Edge> out;
    for (std::size_t u = 0; u < order(); ++u)
        rows_[u].for_each([&](std::size_t v) {
            if (u < v)
                out.emplace_back(u, v);
        });
    return out;
}

SimpleGraph SimpleGraph::induced(ElementSet keep) const
{
    auto kept = keep.to_vector();
    for (auto v : kept)
        if (v >= order())
            throw std::invalid_argument("induced subgraph names an unknown vertex");
    SimpleGraph out(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = i + 1; j < kept.size(); ++j)
            if (adjacent(kept[i], kept[j]))
                out.add_edge(i, j);
    return out;
}

// ---------------------------------------------------------------------------
// Distances

std::vector<std::optional<std::size_t>> bfs_distances(const SimpleGraph& g, std::size_t source)
{
    std::vector<std::optional<std::size_t>> dist(g.order());
    std::deque<std::size_t> queue{source};
    dist.at(source) = 0;
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        g.neighbours(u).for_each([&](std::size_t v) {
            if (!dist[v]) {
                dist[v] = *dist[u] + 1;
                queue.push_back(v);
            }
        });
    }
    return dist;
}

bool is_connected(const SimpleGraph& g)
{
    if (g.order() == 0)
        return true;
    auto d = bfs_distances(g, 0);
    return std::all_of(d.begin(), d.end(), [](const auto& x) { return x.has_value(); });
}

std::optional<std::size_t> diameter(const SimpleGraph& g)
{
    std::size_t best = 0;
    for (std::size_t s = 0; s < g.order(); ++s) {
        for (const auto& d : bfs_distances(g, s)) {
            if (!d)
                return std::nullopt;
            best = std::max(best, *d);
        }
    }
    return best;
}

std::optional<std::size_t> girth(const SimpleGraph& g)
{
    // From every root, each non-tree edge (u, w) closes a closed walk of
    // length d(u) + d(w) + 1 containing a cycle no longer than that; the
    // minimum over all roots is exact.
    std::optional<std::size_t> best;
    const std::size_t n = g.order();
    for (std::size_t root = 0; root < n; ++root) {
        std::vector<std::optional<std::size_t>> dist(n);
        std::vector<std::size_t> parent(n, n);
        std::deque<std::size_t> queue{root};
        dist[root] = 0;
        while (!queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            g.neighbours(u).for_each([&](std::size_t w) {
                if (!dist[w]) {
                    dist[w] = *dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
                else if (parent[u] != w) {
                    std::size_t len = *dist[u] + *dist[w] + 1;
                    if (!best || len < *best)
                        best = len;
                }
            });
        }
    }
    return best;
}

std::vector<std::size_t> shortest_cycle(const SimpleGraph& g)
{
    // Each edge uv plus a shortest u-v path avoiding it is a cycle; the best
    // such pair is a shortest cycle.
    std::vector<std::size_t> best;
    const std::size_t n = g.order();
    for (auto [u, v] : g.edges()) {
        std::vector<std::size_t> parent(n, n);
        std::vector<bool> seen(n, false);
        std::deque<std::size_t> queue{u};
        seen[u] = true;
        while (!queue.empty() && !seen[v]) {
            auto x = queue.front();
            queue.pop_front();
            g.neighbours(x).for_each([&](std::size_t y) {
                if (seen[y] || (x == u && y == v))
                    return;
                seen[y] = true;
                parent[y] = x;
                queue.push_back(y);
            });
        }
        if (!seen[v])
            continue;
        std::vector<std::size_t> cycle;
        for (std::size_t x = v; x != n; x = parent[x])
            cycle.push_back(x);
        std::reverse(cycle.begin(), cycle.end());
        if (best.empty() || cycle.size() < best.size())
            best = cycle;
    }
    return best;
}

bool is_cycle(const SimpleGraph& g, const std::vector<std::size_t>& cycle)
{
    if (cycle.size() < 3)
        return false;
    ElementSet distinct;
    for (auto v : cycle) {
        if (v >= g.order() || distinct.contains(v))
            return false;
        distinct.insert(v);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
        if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()]))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Articulation points and bridges

CutStructure cut_structure(const SimpleGraph& g)
{
    const std::size_t n = g.order();
    constexpr std::size_t unseen = static_cast<std::size_t>(-1);
    std::vector<std::size_t> disc(n, unseen), low(n, 0);
    std::size_t clock = 0;
    CutStructure out;

    auto dfs = [&](auto&& self, std::size_t u, std::size_t parent) -> void {
        disc[u] = low[u] = clock++;
        std::size_t children = 0;
        g.neighbours(u).for_each([&](std::size_t v) {
            if (disc[v] == unseen) {
                ++children;
                self(self, v, u);
                low[u] = std::min(low[u], low[v]);
                if (parent != unseen && low[v] >= disc[u])
                    out.cut_vertices.insert(u);
                if (low[v] > disc[u])
                    out.bridges.emplace_back(std::min(u, v), std::max(u, v));
            }
            else if (v != parent) {
                low[u] = std::min(low[u], disc[v]);
            }
        });
        if (parent == unseen && children > 1)
            out.cut_vertices.insert(u);
    };
    for (std::size_t s = 0; s < n; ++s)
        if (disc[s] == unseen)
            dfs(dfs, s, unseen);
    std::sort(out.bridges.begin(), out.bridges.end());
    return out;
}

// ---------------------------------------------------------------------------
// Cliques and colourings

ElementSet maximum_clique(const SimpleGraph& g)
{
    ElementSet best;
    auto expand = [&](auto&& self, ElementSet clique, ElementSet candidates) -> void {
        if (candidates.empty()) {
            if (clique.size() > best.size())
                best = clique;
            return;
        }
        while (!candidates.empty()) {
            if (clique.size() + candidates.size() <= best.size())
                return;
            std::size_t v = candidates.first();
            candidates.erase(v);
            ElementSet grown = clique;
            grown.insert(v);
            self(self, grown, candidates & g.neighbours(v));
        }
        if (clique.size() > best.size())
            best = clique;
    };
    expand(expand, ElementSet{}, ElementSet::universe(g.order()));
    return best;
}

namespace {

std::vector<std::size_t> dsatur_greedy(const SimpleGraph& g)
{
    const std::size_t n = g.order();
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> colour(n, none);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = none, pick_sat = 0, pick_deg = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (colour[v] != none)
                continue;
            ElementSet seen;
            g.neighbours(v).for_each([&](std::size_t w) {
                if (colour[w] != none)
                    seen.insert(colour[w]);
            });
            std::size_t sat = seen.size(), deg = g.degree(v);
            if (pick == none || sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        ElementSet used;
        g.neighbours(pick).for_each([&](std::size_t w) {
            if (colour[w] != none)
                used.insert(colour[w]);
        });
        std::size_t c = 0;
        while (used.contains(c))
            ++c;
        colour[pick] = c;
    }
    return colour;
}

} // namespace

std::optional<std::vector<std::size_t>> colour_with(const SimpleGraph& g, std::size_t k)
{
    const std::size_t n = g.order();
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> colour(n, none);
    if (n == 0)
        return colour;
    if (k == 0)
        return std::nullopt;

    auto solve = [&](auto&& self, std::size_t coloured, std::size_t colours_used) -> bool {
        if (coloured == n)
            return true;
        // Most saturated uncoloured vertex first.
        std::size_t pick = none, pick_sat = 0;
        ElementSet pick_used;
        for (std::size_t v = 0; v < n; ++v) {
            if (colour[v] != none)
                continue;
            ElementSet used;
            g.neighbours(v).for_each([&](std::size_t w) {
                if (colour[w] != none)
                    used.insert(colour[w]);
            });
            if (pick == none || used.size() > pick_sat) {
                pick = v;
                pick_sat = used.size();
                pick_used = used;
            }
        }
        // Colours beyond the first unused one are interchangeable.
        std::size_t limit = std::min(k, colours_used + 1);
        for (std::size_t c = 0; c < limit; ++c) {
            if (pick_used.contains(c))
                continue;
            colour[pick] = c;
            if (self(self, coloured + 1, std::max(colours_used, c + 1)))
                return true;
        }
        colour[pick] = none;
        return false;
    };
    if (!solve(solve, 0, 0))
        return std::nullopt;
    return colour;
}

std::size_t chromatic_number(const SimpleGraph& g)
{
    if (g.order() == 0)
        return 0;
    auto greedy = dsatur_greedy(g);
    std::size_t upper = *std::max_element(greedy.begin(), greedy.end()) + 1;
    std::size_t lower = maximum_clique(g).size();
    for (std::size_t k = lower; k < upper; ++k)
        if (colour_with(g, k))
            return k;
    return upper;
}

GraphInvariants compute_invariants(const SimpleGraph& g)
{
    GraphInvariants inv;
    inv.vertex_count = g.order();
    inv.edge_count = g.edge_count();
    inv.connected = is_connected(g);
    inv.diameter = diameter(g);
    inv.girth = girth(g);
    auto cuts = cut_structure(g);
    inv.cut_vertices = cuts.cut_vertices;
    inv.bridges = cuts.bridges;
    for (const Edge& e : g.edges()) {
        if (std::binary_search(inv.bridges.begin(), inv.bridges.end(), e))
            continue;
        inv.core_edges.push_back(e);
        inv.core_vertices.insert(e.first);
        inv.core_vertices.insert(e.second);
    }
    inv.clique_number = maximum_clique(g).size();
    inv.chromatic_number = chromatic_number(g);
    for (std::size_t v = 0; v < g.order(); ++v)
        inv.degrees.push_back(g.degree(v));
    return inv;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

/// Degree plus the sorted degrees of the neighbours, folded to one word.
std::vector<std::uint64_t> vertex_signatures(const SimpleGraph& g)
{
    std::vector<std::uint64_t> sig(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) {
        std::vector<std::size_t> nd;
        g.neighbours(v).for_each([&](std::size_t w) { nd.push_back(g.degree(w)); });
        std::sort(nd.begin(), nd.end());
        std::uint64_t h = g.degree(v);
        for (auto d : nd)
            h = h * 1000003ULL + d + 1;
        sig[v] = h;
    }
    return sig;
}

} // namespace

std::optional<std::vector<std::size_t>> graphs_isomorphic(const SimpleGraph& g1, const SimpleGraph& g2)
{
    const std::size_t n = g1.order();
    if (n != g2.order() || g1.edge_count() != g2.edge_count())
        return std::nullopt;
    auto s1 = vertex_signatures(g1), s2 = vertex_signatures(g2);
    {
        auto a = s1, b = s2;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            return std::nullopt;
    }

    // Map high-degree vertices first, then grow along neighbourhoods.
    std::vector<std::size_t> order;
    ElementSet placed;
    while (order.size() < n) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (placed.contains(v))
                continue;
            bool attached = g1.neighbours(v).intersects(placed);
            bool pick_attached = pick < n && g1.neighbours(pick).intersects(placed);
            if (pick == n || (attached && !pick_attached)
                || (attached == pick_attached && g1.degree(v) > g1.degree(pick)))
                pick = v;
        }
        order.push_back(pick);
        placed.insert(pick);
    }

    std::vector<std::size_t> image(n, n);
    ElementSet used;
    auto extend = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == n)
            return true;
        std::size_t v = order[depth];
        for (std::size_t w = 0; w < n; ++w) {
            if (used.contains(w) || s1[v] != s2[w])
                continue;
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                std::size_t p = order[k];
                ok = g1.adjacent(v, p) == g2.adjacent(w, image[p]);
            }
            if (!ok)
                continue;
            image[v] = w;
            used.insert(w);
            if (self(self, depth + 1))
                return true;
            used.erase(w);
        }
        image[v] = n;
        return false;
    };
    if (!extend(extend, 0))
        return std::nullopt;
    return image;
}

} // namespace zdlat
