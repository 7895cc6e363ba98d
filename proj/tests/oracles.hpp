#pragma once

// Slow, obviously-correct reference implementations used only by the tests.
// None of these call the library's algorithms; they take plain adjacency
// masks or relation matrices.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Mask = std::uint32_t;

// ---------------------------------------------------------------- lattices

/// Order relation as one bit row per element: leq[a] has bit b iff a <= b.
using Order = std::vector<Mask>;

inline bool is_lattice(const Order& leq)
{
    const int n = static_cast<int>(leq.size());
    // Every pair needs a least upper bound and a greatest lower bound.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Mask upper = leq[a] & leq[b];
            int lubs = 0;
            for (int c = 0; c < n; ++c)
                if ((upper >> c & 1) && (leq[c] & upper) == upper)
                    ++lubs;
            if (lubs != 1)
                return false;
            int glbs = 0;
            for (int c = 0; c < n; ++c) {
                bool lower = (leq[c] >> a & 1) && (leq[c] >> b & 1);
                if (!lower)
                    continue;
                bool greatest = true;
                for (int d = 0; d < n; ++d)
                    if ((leq[d] >> a & 1) && (leq[d] >> b & 1) && !(leq[d] >> c & 1))
                        greatest = false;
                if (greatest)
                    ++glbs;
            }
            if (glbs != 1)
                return false;
        }
    return true;
}

/// Smallest relation code over all relabellings.
inline std::uint64_t canonical_order(const Order& leq)
{
    const int n = static_cast<int>(leq.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                code = code << 1 | (leq[perm[a]] >> perm[b] & 1);
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// Isomorphism classes of n-element lattices, by scanning every relation on
/// the n-2 inner elements (bottom and top fixed) for a partial order and
/// deduplicating with canonical_order. Practical for n <= 6.
inline std::set<std::uint64_t> lattice_classes(int n)
{
    std::set<std::uint64_t> classes;
    if (n == 1) {
        classes.insert(canonical_order({1}));
        return classes;
    }
    const int m = n - 2;
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (a != b)
                slots.emplace_back(a, b);
    for (std::uint64_t rel = 0; rel < (std::uint64_t{1} << slots.size()); ++rel) {
        std::vector<std::vector<bool>> lt(m, std::vector<bool>(m, false));
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (rel >> i & 1)
                lt[slots[i].first][slots[i].second] = true;
        bool ok = true;
        for (int a = 0; a < m && ok; ++a)
            for (int b = 0; b < m && ok; ++b) {
                if (lt[a][b] && lt[b][a])
                    ok = false;
                for (int c = 0; c < m && ok; ++c)
                    if (lt[a][b] && lt[b][c] && !lt[a][c])
                        ok = false;
            }
        if (!ok)
            continue;
        // Element 0 is bottom, element n-1 is top, inner i is element i+1.
        Order leq(n, 0);
        for (int x = 0; x < n; ++x) {
            leq[0] |= Mask{1} << x;
            leq[x] |= Mask{1} << (n - 1);
            leq[x] |= Mask{1} << x;
        }
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                if (lt[a][b])
                    leq[a + 1] |= Mask{1} << (b + 1);
        if (is_lattice(leq))
            classes.insert(canonical_order(leq));
    }
    return classes;
}

// ------------------------------------------------------------------ graphs

/// Graph as adjacency rows.
using Graph = std::vector<Mask>;

inline Graph graph_from_code(int n, std::uint64_t code)
{
    Graph g(n, 0);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (code >> bit & 1) {
                g[u] |= Mask{1} << v;
                g[v] |= Mask{1} << u;
            }
    return g;
}

inline std::uint64_t canonical_graph(const Graph& g)
{
    const int n = static_cast<int>(g.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                code = code << 1 | (g[perm[u]] >> perm[v] & 1);
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// One graph per isomorphism class with exactly n vertices, n <= 7, built by
/// adding a vertex with every possible neighbourhood to the (n-1)-classes.
/// Cached across calls.
inline const std::vector<Graph>& graph_classes(int n)
{
    static std::vector<std::vector<Graph>> cache;
    if (cache.empty())
        cache.push_back({Graph{}});
    while (static_cast<int>(cache.size()) <= n) {
        const int k = static_cast<int>(cache.size());
        std::vector<Graph> next;
        std::set<std::uint64_t> seen;
        for (const Graph& base : cache[k - 1])
            for (Mask nb = 0; nb < (Mask{1} << (k - 1)); ++nb) {
                Graph g = base;
                g.push_back(nb);
                for (int u = 0; u < k - 1; ++u)
                    if (nb >> u & 1)
                        g[u] |= Mask{1} << (k - 1);
                if (seen.insert(canonical_graph(g)).second)
                    next.push_back(g);
            }
        cache.push_back(std::move(next));
    }
    return cache[n];
}

inline int popcount(Mask m) { return __builtin_popcount(m); }

inline bool is_clique(const Graph& g, Mask s)
{
    for (int v = 0; v < static_cast<int>(g.size()); ++v)
        if ((s >> v & 1) && (g[v] & s) != (s & ~(Mask{1} << v)))
            return false;
    return true;
}

/// Largest clique by scanning every vertex subset.
inline int clique_number(const Graph& g)
{
    int best = 0;
    for (Mask s = 0; s < (Mask{1} << g.size()); ++s)
        if (popcount(s) > best && is_clique(g, s))
            best = popcount(s);
    return best;
}

/// Whether some assignment of at most k colours is proper. Enumerates every
/// colouring up to renaming the colours (restricted growth strings).
inline bool k_colourable(const Graph& g, int k)
{
    const int n = static_cast<int>(g.size());
    if (n == 0)
        return true;
    if (k == 0)
        return false;
    std::vector<int> colour(n, 0);
    while (true) {
        bool proper = true;
        for (int u = 0; u < n && proper; ++u)
            for (int v = u + 1; v < n; ++v)
                if ((g[u] >> v & 1) && colour[u] == colour[v]) {
                    proper = false;
                    break;
                }
        if (proper)
            return true;
        // Next restricted growth string with values below k.
        int i = n - 1;
        for (; i > 0; --i) {
            int prefix_max = *std::max_element(colour.begin(), colour.begin() + i);
            if (colour[i] <= prefix_max && colour[i] + 1 < k)
                break;
        }
        if (i == 0)
            return false;
        ++colour[i];
        std::fill(colour.begin() + i + 1, colour.end(), 0);
    }
}

/// Chromatic number by covering the vertex set with independent sets,
/// dynamic programming over subsets.
inline int chromatic_number(const Graph& g)
{
    const int n = static_cast<int>(g.size());
    const Mask full = (Mask{1} << n) - 1;
    std::vector<bool> independent(full + 1, false);
    for (Mask s = 0; s <= full; ++s) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if ((s >> v & 1) && (g[v] & s))
                ok = false;
        independent[s] = ok;
    }
    std::vector<int> best(full + 1, n + 1);
    best[0] = 0;
    for (Mask s = 1; s <= full; ++s)
        for (Mask t = s; t; t = (t - 1) & s)
            if (independent[t])
                best[s] = std::min(best[s], best[s & ~t] + 1);
    return best[full];
}

struct CycleUnion {
    Mask vertices = 0;
    std::vector<std::pair<int, int>> edges;
};

/// Union of every simple cycle, found by enumerating each cycle from its
/// smallest vertex along all simple paths through larger vertices.
inline CycleUnion cycle_union(const Graph& g)
{
    const int n = static_cast<int>(g.size());
    std::vector<Mask> on_cycle(n, 0);
    std::vector<int> path;
    auto record = [&] {
        for (std::size_t i = 0; i < path.size(); ++i) {
            int a = path[i], b = path[(i + 1) % path.size()];
            on_cycle[a] |= Mask{1} << b;
            on_cycle[b] |= Mask{1} << a;
        }
    };
    auto extend = [&](auto&& self, int root, Mask seen) -> void {
        const int x = path.back();
        for (int y = root + 1; y < n; ++y) {
            if (!(g[x] >> y & 1) || (seen >> y & 1))
                continue;
            path.push_back(y);
            if (path.size() >= 3 && (g[y] >> root & 1))
                record();
            self(self, root, seen | Mask{1} << y);
            path.pop_back();
        }
    };
    for (int r = 0; r < n; ++r) {
        path = {r};
        extend(extend, r, Mask{1} << r);
    }
    CycleUnion out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (on_cycle[u] >> v & 1) {
                out.edges.emplace_back(u, v);
                out.vertices |= Mask{1} << u | Mask{1} << v;
            }
    return out;
}

/// All-pairs distances by Floyd-Warshall; -1 for unreachable.
inline std::vector<std::vector<int>> distances(const Graph& g)
{
    const int n = static_cast<int>(g.size());
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int u = 0; u < n; ++u) {
        d[u][u] = 0;
        for (int v = 0; v < n; ++v)
            if (g[u] >> v & 1)
                d[u][v] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    for (auto& row : d)
        for (int& x : row)
            if (x >= inf)
                x = -1;
    return d;
}

/// Shortest cycle length by trying every cyclic vertex sequence up to length
/// n; 0 when acyclic. Practical for n <= 8.
inline int girth(const Graph& g)
{
    const int n = static_cast<int>(g.size());
    int best = 0;
    std::vector<int> path;
    // Cycles are rooted at their smallest vertex.
    auto extend = [&](auto&& self, int root, Mask seen) -> void {
        int x = path.back();
        int len = static_cast<int>(path.size());
        if (best && len >= best)
            return;
        for (int y = root + 1; y < n; ++y) {
            if (!(g[x] >> y & 1) || (seen >> y & 1))
                continue;
            path.push_back(y);
            if (len + 1 >= 3 && (g[y] >> root & 1))
                best = best ? std::min(best, len + 1) : len + 1;
            self(self, root, seen | Mask{1} << y);
            path.pop_back();
        }
    };
    for (int r = 0; r < n; ++r) {
        path = {r};
        extend(extend, r, Mask{1} << r);
    }
    return best;
}

/// Cut vertex: deleting it increases the number of components.
inline int components(const Graph& g, Mask removed)
{
    const int n = static_cast<int>(g.size());
    Mask seen = removed;
    int count = 0;
    for (int s = 0; s < n; ++s) {
        if (seen >> s & 1)
            continue;
        ++count;
        std::vector<int> todo{s};
        seen |= Mask{1} << s;
        while (!todo.empty()) {
            int x = todo.back();
            todo.pop_back();
            for (int y = 0; y < n; ++y)
                if ((g[x] >> y & 1) && !(seen >> y & 1)) {
                    seen |= Mask{1} << y;
                    todo.push_back(y);
                }
        }
    }
    return count;
}

inline Mask cut_vertices(const Graph& g)
{
    Mask out = 0;
    const int base = components(g, 0);
    for (int v = 0; v < static_cast<int>(g.size()); ++v)
        if (components(g, Mask{1} << v) > base)
            out |= Mask{1} << v;
    return out;
}

inline bool isomorphic(const Graph& a, const Graph& b)
{
    return a.size() == b.size() && canonical_graph(a) == canonical_graph(b);
}

} // namespace oracle
