#ifndef LLSHOM_TESTS_ORACLES_HPP
#define LLSHOM_TESTS_ORACLES_HPP

// Deliberately naive reference implementations, written from the
// definitions only and sharing no code with the library under test
// beyond the plain Graph container.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "llshom/graph.hpp"
#include "llshom/instance.hpp"

namespace oracle {

using llshom::Graph;
using llshom::Homomorphism;
using llshom::Instance;
using llshom::Vertex;

/// N(v) as a sorted vector, read from the edge list.
inline std::vector<Vertex> neighbourhood(const Graph& g, Vertex v)
{
    std::set<Vertex> out;
    for (const auto& e : g.edges()) {
        if (e.u == v) out.insert(e.v);
        if (e.v == v) out.insert(e.u);
    }
    return {out.begin(), out.end()};
}

inline bool edge(const Graph& g, Vertex a, Vertex b)
{
    for (const auto& e : g.edges())
        if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return true;
    return false;
}

inline bool is_hom(const Instance& inst, const Homomorphism& h)
{
    for (Vertex v = 0; v < inst.source.order(); ++v)
        if (!inst.lists[v].contains(h[v])) return false;
    for (const auto& e : inst.source.edges())
        if (!edge(inst.target, h[e.u], h[e.v])) return false;
    return true;
}

inline bool happy(const Instance& inst, const Homomorphism& h, Vertex v)
{
    std::set<Vertex> image;
    for (Vertex w : neighbourhood(inst.source, v)) image.insert(h[w]);
    const auto want = neighbourhood(inst.target, h[v]);
    return std::vector<Vertex>(image.begin(), image.end()) == want;
}

inline bool is_lls(const Instance& inst, const Homomorphism& h)
{
    if (!is_hom(inst, h)) return false;
    for (Vertex v = 0; v < inst.source.order(); ++v)
        if (!happy(inst, h, v)) return false;
    return true;
}

/// Depth-first over list values in vertex order, checking each edge once
/// both ends are set and happiness only on complete maps.
inline std::optional<Homomorphism> solve(const Instance& inst)
{
    const int n = inst.source.order();
    std::vector<std::vector<Vertex>> earlier(static_cast<std::size_t>(n));
    for (const auto& e : inst.source.edges()) {
        const Vertex lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
        earlier[hi].push_back(lo);
    }
    Homomorphism h(static_cast<std::size_t>(n), -1);
    auto rec = [&](auto&& self, Vertex v) -> bool {
        if (v == n) return is_lls(inst, h);
        for (Vertex a : inst.lists[v].elements()) {
            bool ok = true;
            for (Vertex w : earlier[v]) ok = ok && inst.target.adjacent(a, w == v ? a : h[w]);
            if (!ok) continue;
            h[v] = a;
            if (self(self, v + 1)) return true;
        }
        h[v] = -1;
        return false;
    };
    if (rec(rec, 0)) return h;
    return std::nullopt;
}

inline bool has_odd_cycle(const Graph& g)
{
    // Two-colouring by repeated relaxation over the edge list.
    const int n = g.order();
    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    for (Vertex s = 0; s < n; ++s) {
        if (colour[s] >= 0) continue;
        colour[s] = 0;
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto& e : g.edges()) {
                if (e.u == e.v) return true;
                int cu = colour[e.u], cv = colour[e.v];
                if (cu >= 0 && cv >= 0 && cu == cv) return true;
                if (cu >= 0 && cv < 0) colour[e.v] = 1 - cu, changed = true;
                if (cv >= 0 && cu < 0) colour[e.u] = 1 - cv, changed = true;
            }
        }
    }
    return false;
}

/// Induced copy of `f` in `g` by trying every injective map.
inline bool contains_induced(const Graph& g, const Graph& f)
{
    const int n = g.order(), k = f.order();
    if (k > n) return false;
    std::vector<Vertex> pick(static_cast<std::size_t>(k));
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == k) return true;
        for (Vertex v = 0; v < n; ++v) {
            if (used[v]) continue;
            bool ok = edge(g, v, v) == edge(f, i, i);
            for (int j = 0; j < i && ok; ++j) ok = edge(g, v, pick[j]) == edge(f, i, j);
            if (!ok) continue;
            used[v] = 1;
            pick[i] = v;
            if (self(self, i + 1)) return true;
            used[v] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

/// Product edge predicate: (a,b)~(c,d) iff a~c in G and b~d in H.
inline bool product_edge(const Graph& g, const Graph& h, std::pair<Vertex, Vertex> x, std::pair<Vertex, Vertex> y)
{
    return edge(g, x.first, y.first) && edge(h, x.second, y.second);
}

/// Shortest cycle length by trying every simple cycle from each start;
/// tiny graphs only. Returns 0 for forests.
inline int girth(const Graph& g)
{
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        if (edge(g, v, v)) return 1;
    const int n = g.order();
    std::vector<char> on(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, Vertex start, Vertex v, int len) -> void {
        for (Vertex w : neighbourhood(g, v)) {
            if (w == start && len >= 3) {
                if (best == 0 || len < best) best = len;
                continue;
            }
            if (on[w] || w < start) continue;
            on[w] = 1;
            self(self, start, w, len + 1);
            on[w] = 0;
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        on[s] = 1;
        rec(rec, s, s, 1);
        on[s] = 0;
    }
    return best;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p)
{
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

} // namespace oracle

#endif // LLSHOM_TESTS_ORACLES_HPP
