#ifndef LLSHOM_GRAPH_HPP
#define LLSHOM_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vertex_set.hpp"

namespace llshom {

struct Edge {
    Vertex u;
    Vertex v;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite undirected graph on vertices 0..n-1. Loops are allowed and are
/// stored as self-membership in the neighbour set, so N(v) contains v exactly
/// when v carries a loop.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<std::size_t>(check_order(n))) {}

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t size() const { return edges_.size(); }

    /// Edges in insertion order with their original orientation.
    const std::vector<Edge>& edges() const { return edges_; }

    /// Adds {u,v}; returns false (and changes nothing) if the edge exists.
    bool add_edge(Vertex u, Vertex v)
    {
        check_vertex(u);
        check_vertex(v);
        auto& nu = adj_[u];
        auto it = std::lower_bound(nu.begin(), nu.end(), v);
        if (it != nu.end() && *it == v) return false;
        nu.insert(it, v);
        if (u != v) {
            auto& nv = adj_[v];
            nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
        }
        edges_.push_back({u, v});
        return true;
    }

    Vertex add_vertex()
    {
        adj_.emplace_back();
        return order() - 1;
    }

    bool adjacent(Vertex u, Vertex v) const
    {
        const auto& nu = adj_[u];
        return std::binary_search(nu.begin(), nu.end(), v);
    }

    bool has_loop(Vertex v) const { return adjacent(v, v); }

    /// Sorted neighbour list.
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }

    /// |N(v)|; a loop contributes v once.
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    bool has_loops() const
    {
        for (Vertex v = 0; v < order(); ++v)
            if (has_loop(v)) return true;
        return false;
    }

    /// Neighbourhood as a bitmask; only for graphs with at most 64 vertices.
    VertexSet neighbor_set(Vertex v) const
    {
        VertexSet s;
        for (Vertex w : adj_[v]) s.insert(w);
        return s;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    static int check_order(int n)
    {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        return n;
    }

    void check_vertex(Vertex v) const
    {
        if (v < 0 || v >= order()) throw std::out_of_range("vertex index out of range");
    }

    std::vector<std::vector<Vertex>> adj_;
    std::vector<Edge> edges_;
};

struct Bipartition {
    std::vector<Vertex> class_a;
    std::vector<Vertex> class_b;
    std::vector<std::uint8_t> side; // 0 for class_a, 1 for class_b

    bool in_a(Vertex v) const { return side[v] == 0; }
};

/// 2-colouring of a loopless bipartite graph; the lowest-index vertex of each
/// component lands in class_a. Empty optional when an odd closed walk exists.
inline std::optional<Bipartition> bipartition(const Graph& g)
{
    const int n = g.order();
    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    std::deque<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        if (colour[s] != -1) continue;
        colour[s] = 0;
        queue.push_back(s);
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(v)) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    queue.push_back(w);
                } else if (colour[w] == colour[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition bp;
    bp.side.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        bp.side[v] = static_cast<std::uint8_t>(colour[v]);
        (colour[v] == 0 ? bp.class_a : bp.class_b).push_back(v);
    }
    return bp;
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

/// Connected components, each sorted ascending, ordered by least vertex.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g)
{
    const int n = g.order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<Vertex>> comps;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

/// Subgraph induced by `vertices` (in the given order); vertex i of the
/// result is vertices[i].
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices)
{
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
    Graph h(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : g.neighbors(vertices[i])) {
            int j = index[w];
            if (j >= static_cast<int>(i)) h.add_edge(static_cast<Vertex>(i), j);
        }
    return h;
}

inline int max_degree(const Graph& g)
{
    int d = 0;
    for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
    return d;
}

inline constexpr int infinite_girth = std::numeric_limits<int>::max();

/// Length of a shortest cycle; loops count as cycles of length 1.
/// Returns infinite_girth for forests. Stops early once a cycle of length
/// <= `stop_at` is known.
inline int girth(const Graph& g, int stop_at = 0)
{
    const int n = g.order();
    for (Vertex v = 0; v < n; ++v)
        if (g.has_loop(v)) return 1;
    int best = infinite_girth;
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> touched;
    std::deque<Vertex> queue;
    for (Vertex s = 0; s < n && best > stop_at; ++s) {
        for (Vertex t : touched) dist[t] = -1;
        touched.clear();
        dist[s] = 0;
        parent[s] = -1;
        touched.push_back(s);
        queue.assign(1, s);
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            // Cycles closed from here on are at least 2*dist[v] long.
            if (best != infinite_girth && 2 * dist[v] >= best) break;
            for (Vertex w : g.neighbors(v)) {
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    touched.push_back(w);
                    queue.push_back(w);
                } else if (w != parent[v]) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

/// True iff every cycle has length >= p. BFS from each vertex is cut at
/// depth (p-1)/2, which suffices to close any shorter cycle through it.
inline bool girth_at_least(const Graph& g, int p)
{
    if (p <= 0) return true;
    const int n = g.order();
    for (Vertex v = 0; v < n; ++v)
        if (g.has_loop(v)) return p <= 1;
    const int depth = (p - 1) / 2;
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> touched;
    std::deque<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        for (Vertex t : touched) dist[t] = -1;
        touched.clear();
        dist[s] = 0;
        parent[s] = -1;
        touched.push_back(s);
        queue.assign(1, s);
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            if (dist[v] > depth) break;
            for (Vertex w : g.neighbors(v)) {
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    touched.push_back(w);
                    queue.push_back(w);
                } else if (w != parent[v] && dist[v] + dist[w] + 1 < p) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Direct (categorical) product. Vertex (a,b) has index a*|V(H)|+b.
struct ProductGraph {
    Graph graph;
    int right_order = 0;

    Vertex index(Vertex a, Vertex b) const { return a * right_order + b; }
    std::pair<Vertex, Vertex> pair(Vertex x) const { return {x / right_order, x % right_order}; }
};

inline ProductGraph direct_product(const Graph& g, const Graph& h)
{
    ProductGraph p;
    p.right_order = h.order();
    p.graph = Graph(g.order() * h.order());
    for (Vertex u1 = 0; u1 < g.order(); ++u1)
        for (Vertex v1 = 0; v1 < h.order(); ++v1)
            for (Vertex u2 : g.neighbors(u1))
                for (Vertex v2 : h.neighbors(v1)) {
                    Vertex a = p.index(u1, v1), b = p.index(u2, v2);
                    if (a <= b) p.graph.add_edge(a, b);
                }
    return p;
}

/// H* = H x K2: vertex v' is v, vertex v'' is v + |V(H)|; edges u'v'' for uv in E(H).
struct AssociatedBipartite {
    Graph graph;
    int base_order = 0;

    Vertex prime(Vertex v) const { return v; }
    Vertex double_prime(Vertex v) const { return v + base_order; }
    Vertex base(Vertex x) const { return x % base_order; }
    bool is_prime(Vertex x) const { return x < base_order; }
};

inline AssociatedBipartite associated_bipartite(const Graph& h)
{
    AssociatedBipartite s;
    s.base_order = h.order();
    s.graph = Graph(2 * h.order());
    for (const Edge& e : h.edges()) {
        s.graph.add_edge(s.prime(e.u), s.double_prime(e.v));
        if (e.u != e.v) s.graph.add_edge(s.prime(e.v), s.double_prime(e.u));
    }
    return s;
}

namespace graphs {

inline Graph path(int t)
{
    Graph g(t);
    for (Vertex i = 0; i + 1 < t; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle(int t)
{
    Graph g = path(t);
    if (t >= 3) g.add_edge(t - 1, 0);
    return g;
}

inline Graph complete(int t)
{
    Graph g(t);
    for (Vertex i = 0; i < t; ++i)
        for (Vertex j = i + 1; j < t; ++j) g.add_edge(i, j);
    return g;
}

/// K_{1,k} with centre 0.
inline Graph star(int k)
{
    Graph g(k + 1);
    for (Vertex i = 1; i <= k; ++i) g.add_edge(0, i);
    return g;
}

/// One vertex with a loop.
inline Graph looped_vertex()
{
    Graph g(1);
    g.add_edge(0, 0);
    return g;
}

/// An edge 0-1 with a loop at 0 (K2 with one loop).
inline Graph edge_one_loop()
{
    Graph g(2);
    g.add_edge(0, 1);
    g.add_edge(0, 0);
    return g;
}

/// An edge 0-1 with loops at both ends.
inline Graph edge_two_loops()
{
    Graph g(2);
    g.add_edge(0, 1);
    g.add_edge(0, 0);
    g.add_edge(1, 1);
    return g;
}

/// S_{a,b,c}: centre 0, then the three arms in order, each listed outward.
inline Graph subdivided_claw(int a, int b, int c)
{
    Graph g(1 + a + b + c);
    Vertex next = 1;
    for (int len : {a, b, c}) {
        Vertex prev = 0;
        for (int i = 0; i < len; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
    }
    return g;
}

/// Disjoint union, vertices of `b` shifted by |V(a)|.
inline Graph disjoint_union(const Graph& a, const Graph& b)
{
    Graph g(a.order() + b.order());
    for (const Edge& e : a.edges()) g.add_edge(e.u, e.v);
    for (const Edge& e : b.edges()) g.add_edge(e.u + a.order(), e.v + a.order());
    return g;
}

} // namespace graphs

} // namespace llshom

#endif // LLSHOM_GRAPH_HPP
