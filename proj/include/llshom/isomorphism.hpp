#ifndef LLSHOM_ISOMORPHISM_HPP
#define LLSHOM_ISOMORPHISM_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace llshom {

namespace detail {

inline bool extend_isomorphism(const Graph& a, const Graph& b, std::vector<Vertex>& map, std::vector<char>& used,
                               Vertex i)
{
    if (i == a.order()) return true;
    for (Vertex v = 0; v < b.order(); ++v) {
        if (used[v] || a.degree(i) != b.degree(v) || a.has_loop(i) != b.has_loop(v)) continue;
        bool ok = true;
        for (Vertex j = 0; j < i && ok; ++j) ok = a.adjacent(i, j) == b.adjacent(v, map[j]);
        if (!ok) continue;
        map[i] = v;
        used[v] = 1;
        if (extend_isomorphism(a, b, map, used, i + 1)) return true;
        used[v] = 0;
    }
    return false;
}

} // namespace detail

/// Isomorphism a -> b (map[v] is the image of v), found by exhaustive
/// search with degree pruning. Meant for small targets.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
    std::vector<int> da, db;
    for (Vertex v = 0; v < a.order(); ++v) da.push_back(a.degree(v));
    for (Vertex v = 0; v < b.order(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return std::nullopt;
    std::vector<Vertex> map(static_cast<std::size_t>(a.order()), -1);
    std::vector<char> used(static_cast<std::size_t>(b.order()), 0);
    if (!detail::extend_isomorphism(a, b, map, used, 0)) return std::nullopt;
    return map;
}

inline bool isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

/// A graph H0 with H0* isomorphic to a given connected bipartite H, together
/// with the isomorphism H -> associated_bipartite(H0).
struct BaseGraph {
    Graph base;
    std::vector<Vertex> to_associated;
};

namespace detail {

inline bool search_pairing(const Graph& h, const std::vector<Vertex>& left, const std::vector<Vertex>& right,
                           std::vector<int>& pair, std::vector<char>& used, std::size_t i)
{
    if (i == left.size()) return true;
    for (std::size_t r = 0; r < right.size(); ++r) {
        if (used[r]) continue;
        // Symmetry: left[i] ~ right[pair[j]] iff left[j] ~ right[r].
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j)
            ok = h.adjacent(left[i], right[static_cast<std::size_t>(pair[j])]) == h.adjacent(left[j], right[r]);
        if (!ok) continue;
        pair[i] = static_cast<int>(r);
        used[r] = 1;
        if (search_pairing(h, left, right, pair, used, i + 1)) return true;
        used[r] = 0;
    }
    return false;
}

} // namespace detail

/// Recognises H = H0* for a connected H. Pairs class A with class B so that
/// the induced relation u ~ v iff u adj pair(v) is symmetric; loops of H0
/// come from u adj pair(u).
inline std::optional<BaseGraph> find_associated_base(const Graph& h)
{
    if (!is_connected(h) || h.order() == 0) return std::nullopt;
    auto bp = bipartition(h);
    if (!bp || bp->class_a.size() != bp->class_b.size()) return std::nullopt;
    const auto& left = bp->class_a;
    const auto& right = bp->class_b;
    const std::size_t k = left.size();
    std::vector<int> pair(k, -1);
    std::vector<char> used(k, 0);
    if (!detail::search_pairing(h, left, right, pair, used, 0)) return std::nullopt;
    BaseGraph out;
    out.base = Graph(static_cast<int>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j)
            if (h.adjacent(left[i], right[static_cast<std::size_t>(pair[j])]))
                out.base.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    out.to_associated.assign(static_cast<std::size_t>(h.order()), -1);
    const Vertex n0 = static_cast<Vertex>(k);
    for (std::size_t i = 0; i < k; ++i) {
        out.to_associated[left[i]] = static_cast<Vertex>(i);
        out.to_associated[right[static_cast<std::size_t>(pair[i])]] = static_cast<Vertex>(i) + n0;
    }
    return out;
}

} // namespace llshom

#endif // LLSHOM_ISOMORPHISM_HPP
