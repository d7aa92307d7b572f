#ifndef LLSHOM_VERIFIER_HPP
#define LLSHOM_VERIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "instance.hpp"

namespace llshom {

struct HomomorphismCheck {
    bool ok = true;
    std::optional<Edge> bad_edge;          // first source edge whose image is a non-edge
    std::optional<Vertex> bad_list_vertex; // first vertex mapped outside its list
    std::string message;
};

namespace detail {

inline std::optional<std::string> check_totality(const Instance& inst, const Homomorphism& h)
{
    if (static_cast<int>(h.size()) != inst.source.order()) return "mapping does not cover every source vertex";
    for (std::size_t v = 0; v < h.size(); ++v)
        if (h[v] < 0 || h[v] >= inst.target.order())
            return "vertex " + std::to_string(v) + " is mapped outside the target";
    return std::nullopt;
}

} // namespace detail

/// Edges go to edges (loops allowed) and h(v) is in L(v). Vertices are
/// checked before edges, both in index order.
inline HomomorphismCheck is_list_homomorphism(const Instance& inst, const Homomorphism& h)
{
    HomomorphismCheck r;
    if (auto err = detail::check_totality(inst, h)) {
        r.ok = false;
        r.message = *err;
        return r;
    }
    for (Vertex v = 0; v < inst.source.order(); ++v)
        if (!inst.lists[v].contains(h[v])) {
            r.ok = false;
            r.bad_list_vertex = v;
            r.message = "vertex " + std::to_string(v) + " is mapped to " + std::to_string(h[v]) + " outside its list";
            return r;
        }
    for (const Edge& e : inst.source.edges())
        if (!inst.target.adjacent(h[e.u], h[e.v])) {
            r.ok = false;
            r.bad_edge = e;
            r.message = "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " maps to the non-edge " +
                        std::to_string(h[e.u]) + "-" + std::to_string(h[e.v]);
            return r;
        }
    return r;
}

/// Target neighbours of h(v) not hit by h(N(v)); empty iff v is happy
/// (given that h is a homomorphism).
inline VertexSet missing_neighbors(const Instance& inst, const Homomorphism& h, Vertex v)
{
    VertexSet seen;
    for (Vertex w : inst.source.neighbors(v)) seen.insert(h[w]);
    return inst.target.neighbor_set(h[v]) - seen;
}

inline std::vector<Vertex> happy_vertices(const Instance& inst, const Homomorphism& h)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < inst.source.order(); ++v)
        if (missing_neighbors(inst, h, v).empty()) out.push_back(v);
    return out;
}

struct Verdict {
    bool accepted = false;
    std::optional<Vertex> unhappy_vertex;
    std::optional<Vertex> missing_neighbor;
    std::string diagnostic;
};

/// Accepts iff h is a list homomorphism and every vertex is happy.
inline Verdict verify_solution(const Instance& inst, const Homomorphism& h)
{
    Verdict verdict;
    auto hom = is_list_homomorphism(inst, h);
    if (!hom.ok) {
        verdict.diagnostic = hom.message;
        return verdict;
    }
    for (Vertex v = 0; v < inst.source.order(); ++v) {
        VertexSet missing = missing_neighbors(inst, h, v);
        if (!missing.empty()) {
            verdict.unhappy_vertex = v;
            verdict.missing_neighbor = missing.front();
            verdict.diagnostic = "vertex " + std::to_string(v) + " (mapped to " + std::to_string(h[v]) +
                                 ") is unhappy: no neighbour is mapped to " + std::to_string(missing.front());
            return verdict;
        }
    }
    verdict.accepted = true;
    return verdict;
}

} // namespace llshom

#endif // LLSHOM_VERIFIER_HPP
