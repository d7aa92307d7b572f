#ifndef LLSHOM_INDUCED_HPP
#define LLSHOM_INDUCED_HPP

#include <optional>
#include <vector>

#include "graph.hpp"
#include "pattern.hpp"

namespace llshom {

namespace detail {

class InducedSearch {
public:
    InducedSearch(const Graph& g, const Graph& f, std::span<const char> allowed)
        : g_(g), f_(f), allowed_(allowed), image_(static_cast<std::size_t>(f.order()), -1),
          used_(static_cast<std::size_t>(g.order()), 0), anchor_(static_cast<std::size_t>(f.order()), -1)
    {
        // anchor[i]: some lower-indexed pattern neighbour of i, if any.
        for (Vertex i = 0; i < f.order(); ++i)
            for (Vertex j : f.neighbors(i))
                if (j < i) {
                    anchor_[i] = j;
                    break;
                }
    }

    bool run() { return f_.order() == 0 || extend(0); }
    std::vector<Vertex> embedding() const { return image_; }

private:
    bool fits(Vertex i, Vertex v) const
    {
        if (used_[v] || (!allowed_.empty() && !allowed_[v])) return false;
        if (g_.degree(v) < f_.degree(i)) return false;
        if (g_.has_loop(v) != f_.has_loop(i)) return false;
        for (Vertex j = 0; j < i; ++j)
            if (g_.adjacent(v, image_[j]) != f_.adjacent(i, j)) return false;
        return true;
    }

    bool extend(Vertex i)
    {
        if (i == f_.order()) return true;
        auto attempt = [&](Vertex v) {
            if (!fits(i, v)) return false;
            image_[i] = v;
            used_[v] = 1;
            if (extend(i + 1)) return true;
            used_[v] = 0;
            image_[i] = -1;
            return false;
        };
        if (anchor_[i] >= 0) {
            for (Vertex v : g_.neighbors(image_[anchor_[i]]))
                if (attempt(v)) return true;
        } else {
            for (Vertex v = 0; v < g_.order(); ++v)
                if (attempt(v)) return true;
        }
        return false;
    }

    const Graph& g_;
    const Graph& f_;
    std::span<const char> allowed_;
    std::vector<Vertex> image_;
    std::vector<char> used_;
    std::vector<Vertex> anchor_;
};

} // namespace detail

/// Lexicographically least induced embedding of `f` into `g` (image of
/// pattern vertex i at position i), or none. Loops must match exactly.
/// `allowed`, when non-empty, restricts the image to marked vertices.
inline std::optional<std::vector<Vertex>> find_induced(const Graph& g, const Graph& f,
                                                        std::span<const char> allowed = {})
{
    if (f.order() > g.order()) return std::nullopt;
    detail::InducedSearch search(g, f, allowed);
    if (!search.run()) return std::nullopt;
    return search.embedding();
}

inline std::optional<std::vector<Vertex>> find_induced(const Graph& g, const PatternGraph& f,
                                                        std::span<const char> allowed = {})
{
    return find_induced(g, f.to_graph(), allowed);
}

} // namespace llshom

#endif // LLSHOM_INDUCED_HPP
