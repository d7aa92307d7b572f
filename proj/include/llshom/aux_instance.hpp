#ifndef LLSHOM_AUX_INSTANCE_HPP
#define LLSHOM_AUX_INSTANCE_HPP

#include <bit>
#include <cstdint>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace llshom {

/// Colour bits of the auxiliary problem: the two ends of the path.
inline constexpr std::uint8_t colour_one = 1;   // end "1"
inline constexpr std::uint8_t colour_three = 2; // end "3"
inline constexpr std::uint8_t both_colours = 3;

/// Auxiliary instance: a bipartite graph with classes X (lists L(x) of
/// colours) and Y (demands sigma(y)); asks for a colouring of X from the
/// lists such that every y sees all of sigma(y) among its neighbours.
struct AuxInstance {
    Graph graph;
    std::vector<std::uint8_t> is_x;
    std::vector<std::uint8_t> mask;  // L(x) for x in X, sigma(y) for y in Y
    std::vector<Vertex> origin;      // vertex index in the instance this came from

    int order() const { return graph.order(); }

    /// mu = sum of |L(x)| plus sum of |sigma(y)|.
    long long measure() const
    {
        long long mu = 0;
        for (std::uint8_t m : mask) mu += std::popcount(static_cast<unsigned>(m));
        return mu;
    }
};

/// Subinstance induced by `keep` (ascending); origins are composed.
inline AuxInstance restrict_aux(const AuxInstance& aux, const std::vector<Vertex>& keep)
{
    AuxInstance out;
    out.graph = induced_subgraph(aux.graph, keep);
    for (Vertex v : keep) {
        out.is_x.push_back(aux.is_x[v]);
        out.mask.push_back(aux.mask[v]);
        out.origin.push_back(aux.origin[v]);
    }
    return out;
}

inline std::vector<AuxInstance> aux_components(const AuxInstance& aux)
{
    std::vector<AuxInstance> out;
    for (const auto& comp : connected_components(aux.graph)) out.push_back(restrict_aux(aux, comp));
    return out;
}

/// X vertices decided during preprocessing, by origin.
struct FixedColour {
    Vertex origin;
    std::uint8_t colour;
};

struct Preprocessed {
    AuxInstance aux;
    std::vector<FixedColour> fixed;
};

/// Applies the reduction rules to a fixed point, examining vertices in FIFO
/// order: an empty X list rejects; an empty demand deletes y; a singleton
/// list removes its colour from the neighbours' demands and deletes x; an
/// isolated y with a non-empty demand rejects. On success every X list has
/// two colours and every remaining y has a non-empty demand and a neighbour.
inline std::optional<Preprocessed> preprocess(const AuxInstance& aux)
{
    const int n = aux.order();
    std::vector<std::uint8_t> mask = aux.mask;
    std::vector<char> alive(static_cast<std::size_t>(n), 1), queued(static_cast<std::size_t>(n), 1);
    std::vector<int> live_degree(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) live_degree[v] = aux.graph.degree(v);
    std::deque<Vertex> queue;
    for (Vertex v = 0; v < n; ++v) queue.push_back(v);
    Preprocessed out;

    auto remove = [&](Vertex v) {
        alive[v] = 0;
        for (Vertex w : aux.graph.neighbors(v)) --live_degree[w];
    };

    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        queued[v] = 0;
        if (!alive[v]) continue;
        const int size = std::popcount(static_cast<unsigned>(mask[v]));
        if (aux.is_x[v]) {
            if (size == 0) return std::nullopt;
            if (size == 1) {
                for (Vertex y : aux.graph.neighbors(v)) {
                    if (!alive[y]) continue;
                    mask[y] &= static_cast<std::uint8_t>(~mask[v]);
                    if (!queued[y]) {
                        queued[y] = 1;
                        queue.push_back(y);
                    }
                }
                out.fixed.push_back({aux.origin[v], mask[v]});
                remove(v);
            }
        } else {
            if (size == 0) {
                remove(v);
            } else if (live_degree[v] == 0) {
                return std::nullopt;
            }
        }
    }

    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
        if (alive[v]) keep.push_back(v);
    AuxInstance reduced = aux;
    reduced.mask = mask;
    out.aux = restrict_aux(reduced, keep);
    return out;
}

} // namespace llshom

#endif // LLSHOM_AUX_INSTANCE_HPP
