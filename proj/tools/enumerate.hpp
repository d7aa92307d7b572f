#ifndef LLSHOM_TOOLS_ENUMERATE_HPP
#define LLSHOM_TOOLS_ENUMERATE_HPP

// Exhaustive enumerators for the self-test suites: loopless graphs up to
// isomorphism and small 3-CNF formulas up to variable renaming.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "llshom/cnf.hpp"
#include "llshom/graph.hpp"

namespace llshom::enumerate {

namespace detail {

// Stable colour refinement; returns a colour per vertex with colours
// numbered by sorted signature, so the result is isomorphism invariant.
inline std::vector<int> refine(const Graph& g)
{
    const int n = g.order();
    std::vector<int> colour(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) colour[v] = g.degree(v);
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            sig[v].first = colour[v];
            for (Vertex w : g.neighbors(v)) sig[v].second.push_back(colour[w]);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        std::vector<std::pair<int, std::vector<int>>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v)
            next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        if (next == colour) break;
        colour = std::move(next);
    }
    return colour;
}

inline int pair_bit(int i, int j)
{
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

} // namespace detail

/// Canonical code of a loopless graph on at most 11 vertices: the least
/// upper-triangle bit string over orderings that respect refined colours.
inline std::uint64_t canonical_code(const Graph& g)
{
    const int n = g.order();
    if (n > 11) throw std::invalid_argument("canonical code supports at most 11 vertices");
    const std::vector<int> colour = detail::refine(g);
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return colour[a] != colour[b] ? colour[a] < colour[b] : a < b; });
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && colour[order[j]] == colour[order[i]]) ++j;
        cells.emplace_back(i, j);
        i = j;
    }
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<int> pos(static_cast<std::size_t>(n));
    // Odometer over permutations inside every cell.
    for (;;) {
        for (int i = 0; i < n; ++i) pos[order[i]] = i;
        std::uint64_t code = 0;
        for (const Edge& e : g.edges()) code |= std::uint64_t{1} << detail::pair_bit(pos[e.u], pos[e.v]);
        best = std::min(best, code);
        std::size_t c = 0;
        for (; c < cells.size(); ++c) {
            auto first = order.begin() + cells[c].first, last = order.begin() + cells[c].second;
            if (std::next_permutation(first, last)) break;
        }
        if (c == cells.size()) break;
    }
    return best;
}

inline Graph from_code(int n, std::uint64_t code)
{
    Graph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (code >> detail::pair_bit(i, j) & 1U) g.add_edge(i, j);
    return g;
}

/// All loopless graphs on n vertices up to isomorphism, ordered by code.
inline std::vector<Graph> all_graphs(int n)
{
    if (n < 0 || n > 9) throw std::invalid_argument("graph enumeration supports 0..9 vertices");
    if (n == 0) return {Graph(0)};
    std::set<std::uint64_t> current{0}; // the single graph on one vertex
    for (int k = 2; k <= n; ++k) {
        std::set<std::uint64_t> next;
        for (std::uint64_t code : current) {
            const Graph base = from_code(k - 1, code);
            for (std::uint32_t nb = 0; nb < (1U << (k - 1)); ++nb) {
                Graph g(k);
                for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
                for (int i = 0; i < k - 1; ++i)
                    if (nb >> i & 1U) g.add_edge(i, k - 1);
                next.insert(canonical_code(g));
            }
        }
        current = std::move(next);
    }
    std::vector<Graph> out;
    for (std::uint64_t code : current) out.push_back(from_code(n, code));
    return out;
}

/// All formulas with `clauses` clauses over at most `max_vars` variables,
/// variables named in order of first occurrence, every sign pattern.
inline std::vector<CnfFormula> all_formulas(int clauses, int max_vars)
{
    const int len = 3 * clauses;
    std::vector<CnfFormula> out;
    std::vector<int> vars(static_cast<std::size_t>(len), 0);
    // Restricted growth strings: vars[i] <= 1 + max(vars[0..i-1]).
    auto emit = [&]() {
        const int used = 1 + *std::max_element(vars.begin(), vars.end());
        for (std::uint32_t signs = 0; signs < (1U << len); ++signs) {
            CnfFormula f;
            f.num_vars = used;
            for (int c = 0; c < clauses; ++c) {
                Clause cl;
                for (int i = 0; i < 3; ++i) {
                    const int k = 3 * c + i;
                    cl[i] = (signs >> k & 1U) ? -(vars[k] + 1) : vars[k] + 1;
                }
                f.clauses.push_back(cl);
            }
            out.push_back(std::move(f));
        }
    };
    auto rec = [&](auto&& self, int i, int top) -> void {
        if (i == len) {
            emit();
            return;
        }
        for (int v = 0; v <= std::min(top + 1, max_vars - 1); ++v) {
            vars[i] = v;
            self(self, i + 1, std::max(top, v));
        }
    };
    if (len > 0) rec(rec, 0, -1);
    return out;
}

} // namespace llshom::enumerate

#endif // LLSHOM_TOOLS_ENUMERATE_HPP
