#ifndef LLSHOM_SOLVER_EXACT_HPP
#define LLSHOM_SOLVER_EXACT_HPP

#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "isomorphism.hpp"
#include "result.hpp"
#include "verifier.hpp"

namespace llshom {

inline constexpr std::uint64_t unlimited_budget = std::numeric_limits<std::uint64_t>::max();

namespace detail {

/// Backtracking over list domains with arc consistency and happiness
/// pruning. Domains are undone through a trail.
class BruteForce {
public:
    BruteForce(const Instance& inst, std::uint64_t budget) : inst_(inst), budget_(budget)
    {
        const int n = inst.source.order();
        dom_.resize(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) dom_[v] = inst.lists[v].bits();
        for (Vertex a = 0; a < inst.target.order(); ++a) nbr_.push_back(inst.target.neighbor_set(a).bits());
        queued_.assign(static_cast<std::size_t>(n), 0);
    }

    SolveResult run()
    {
        SolveResult r = SolveResult::no();
        for (Vertex v = 0; v < inst_.source.order(); ++v) enqueue(v);
        if (propagate() && search(0)) {
            r = SolveResult::yes(std::move(witness_));
        } else if (exhausted_) {
            r = SolveResult::unknown();
        }
        r.stats.nodes = nodes_;
        return r;
    }

private:
    void enqueue(Vertex v)
    {
        if (!queued_[v]) {
            queued_[v] = 1;
            queue_.push_back(v);
        }
    }

    void set_domain(Vertex v, std::uint64_t d)
    {
        trail_.emplace_back(v, dom_[v]);
        dom_[v] = d;
    }

    void undo(std::size_t mark)
    {
        while (trail_.size() > mark) {
            dom_[trail_.back().first] = trail_.back().second;
            trail_.pop_back();
        }
    }

    /// Keeps value a of v iff every neighbour can still take a neighbour of
    /// a, and together they can still cover N_H(a).
    std::uint64_t supported(Vertex v) const
    {
        std::uint64_t keep = 0;
        for (std::uint64_t d = dom_[v]; d != 0; d &= d - 1) {
            const int a = std::countr_zero(d);
            const std::uint64_t na = nbr_[a];
            std::uint64_t cover = 0;
            bool ok = true;
            for (Vertex w : inst_.source.neighbors(v)) {
                std::uint64_t dw = (w == v ? (std::uint64_t{1} << a) : dom_[w]) & na;
                if (dw == 0) {
                    ok = false;
                    break;
                }
                cover |= dw;
            }
            if (ok && (na & ~cover) == 0) keep |= std::uint64_t{1} << a;
        }
        return keep;
    }

    bool propagate()
    {
        bool ok = true;
        while (!queue_.empty()) {
            Vertex v = queue_.back();
            queue_.pop_back();
            queued_[v] = 0;
            if (!ok) continue;
            std::uint64_t d = supported(v);
            if (d == dom_[v]) continue;
            set_domain(v, d);
            if (d == 0) {
                ok = false;
                continue;
            }
            for (Vertex w : inst_.source.neighbors(v)) enqueue(w);
        }
        return ok;
    }

    bool search(Vertex from)
    {
        const int n = inst_.source.order();
        Vertex v = from;
        while (v < n && std::popcount(dom_[v]) == 1) ++v;
        if (v == n) {
            Homomorphism h(static_cast<std::size_t>(n));
            for (Vertex u = 0; u < n; ++u) h[u] = std::countr_zero(dom_[u]);
            if (!verify_solution(inst_, h).accepted) return false;
            witness_ = std::move(h);
            return true;
        }
        const std::uint64_t values = dom_[v];
        for (std::uint64_t d = values; d != 0; d &= d - 1) {
            if (nodes_ >= budget_) {
                exhausted_ = true;
                return false;
            }
            ++nodes_;
            const std::size_t mark = trail_.size();
            set_domain(v, d & (~d + 1));
            for (Vertex w : inst_.source.neighbors(v)) enqueue(w);
            enqueue(v);
            if (propagate() && search(v + 1)) return true;
            undo(mark);
            if (exhausted_) return false;
        }
        return false;
    }

    const Instance& inst_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<std::uint64_t> dom_;
    std::vector<std::uint64_t> nbr_;
    std::vector<std::pair<Vertex, std::uint64_t>> trail_;
    std::vector<Vertex> queue_;
    std::vector<char> queued_;
    Homomorphism witness_;
};

} // namespace detail

/// Exact search; branches on the least undecided vertex, values ascending.
/// Each tried value costs one node; running out of budget yields
/// budget_exceeded.
inline SolveResult solve_bruteforce(const Instance& inst, std::uint64_t budget = unlimited_budget)
{
    inst.validate();
    return detail::BruteForce(inst, budget).run();
}

/// Polynomial cases K1, K1 with a loop, and K2, recognised up to isomorphism.
inline SolveResult solve_poly(const Instance& inst)
{
    inst.validate();
    const Graph& h = inst.target;
    const int n = inst.source.order();
    if (h.order() == 1) {
        const bool loop = h.has_loop(0);
        for (Vertex v = 0; v < n; ++v) {
            if (!inst.lists[v].contains(0)) return SolveResult::no();
            // Without a loop only isolated vertices are happy; with it only non-isolated ones.
            if ((inst.source.degree(v) == 0) == loop) return SolveResult::no();
        }
        return SolveResult::yes(Homomorphism(static_cast<std::size_t>(n), 0));
    }
    if (h.order() != 2 || h.size() != 1 || h.has_loops()) return SolveResult::not_applicable();
    auto gb = bipartition(inst.source);
    if (!gb) return SolveResult::no();
    Homomorphism w(static_cast<std::size_t>(n), -1);
    for (const auto& comp : connected_components(inst.source)) {
        if (comp.size() == 1) return SolveResult::no();
        bool found = false;
        for (Vertex a_image : {0, 1}) {
            bool ok = true;
            for (Vertex v : comp) {
                Vertex img = gb->in_a(v) ? a_image : 1 - a_image;
                if (!inst.lists[v].contains(img)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            for (Vertex v : comp) w[v] = gb->in_a(v) ? a_image : 1 - a_image;
            found = true;
            break;
        }
        if (!found) return SolveResult::no();
    }
    return SolveResult::yes(std::move(w));
}

} // namespace llshom

#endif // LLSHOM_SOLVER_EXACT_HPP
