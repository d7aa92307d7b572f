#ifndef LLSHOM_SOLVE_HPP
#define LLSHOM_SOLVE_HPP

#include <optional>
#include <vector>

#include "isomorphism.hpp"
#include "solver_exact.hpp"
#include "subexp.hpp"

namespace llshom {

struct SolveOptions {
    std::uint64_t budget = unlimited_budget; // brute-force node limit
    P3Options p3;
};

namespace detail {

inline bool is_p3(const Graph& h) { return h.order() == 3 && h.size() == 2 && !h.has_loops() && is_connected(h); }

inline bool is_c4(const Graph& h) { return h.order() == 4 && isomorphic(h, graphs::cycle(4)); }

/// Relabels targets through `map` (old target vertex -> new).
inline Instance relabel_target(const Instance& inst, Graph target, const std::vector<Vertex>& map)
{
    Instance out{std::move(target), inst.source, {}};
    for (const VertexSet& l : inst.lists) {
        VertexSet m;
        l.for_each([&](Vertex a) {
            if (map[a] >= 0) m.insert(map[a]);
        });
        out.lists.push_back(m);
    }
    return out;
}

inline SolveResult solve_connected_target(const Instance& inst, const SolveOptions& opt);

inline SolveResult solve_via_base(const Instance& inst, const BaseGraph& base, const SolveOptions& opt)
{
    const AssociatedBipartite star = associated_bipartite(base.base);
    const Instance star_inst = relabel_target(inst, star.graph, base.to_associated);
    std::vector<Vertex> back(static_cast<std::size_t>(star.graph.order()));
    for (Vertex a = 0; a < inst.target.order(); ++a) back[base.to_associated[a]] = a;

    SolveResult result = SolveResult::no();
    auto splits = split_consistent(star_inst);
    if (!splits) return result;
    bool unknown = false;
    Homomorphism h(static_cast<std::size_t>(inst.source.order()), -1);
    for (const ComponentSplit& split : *splits) {
        bool solved = false;
        for (const ConsistentInstance& ci : split.options) {
            LiftedInstance lifted = lift_to_base(ci.instance, base.base, ci.x_side);
            SolveResult r = solve_connected_target(lifted.instance, opt);
            result.stats.merge(r.stats);
            if (r.status == Status::budget_exceeded) unknown = true;
            if (r.status != Status::yes) continue;
            Homomorphism low = lower_witness(lifted, r.witness);
            for (std::size_t v = 0; v < low.size(); ++v) h[split.vertices[v]] = back[low[v]];
            solved = true;
            break;
        }
        if (!solved) {
            result.status = unknown ? Status::budget_exceeded : Status::no;
            return result;
        }
    }
    result.status = Status::yes;
    result.witness = std::move(h);
    return result;
}

inline SolveResult solve_connected_target(const Instance& inst, const SolveOptions& opt)
{
    const Graph& h = inst.target;
    SolveResult poly = solve_poly(inst);
    if (poly.status != Status::not_applicable) return poly;
    if (is_p3(h)) return solve_p3(inst, opt.p3);
    if (is_c4(h)) return solve_c4(inst, opt.p3);
    if (auto base = find_associated_base(h)) return solve_via_base(inst, *base, opt);
    return solve_bruteforce(inst, opt.budget);
}

} // namespace detail

/// Dispatcher: split G into components; try each component of H for each;
/// then the polynomial cases, P3, C4, targets of the form H0*, and finally
/// brute force.
inline SolveResult solve_auto(const Instance& inst, const SolveOptions& opt = {})
{
    inst.validate();
    SolveResult result = SolveResult::no();
    const auto target_parts = connected_components(inst.target);
    Homomorphism h(static_cast<std::size_t>(inst.source.order()), -1);
    for (const SubInstance& part : split_components(inst)) {
        bool solved = false, unknown = false;
        for (const auto& hc : target_parts) {
            std::vector<Vertex> map(static_cast<std::size_t>(inst.target.order()), -1);
            for (std::size_t i = 0; i < hc.size(); ++i) map[hc[i]] = static_cast<Vertex>(i);
            Instance local = detail::relabel_target(part.instance, induced_subgraph(inst.target, hc), map);
            SolveResult r = detail::solve_connected_target(local, opt);
            result.stats.merge(r.stats);
            if (r.status == Status::budget_exceeded) unknown = true;
            if (r.status != Status::yes) continue;
            for (std::size_t v = 0; v < r.witness.size(); ++v) h[part.vertices[v]] = hc[r.witness[v]];
            solved = true;
            break;
        }
        if (!solved) {
            result.status = unknown ? Status::budget_exceeded : Status::no;
            return result;
        }
    }
    result.status = Status::yes;
    result.witness = std::move(h);
    return result;
}

} // namespace llshom

#endif // LLSHOM_SOLVE_HPP
