#ifndef LLSHOM_SUBEXP_HPP
#define LLSHOM_SUBEXP_HPP

#include <algorithm>
#include <atomic>
#include <climits>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "aux_instance.hpp"
#include "dp.hpp"
#include "induced.hpp"
#include "instance.hpp"
#include "isomorphism.hpp"
#include "pattern.hpp"
#include "result.hpp"
#include "tree_decomposition.hpp"

namespace llshom {

namespace detail {

inline long double n_log_n(int n) { return static_cast<long double>(n) * std::log2(static_cast<long double>(n)); }

/// Smallest t with t^3 >= x^power, for power in {1, 2}.
inline int ceil_root(long double x, int power)
{
    const long double target = power == 1 ? x : x * x;
    long long t = static_cast<long long>(std::ceil(std::cbrt(target)));
    while (t > 0 && static_cast<long double>(t - 1) * (t - 1) * (t - 1) >= target) --t;
    while (static_cast<long double>(t) * t * t < target) ++t;
    return static_cast<int>(t);
}

} // namespace detail

/// ceil((n log2 n)^(1/3)); an X vertex of larger degree triggers branching.
inline int branching_threshold(int n) { return n < 2 ? 0 : detail::ceil_root(detail::n_log_n(n), 1); }

/// ceil((n log2 n)^(2/3)); Y vertices of at least this degree join Y'.
inline int extraction_threshold(int n) { return n < 2 ? 0 : detail::ceil_root(detail::n_log_n(n), 2); }

/// The maximum-degree X vertex (least index on ties) when its degree
/// exceeds the branching threshold.
inline std::optional<Vertex> branching_vertex(const AuxInstance& aux)
{
    if (aux.order() < 2) return std::nullopt;
    const int theta = branching_threshold(aux.order());
    std::optional<Vertex> best;
    for (Vertex v = 0; v < aux.order(); ++v)
        if (aux.is_x[v] && aux.graph.degree(v) > theta && (!best || aux.graph.degree(v) > aux.graph.degree(*best)))
            best = v;
    return best;
}

inline AuxInstance with_colour(AuxInstance aux, Vertex x, std::uint8_t colour)
{
    aux.mask[x] &= colour;
    return aux;
}

/// Children L(x) = {1} and L(x) = {3} for the branching vertex, if any.
inline std::optional<std::pair<AuxInstance, AuxInstance>> branch_high_degree(const AuxInstance& aux)
{
    auto x = branching_vertex(aux);
    if (!x) return std::nullopt;
    return std::make_pair(with_colour(aux, *x, colour_one), with_colour(aux, *x, colour_three));
}

/// Y' = {y : deg y >= extraction threshold}, ascending.
inline std::vector<Vertex> extract_high_degree_y(const AuxInstance& aux)
{
    std::vector<Vertex> out;
    if (aux.order() < 2) return out;
    const int theta = extraction_threshold(aux.order());
    for (Vertex v = 0; v < aux.order(); ++v)
        if (!aux.is_x[v] && aux.graph.degree(v) >= theta) out.push_back(v);
    return out;
}

/// Induced copy S of `component` avoiding `excluded`, and the children that
/// fix every colouring of the X vertices in N[S]. Empty optional when no
/// copy exists. Colourings are enumerated with the lowest vertex as the
/// least significant digit, colour 1 before colour 3.
inline std::optional<std::vector<AuxInstance>> forest_guess(const AuxInstance& aux, const PatternComponent& component,
                                                            const std::vector<Vertex>& excluded)
{
    std::vector<char> allowed(static_cast<std::size_t>(aux.order()), 1);
    for (Vertex v : excluded) allowed[v] = 0;
    auto copy = find_induced(aux.graph, component.to_graph(), allowed);
    if (!copy) return std::nullopt;
    std::vector<char> mark(static_cast<std::size_t>(aux.order()), 0);
    for (Vertex s : *copy) {
        mark[s] = 1;
        for (Vertex w : aux.graph.neighbors(s)) mark[w] = 1;
    }
    std::vector<Vertex> xs;
    for (Vertex v = 0; v < aux.order(); ++v)
        if (mark[v] && aux.is_x[v]) xs.push_back(v);
    if (xs.empty()) return std::nullopt;
    if (xs.size() > 30) throw Error("too-large", "forest guess over more than 30 vertices");
    std::vector<AuxInstance> children;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << xs.size()); ++code) {
        AuxInstance child = aux;
        bool ok = true;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            std::uint8_t c = ((code >> i) & 1U) ? colour_three : colour_one;
            if (!(aux.mask[xs[i]] & c)) ok = false;
            child.mask[xs[i]] = c;
        }
        if (ok) children.push_back(std::move(child));
    }
    return children;
}

struct P3Options {
    /// Forbidden pattern; only multi-component forests change the algorithm.
    std::optional<PatternGraph> forbidden;
    int threads = 1;
    EliminationHeuristic heuristic = EliminationHeuristic::min_fill;
    /// Observer of every recursive node: (measure after preprocessing,
    /// order after preprocessing, parent measure or -1).
    std::function<void(long long, int, long long)> on_node;
};

namespace detail {

class P3Solver {
public:
    explicit P3Solver(const P3Options& opt) : opt_(opt), spare_(std::max(0, opt.threads - 1))
    {
        if (opt.forbidden && opt.forbidden->kind() == PatternGraph::Kind::forest)
            pattern_ = opt.forbidden->by_size_descending();
    }

    /// Colours of X vertices by origin, or none.
    std::optional<std::vector<FixedColour>> solve(const AuxInstance& aux, int level, long long parent_mu,
                                                  SolveStats& stats)
    {
        ++stats.recursive_calls;
        auto pre = preprocess(aux);
        if (!pre) return std::nullopt;
        const AuxInstance& a = pre->aux;
        const long long mu = a.measure();
        const int n = a.order();
        ++stats.measure_checks;
        if (mu < n || mu > 2LL * n || (parent_mu >= 0 && mu >= parent_mu)) ++stats.measure_violations;
        if (opt_.on_node) {
            std::lock_guard lock(observer_mutex_);
            opt_.on_node(mu, n, parent_mu);
        }
        std::vector<FixedColour> out = pre->fixed;
        for (const AuxInstance& comp : aux_components(a)) {
            if (std::none_of(comp.is_x.begin(), comp.is_x.end(), [](std::uint8_t x) { return x == 0; })) {
                for (Vertex v = 0; v < comp.order(); ++v)
                    out.push_back({comp.origin[v], comp.mask[v] & colour_one ? colour_one : colour_three});
                continue;
            }
            auto sub = solve_component(comp, level, stats);
            if (!sub) return std::nullopt;
            out.insert(out.end(), sub->begin(), sub->end());
        }
        return out;
    }

private:
    std::optional<std::vector<FixedColour>> solve_component(const AuxInstance& aux, int level, SolveStats& stats)
    {
        const long long mu = aux.measure();
        if (auto kids = branch_high_degree(aux)) {
            ++stats.branches;
            std::vector<AuxInstance> children{std::move(kids->first), std::move(kids->second)};
            return first_yes(children, level, mu, stats);
        }
        const std::vector<Vertex> y_prime = extract_high_degree_y(aux);
        stats.max_y_prime = std::max(stats.max_y_prime, static_cast<int>(y_prime.size()));
        if (level + 1 < static_cast<int>(pattern_.size())) {
            if (auto children = forest_guess(aux, pattern_[level], y_prime)) {
                stats.guesses += children->size();
                return first_yes(*children, level + 1, mu, stats);
            }
        }
        return decompose_and_solve(aux, y_prime, stats);
    }

    std::optional<std::vector<FixedColour>> decompose_and_solve(const AuxInstance& aux,
                                                                const std::vector<Vertex>& y_prime,
                                                                SolveStats& stats)
    {
        std::vector<char> in_y_prime(static_cast<std::size_t>(aux.order()), 0);
        for (Vertex y : y_prime) in_y_prime[y] = 1;
        std::vector<Vertex> rest;
        for (Vertex v = 0; v < aux.order(); ++v)
            if (!in_y_prime[v]) rest.push_back(v);
        TreeDecomposition td = decompose(induced_subgraph(aux.graph, rest), opt_.heuristic);
        for (auto& bag : td.bags)
            for (Vertex& v : bag) v = rest[v];
        for (auto& bag : td.bags) std::sort(bag.begin(), bag.end());
        td = augment_bags(std::move(td), y_prime);
        stats.max_width = std::max(stats.max_width, td.width());
        ++stats.dp_calls;
        DpResult dp = dp_solve(aux, td);
        stats.max_dp_states = std::max<std::uint64_t>(stats.max_dp_states, dp.stats.max_states);
        if (!dp.feasible) return std::nullopt;
        std::vector<FixedColour> out;
        for (Vertex v = 0; v < aux.order(); ++v)
            if (aux.is_x[v]) out.push_back({aux.origin[v], dp.colouring[v]});
        return out;
    }

    /// Solves children in order and returns the lowest-indexed yes. With
    /// spare threads the children run concurrently; later children are
    /// skipped once an earlier one succeeded.
    std::optional<std::vector<FixedColour>> first_yes(const std::vector<AuxInstance>& children, int level,
                                                      long long mu, SolveStats& stats)
    {
        int extra = 0;
        for (int want = static_cast<int>(children.size()) - 1; want > 0 && extra < want;) {
            int s = spare_.load();
            if (s == 0) break;
            int take = std::min(s, want);
            if (spare_.compare_exchange_weak(s, s - take)) extra = take;
        }
        if (extra == 0) {
            for (const auto& child : children)
                if (auto r = solve(child, level, mu, stats)) return r;
            return std::nullopt;
        }
        const int k = static_cast<int>(children.size());
        std::atomic<int> next{0}, found{INT_MAX};
        std::vector<std::optional<std::vector<FixedColour>>> results(static_cast<std::size_t>(k));
        std::vector<SolveStats> local(static_cast<std::size_t>(extra + 1));
        auto worker = [&](int id) {
            for (int i = next++; i < k; i = next++) {
                if (i > found.load()) continue;
                results[i] = solve(children[i], level, mu, local[id]);
                if (results[i]) {
                    int f = found.load();
                    while (i < f && !found.compare_exchange_weak(f, i)) {}
                }
            }
        };
        std::vector<std::thread> pool;
        for (int id = 1; id <= extra; ++id) pool.emplace_back(worker, id);
        worker(0);
        for (auto& t : pool) t.join();
        spare_ += extra;
        for (const auto& s : local) stats.merge(s);
        if (found.load() == INT_MAX) return std::nullopt;
        return results[found.load()];
    }

    const P3Options& opt_;
    std::vector<PatternComponent> pattern_;
    std::atomic<int> spare_;
    std::mutex observer_mutex_;
};

/// Roles of a target isomorphic to P3: the two ends and the middle.
struct P3Roles {
    Vertex one, middle, three;
};

inline P3Roles p3_roles(const Graph& target)
{
    auto iso = find_isomorphism(graphs::path(3), target);
    if (!iso) throw std::invalid_argument("target is not a three-vertex path");
    return {(*iso)[0], (*iso)[1], (*iso)[2]};
}

} // namespace detail

/// Runs the branching / extraction / guessing / decomposition pipeline on
/// an auxiliary instance. Returns the X colours by origin.
inline std::optional<std::vector<FixedColour>> solve_aux(const AuxInstance& aux, const P3Options& opt,
                                                         SolveStats& stats)
{
    detail::P3Solver solver(opt);
    return solver.solve(aux, 0, -1, stats);
}

/// Exact solver for targets isomorphic to P3. Each component of G is tried
/// in both consistent orientations; each orientation becomes an auxiliary
/// instance with sigma(y) = {1,3}.
inline SolveResult solve_p3(const Instance& inst, const P3Options& opt = {})
{
    inst.validate();
    const detail::P3Roles roles = detail::p3_roles(inst.target);
    const int n = inst.source.order();
    SolveResult result = SolveResult::no();
    auto splits = split_consistent(inst);
    if (!splits) return result;
    // split_consistent calls the target class holding vertex 0 "X".
    const bool ends_are_class_a = bipartition(inst.target)->in_a(roles.one);
    Homomorphism h(static_cast<std::size_t>(n), -1);
    for (const ComponentSplit& split : *splits) {
        if (split.vertices.size() == 1) return result;
        bool solved = false;
        for (const ConsistentInstance& ci : split.options) {
            AuxInstance aux;
            aux.graph = ci.instance.source;
            bool possible = true;
            for (Vertex v = 0; v < aux.order(); ++v) {
                const bool end_side = (ci.x_side[v] != 0) == ends_are_class_a;
                const VertexSet l = ci.instance.lists[v];
                aux.is_x.push_back(end_side ? 1 : 0);
                aux.origin.push_back(v);
                if (end_side) {
                    std::uint8_t m = 0;
                    if (l.contains(roles.one)) m |= colour_one;
                    if (l.contains(roles.three)) m |= colour_three;
                    aux.mask.push_back(m);
                } else {
                    if (!l.contains(roles.middle)) possible = false;
                    aux.mask.push_back(both_colours);
                }
            }
            if (!possible) continue;
            auto colours = solve_aux(aux, opt, result.stats);
            if (!colours) continue;
            for (Vertex v = 0; v < aux.order(); ++v)
                if (!aux.is_x[v]) h[split.vertices[v]] = roles.middle;
            for (const FixedColour& fc : *colours)
                h[split.vertices[fc.origin]] = fc.colour == colour_one ? roles.one : roles.three;
            solved = true;
            break;
        }
        if (!solved) return result;
    }
    result.status = Status::yes;
    result.witness = std::move(h);
    return result;
}

/// Exact solver for targets isomorphic to C4: per component and
/// orientation, two P3 instances that must both be yes.
inline SolveResult solve_c4(const Instance& inst, const P3Options& opt = {})
{
    inst.validate();
    auto iso = find_isomorphism(inst.target, graphs::cycle(4));
    if (!iso) throw std::invalid_argument("target is not a four-cycle");
    Instance canon{graphs::cycle(4), inst.source, {}};
    for (const VertexSet& l : inst.lists) {
        VertexSet m;
        l.for_each([&](Vertex a) { m.insert((*iso)[a]); });
        canon.lists.push_back(m);
    }
    std::vector<Vertex> back(4);
    for (Vertex a = 0; a < 4; ++a) back[(*iso)[a]] = a;

    SolveResult result = SolveResult::no();
    auto splits = split_consistent(canon);
    if (!splits) return result;
    Homomorphism h(static_cast<std::size_t>(inst.source.order()), -1);
    for (const ComponentSplit& split : *splits) {
        bool solved = false;
        for (const ConsistentInstance& ci : split.options) {
            C4Reduction red = reduce_c4_to_p3(ci.instance, ci.x_side);
            SolveResult first = solve_p3(red.first, opt);
            result.stats.merge(first.stats);
            if (first.status != Status::yes) continue;
            SolveResult second = solve_p3(red.second, opt);
            result.stats.merge(second.stats);
            if (second.status != Status::yes) continue;
            Homomorphism local = combine_c4_witness(red, first.witness, second.witness);
            for (std::size_t v = 0; v < local.size(); ++v) h[split.vertices[v]] = back[local[v]];
            solved = true;
            break;
        }
        if (!solved) return result;
    }
    result.status = Status::yes;
    result.witness = std::move(h);
    return result;
}

} // namespace llshom

#endif // LLSHOM_SUBEXP_HPP
