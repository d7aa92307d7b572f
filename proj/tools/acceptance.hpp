#ifndef LLSHOM_TOOLS_ACCEPTANCE_HPP
#define LLSHOM_TOOLS_ACCEPTANCE_HPP

// Acceptance criteria 1-10 as runnable checks, shared by `llshom selftest`
// and the acceptance test binary. The brute-force solver is the oracle.

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "llshom/llshom.hpp"

namespace llshom::acceptance {

// Pinned sizes and limits.
inline constexpr int c1_exhaustive_max_n = 7;
inline constexpr int c1_random_count = 10'000;
inline constexpr int c1_random_max_n = 12;
inline constexpr double c1_time_limit_s = 600.0;
inline constexpr int c2_count = 5'000;
inline constexpr int c2_max_n = 10;
inline constexpr int c3_count_per_target = 2'000;
inline constexpr int c3_max_n = 8;
inline constexpr int c4_max_n = 8;
inline constexpr int c4_full_patterns_max_n = 6;
inline constexpr int c4_sampled_patterns = 32;
inline constexpr int c5_max_vars = 3;
inline constexpr int c5_max_clauses = 2;
inline constexpr double c5_time_limit_s = 1800.0;
inline constexpr std::uint64_t c5_budget = 10'000'000;
inline constexpr int c6_corpus = 200;
inline constexpr int c7_zoo_size = 10;
inline constexpr std::size_t c7_gadget_cap = 300'000;
inline constexpr int c8_count = 2'000;
inline constexpr int c8_max_n = 10;
inline constexpr int c10_min_vertices = 5'000;
inline constexpr int c10_p = 3;
inline constexpr double c10_time_limit_s = 60.0;
inline constexpr std::uint64_t c10_budget = 10'000'000;

inline constexpr std::uint64_t default_seed = 0x4c4c5348u; // "LLSH"

struct Outcome {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

using Rng = std::mt19937_64;

namespace detail {

class Stopwatch {
public:
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline double unit(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

/// Random graph whose edges only join vertices with different `side`.
inline Graph random_bipartite(Rng& rng, const std::vector<std::uint8_t>& side, double density)
{
    const int n = static_cast<int>(side.size());
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (side[u] != side[v] && unit(rng) < density) g.add_edge(u, v);
    return g;
}

inline std::vector<std::uint8_t> random_sides(Rng& rng, int n)
{
    std::vector<std::uint8_t> side(static_cast<std::size_t>(n));
    for (auto& s : side) s = static_cast<std::uint8_t>(uniform(rng, 0, 1));
    return side;
}

/// Random subset of `pool`, kept whole with probability `full`.
inline VertexSet random_subset(Rng& rng, VertexSet pool, double full)
{
    if (unit(rng) < full) return pool;
    VertexSet out;
    pool.for_each([&](Vertex a) {
        if (uniform(rng, 0, 1)) out.insert(a);
    });
    return out;
}

/// Instance with a planted locally surjective witness: images are drawn
/// from `pools` (one per side of a bipartite target), edges join vertices
/// with adjacent images, and missing neighbour values are patched in where
/// a vertex with that image exists. Lists contain the planted image.
struct Planted {
    Instance instance;
    std::vector<std::uint8_t> side;
};

inline Planted planted(Rng& rng, const Graph& target, const VertexSet pools[2], int n, double density, double extra)
{
    Planted out{Instance{target, Graph(n), {}}, std::vector<std::uint8_t>(static_cast<std::size_t>(n))};
    std::vector<Vertex> image(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        out.side[v] = static_cast<std::uint8_t>(uniform(rng, 0, 1));
        const std::vector<Vertex> pool = pools[out.side[v]].elements();
        image[v] = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
    }
    Graph& g = out.instance.source;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (target.adjacent(image[u], image[v]) && unit(rng) < density) g.add_edge(u, v);
    for (Vertex v = 0; v < n; ++v)
        target.neighbor_set(image[v]).for_each([&](Vertex b) {
            std::vector<Vertex> options;
            for (Vertex w = 0; w < n; ++w) {
                if (image[w] != b) continue;
                if (g.adjacent(v, w)) return;
                if (w != v) options.push_back(w);
            }
            if (!options.empty()) g.add_edge(v, options[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(options.size()) - 1))]);
        });
    for (Vertex v = 0; v < n; ++v) {
        VertexSet l = random_subset(rng, pools[out.side[v]], extra);
        l.insert(image[v]);
        out.instance.lists.push_back(l);
    }
    return out;
}

struct Tally {
    long long cases = 0;
    long long mismatches = 0;
    long long bad_witnesses = 0;
    long long yes = 0;
    std::string first_failure;

    void fail(const std::string& what)
    {
        if (first_failure.empty()) first_failure = what;
    }

    bool ok() const { return mismatches == 0 && bad_witnesses == 0 && cases > 0; }

    std::string summary() const
    {
        std::ostringstream s;
        s << cases << " cases, " << yes << " yes, " << mismatches << " mismatches, " << bad_witnesses << " bad witnesses";
        if (!first_failure.empty()) s << "; first failure: " << first_failure;
        return s.str();
    }
};

/// Compares two results and audits yes witnesses against the instance.
inline void compare(Tally& t, const Instance& inst, const SolveResult& got, const SolveResult& oracle, const char* what)
{
    ++t.cases;
    if (oracle.status == Status::yes) ++t.yes;
    if (got.status != oracle.status || oracle.status == Status::budget_exceeded) {
        ++t.mismatches;
        t.fail(std::string(what) + ": " + to_string(got.status) + " vs oracle " + to_string(oracle.status) + " on " +
               to_text(inst, write_instance));
    }
    for (const SolveResult* r : {&got, &oracle})
        if (r->status == Status::yes && !verify_solution(inst, r->witness).accepted) {
            ++t.bad_witnesses;
            t.fail(std::string(what) + ": witness rejected");
        }
}

/// Measure audit for criterion 9, fed by the subexponential solver.
struct MeasureAudit {
    long long nodes = 0;
    long long violations = 0;

    std::function<void(long long, int, long long)> observer()
    {
        return [this](long long mu, int n, long long parent) {
            ++nodes;
            if (mu < n || mu > 2LL * n || (parent >= 0 && mu >= parent)) ++violations;
        };
    }
};

inline Outcome finish(int id, std::string title, bool passed, std::string detail, const Stopwatch& clock)
{
    return Outcome{id, std::move(title), passed, std::move(detail), clock.seconds()};
}

} // namespace detail

/// Criteria 1 and 9: solve_p3 against brute force, with the measure audit
/// attached to every recursive node.
inline std::vector<Outcome> criterion_1_and_9(std::uint64_t seed)
{
    detail::Stopwatch clock;
    detail::Tally tally;
    detail::MeasureAudit audit;
    P3Options opt;
    opt.on_node = audit.observer();
    const Graph p3 = graphs::path(3);
    const VertexSet ends{0, 2}, middle{1};
    const VertexSet x_options[4] = {VertexSet{}, VertexSet{0}, VertexSet{2}, ends};
    const VertexSet y_options[2] = {VertexSet{}, middle};

    auto run = [&](const Instance& inst) {
        SolveResult got = solve_p3(inst, opt);
        SolveResult oracle = solve_bruteforce(inst);
        detail::compare(tally, inst, got, oracle, "p3");
    };

    // Exhaustive: every bipartite graph up to isomorphism, both orientations
    // (flipping all components at once), every consistent list pattern.
    for (int n = 1; n <= c1_exhaustive_max_n; ++n)
        for (const Graph& g : enumerate::all_graphs(n)) {
            auto bp = bipartition(g);
            if (!bp) continue;
            for (int orientation = 0; orientation < 2; ++orientation) {
                std::vector<std::uint8_t> in_x(static_cast<std::size_t>(n));
                for (Vertex v = 0; v < n; ++v) in_x[v] = bp->in_a(v) == (orientation == 0);
                std::vector<int> digit(static_cast<std::size_t>(n), 0);
                for (;;) {
                    Instance inst{p3, g, {}};
                    for (Vertex v = 0; v < n; ++v) inst.lists.push_back(in_x[v] ? x_options[digit[v]] : y_options[digit[v]]);
                    run(inst);
                    Vertex v = 0;
                    for (; v < n; ++v) {
                        if (++digit[v] < (in_x[v] ? 4 : 2)) break;
                        digit[v] = 0;
                    }
                    if (v == n) break;
                }
            }
        }

    // Random: mostly consistent instances on bipartite graphs, some with
    // arbitrary lists on arbitrary graphs.
    Rng rng(seed ^ 0x0101);
    for (int i = 0; i < c1_random_count; ++i) {
        const int n = detail::uniform(rng, 1, c1_random_max_n);
        const auto side = detail::random_sides(rng, n);
        const double density = 0.15 + 0.7 * detail::unit(rng);
        Instance inst{p3, Graph(n), {}};
        if (i % 5 == 2 || i % 5 == 3) {
            const VertexSet pools[2] = {middle, ends};
            inst = detail::planted(rng, p3, pools, n, density, 0.5).instance;
        } else if (i % 5 != 4) {
            inst.source = detail::random_bipartite(rng, side, density);
            for (Vertex v = 0; v < n; ++v)
                inst.lists.push_back(side[v] ? detail::random_subset(rng, ends, 0.7) : detail::random_subset(rng, middle, 0.9));
        } else {
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    if (detail::unit(rng) < density * 0.6) inst.source.add_edge(u, v);
            for (Vertex v = 0; v < n; ++v) inst.lists.push_back(detail::random_subset(rng, VertexSet{0, 1, 2}, 0.5));
        }
        run(inst);
    }
    const double t = clock.seconds();
    const bool ok1 = tally.ok() && t < c1_time_limit_s;
    std::ostringstream d1;
    d1 << tally.summary() << "; " << t << " s (limit " << c1_time_limit_s << " s)";
    std::ostringstream d9;
    d9 << audit.nodes << " recursive nodes, " << audit.violations << " violations";
    return {detail::finish(1, "solve_p3 agrees with brute force", ok1, d1.str(), clock),
            detail::finish(9, "measure discipline in solve_p3", audit.violations == 0 && audit.nodes > 0, d9.str(), clock)};
}

/// Criterion 2: random consistent C4 instances through solve_c4 and through
/// the two-instance reduction, against brute force.
inline Outcome criterion_2(std::uint64_t seed)
{
    detail::Stopwatch clock;
    detail::Tally tally;
    Rng rng(seed ^ 0x0202);
    const Graph c4 = graphs::cycle(4);
    const VertexSet xs{0, 2}, ys{1, 3};
    long long conj_mismatch = 0;
    for (int i = 0; i < c2_count; ++i) {
        const int n = detail::uniform(rng, 1, c2_max_n);
        const double density = 0.2 + 0.7 * detail::unit(rng);
        Instance inst;
        if (i % 2 == 0) {
            const VertexSet pools[2] = {xs, ys};
            inst = detail::planted(rng, c4, pools, n, density, 0.5).instance;
        } else {
            auto side = detail::random_sides(rng, n);
            inst = Instance{c4, detail::random_bipartite(rng, side, density), {}};
            for (Vertex v = 0; v < n; ++v)
                inst.lists.push_back(detail::random_subset(rng, side[v] ? xs : ys, 0.75));
        }
        SolveResult oracle = solve_bruteforce(inst);
        detail::compare(tally, inst, solve_c4(inst), oracle, "c4");
        C4Reduction red = reduce_c4_to_p3(inst);
        const bool both = solve_bruteforce(red.first).status == Status::yes &&
                          solve_bruteforce(red.second).status == Status::yes;
        if (both != (oracle.status == Status::yes)) {
            ++conj_mismatch;
            tally.fail("conjunction of the reduced instances disagrees");
        }
    }
    std::ostringstream d;
    d << tally.summary() << "; " << conj_mismatch << " conjunction mismatches";
    return detail::finish(2, "C4 pipeline agrees with brute force", tally.ok() && conj_mismatch == 0, d.str(), clock);
}

/// Criterion 3: lift_to_base then brute force equals brute force on H*.
inline Outcome criterion_3(std::uint64_t seed)
{
    detail::Stopwatch clock;
    detail::Tally tally;
    Rng rng(seed ^ 0x0303);
    const Graph bases[3] = {graphs::complete(3), graphs::edge_one_loop(), graphs::edge_two_loops()};
    for (const Graph& base : bases) {
        const AssociatedBipartite star = associated_bipartite(base);
        VertexSet primes, doubles;
        for (Vertex a = 0; a < base.order(); ++a) {
            primes.insert(star.prime(a));
            doubles.insert(star.double_prime(a));
        }
        for (int i = 0; i < c3_count_per_target; ++i) {
            const int n = detail::uniform(rng, 1, c3_max_n);
            const double density = 0.2 + 0.7 * detail::unit(rng);
            const VertexSet pools[2] = {doubles, primes};
            Instance inst;
            std::vector<std::uint8_t> side;
            if (i % 2 == 0) {
                auto p = detail::planted(rng, star.graph, pools, n, density, 0.4);
                inst = std::move(p.instance);
                side = std::move(p.side);
            } else {
                side = detail::random_sides(rng, n);
                inst = Instance{star.graph, detail::random_bipartite(rng, side, density), {}};
                for (Vertex v = 0; v < n; ++v) inst.lists.push_back(detail::random_subset(rng, pools[side[v]], 0.6));
            }
            LiftedInstance lifted = lift_to_base(inst, base, side);
            SolveResult via = solve_bruteforce(lifted.instance);
            if (via.status == Status::yes) via.witness = lower_witness(lifted, via.witness);
            detail::compare(tally, inst, via, solve_bruteforce(inst), "lift");
        }
    }
    return detail::finish(3, "H* lift preserves answers", tally.ok(), tally.summary(), clock);
}

/// Criterion 4: solve_poly against brute force for K1, K1° and K2.
inline Outcome criterion_4(std::uint64_t seed)
{
    detail::Stopwatch clock;
    detail::Tally tally;
    Rng rng(seed ^ 0x0404);
    const Graph k1(1), k1_loop = graphs::looped_vertex(), k2 = graphs::complete(2);
    const VertexSet k2_options[4] = {VertexSet{}, VertexSet{0}, VertexSet{1}, VertexSet{0, 1}};
    auto run = [&](const Instance& inst) { detail::compare(tally, inst, solve_poly(inst), solve_bruteforce(inst), "poly"); };
    for (int n = 1; n <= c4_max_n; ++n)
        for (const Graph& g : enumerate::all_graphs(n)) {
            // K1 and K1°: every list is empty or the single vertex.
            for (std::uint32_t mask = 0; mask < (1U << n); ++mask)
                for (const Graph* h : {&k1, &k1_loop}) {
                    Instance inst{*h, g, {}};
                    for (Vertex v = 0; v < n; ++v) inst.lists.push_back(mask >> v & 1U ? VertexSet{0} : VertexSet{});
                    run(inst);
                }
            // K2: every pattern up to swapping the two target vertices on
            // small or bipartite graphs, at most one empty list beyond six
            // vertices; sampled patterns on larger non-bipartite graphs.
            const bool full = n <= c4_full_patterns_max_n;
            if (full || is_bipartite(g)) {
                std::vector<int> digit(static_cast<std::size_t>(n), 0);
                for (;;) {
                    int empties = 0, first_single = -1;
                    for (Vertex v = 0; v < n; ++v) {
                        empties += digit[v] == 0;
                        if (first_single < 0 && (digit[v] == 1 || digit[v] == 2)) first_single = digit[v];
                    }
                    if ((full || empties <= 1) && first_single != 2) {
                        Instance inst{k2, g, {}};
                        for (Vertex v = 0; v < n; ++v) inst.lists.push_back(k2_options[digit[v]]);
                        run(inst);
                    }
                    Vertex v = 0;
                    for (; v < n; ++v) {
                        if (++digit[v] < 4) break;
                        digit[v] = 0;
                    }
                    if (v == n) break;
                }
            } else {
                for (int s = 0; s <= c4_sampled_patterns; ++s) {
                    Instance inst{k2, g, {}};
                    for (Vertex v = 0; v < n; ++v)
                        inst.lists.push_back(s == 0 ? VertexSet{0, 1} : k2_options[detail::uniform(rng, 0, 3)]);
                    run(inst);
                }
            }
        }
    return detail::finish(4, "polynomial cases agree with brute force", tally.ok(), tally.summary(), clock);
}

/// Criterion 5: every formula with at most three variables and two
/// clauses through the four base generators.
inline Outcome criterion_5()
{
    detail::Stopwatch clock;
    long long cases = 0, wrong = 0, unknown = 0;
    std::string first;
    for (int m = 1; m <= c5_max_clauses; ++m)
        for (const CnfFormula& f : enumerate::all_formulas(m, c5_max_vars)) {
            const bool sat = brute_force_sat(f).has_value();
            const bool nae = brute_force_nae_sat(f).has_value();
            struct Case {
                const char* name;
                GadgetOutput out;
                bool expected;
            };
            Case cases_here[4] = {{"k13", gen_k13(f), sat},
                                  {"p4", gen_p4(f), sat},
                                  {"k2loops", gen_k2loops(f), sat},
                                  {"nae-p3", gen_nae_p3(f, 1), nae}};
            for (const Case& c : cases_here) {
                ++cases;
                SolveResult r = solve_bruteforce(c.out.instance, c5_budget);
                if (r.status == Status::budget_exceeded) ++unknown;
                const bool yes = r.status == Status::yes;
                const bool bad = yes != c.expected || (yes && !verify_solution(c.out.instance, r.witness).accepted);
                if (bad || r.status == Status::budget_exceeded) {
                    ++wrong;
                    if (first.empty()) first = std::string(c.name) + " on " + to_text(f, write_dimacs);
                }
            }
        }
    const double t = clock.seconds();
    std::ostringstream d;
    d << cases << " generated instances, " << wrong << " disagreements, " << unknown << " over budget; " << t
      << " s (limit " << c5_time_limit_s << " s)";
    if (!first.empty()) d << "; first: " << first;
    return detail::finish(5, "gadget soundness and completeness", wrong == 0 && t < c5_time_limit_s, d.str(), clock);
}

inline CnfFormula random_formula(Rng& rng, int vars, int clauses)
{
    CnfFormula f;
    f.num_vars = vars;
    for (int c = 0; c < clauses; ++c) {
        Clause cl;
        for (Literal& l : cl) l = detail::uniform(rng, 1, vars) * (detail::uniform(rng, 0, 1) ? 1 : -1);
        f.clauses.push_back(cl);
    }
    return f;
}

/// Criterion 6: induced-path freeness of the three base constructions and
/// the degree, girth and spacing audit of the NAE construction.
inline Outcome criterion_6(std::uint64_t seed)
{
    detail::Stopwatch clock;
    Rng rng(seed ^ 0x0606);
    long long checks = 0, failures = 0;
    std::string first;
    auto check = [&](bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            if (first.empty()) first = what;
        }
    };
    for (int i = 0; i < c6_corpus; ++i) {
        const CnfFormula f = random_formula(rng, detail::uniform(rng, 2, 5), detail::uniform(rng, 1, 5));
        check(!find_induced(gen_k13(f).instance.source, graphs::path(10)), "k13 output has an induced P10");
        check(!find_induced(gen_p4(f).instance.source, graphs::path(14)), "p4 output has an induced P14");
        check(!find_induced(gen_k2loops(f).instance.source, graphs::path(12)), "k2loops output has an induced P12");
        const int p = 1 + i % 4;
        const Graph g = gen_nae_p3(f, p).instance.source;
        bool spacing = true;
        std::vector<Vertex> threes;
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.degree(v) == 3) threes.push_back(v);
        for (Vertex s : threes) {
            std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
            std::vector<Vertex> queue{s};
            dist[s] = 0;
            for (std::size_t k = 0; k < queue.size(); ++k)
                for (Vertex w : g.neighbors(queue[k]))
                    if (dist[w] < 0) {
                        dist[w] = dist[queue[k]] + 1;
                        queue.push_back(w);
                    }
            for (Vertex t : threes)
                if (t != s && dist[t] >= 0 && dist[t] < p) spacing = false;
        }
        check(max_degree(g) == 3 && girth(g) >= p && spacing, "nae-p3 output fails the degree, girth or spacing audit");
    }
    std::ostringstream d;
    d << checks << " structural checks on " << c6_corpus << " formulas, " << failures << " failures";
    if (!first.empty()) d << "; first: " << first;
    return detail::finish(6, "structural certificates of generated graphs", failures == 0, d.str(), clock);
}

namespace detail {

/// All list homomorphisms under which every vertex in `must_be_happy` is
/// happy, by plain enumeration.
inline std::vector<Homomorphism> happy_homomorphisms(const Instance& inst, const std::vector<Vertex>& must_be_happy)
{
    const int n = inst.source.order();
    std::vector<Homomorphism> out;
    Homomorphism h(static_cast<std::size_t>(n), -1);
    auto rec = [&](auto&& self, Vertex v) -> void {
        if (v == n) {
            for (Vertex u : must_be_happy)
                if (!missing_neighbors(inst, h, u).empty()) return;
            out.push_back(h);
            return;
        }
        inst.lists[v].for_each([&](Vertex a) {
            for (Vertex w : inst.source.neighbors(v))
                if (w < v && !inst.target.adjacent(a, h[w])) return;
            h[v] = a;
            self(self, v + 1);
            h[v] = -1;
        });
    };
    rec(rec, 0);
    return out;
}

inline std::vector<std::pair<std::string, Graph>> zoo()
{
    auto make = [](int n, std::vector<std::pair<int, int>> edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    };
    return {{"K3", graphs::complete(3)},
            {"P3 with a looped middle", make(3, {{0, 1}, {1, 2}, {1, 1}})},
            {"P3 with a looped end", make(3, {{0, 1}, {1, 2}, {0, 0}})},
            {"K13", graphs::star(3)},
            {"P4", graphs::path(4)},
            {"C4", graphs::cycle(4)},
            {"paw", make(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}})},
            {"diamond", make(4, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}})},
            {"K4", graphs::complete(4)},
            {"bull", make(5, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 4}})}};
}

} // namespace detail

/// Criterion 7: the three variable-gadget claims by exhaustive count, and
/// the cross and funny gadget postconditions over a zoo of small targets.
inline Outcome criterion_7()
{
    detail::Stopwatch clock;
    std::vector<std::string> failures;
    auto claim = [&](const char* name, const GadgetOutput& g, const std::vector<Vertex>& happy,
                     const std::vector<Vertex>& shown, std::vector<std::vector<Vertex>> expected) {
        auto homs = detail::happy_homomorphisms(g.instance, happy);
        std::vector<std::vector<Vertex>> seen;
        for (const auto& h : homs) {
            std::vector<Vertex> part;
            for (Vertex v : shown) part.push_back(h[v]);
            seen.push_back(part);
        }
        std::sort(seen.begin(), seen.end());
        std::sort(expected.begin(), expected.end());
        if (homs.size() != 2 || seen != expected) failures.push_back(std::string(name) + " claim: " + std::to_string(homs.size()) + " maps");
    };
    {
        GadgetOutput g = variable_gadget_k13();
        std::vector<Vertex> all{0, 1, 2, 3};
        claim("K13", g, all, all, {{1, 2, 0, 3}, {2, 1, 0, 3}});
    }
    {
        GadgetOutput g = variable_gadget_p4(1, 1);
        const auto& handle = g.annotations.at("handle");
        claim("P4", g, handle, handle, {{0, 1, 2, 3, 2}, {2, 3, 2, 1, 0}});
    }
    {
        GadgetOutput g = variable_gadget_k2loops(1, 1);
        const auto& handle = g.annotations.at("handle");
        claim("K2oo", g, handle, handle, {{0, 0, 1}, {1, 0, 0}});
    }

    int cross = 0, funny = 0, skipped = 0;
    const auto zoo = detail::zoo();
    for (const auto& [name, h] : zoo) {
        for (Vertex u = 0; u < h.order(); ++u)
            for (Vertex v = 0; v < h.order(); ++v) {
                GadgetOutput z = cross_gadget(h, u, v);
                const Vertex root = z.annotations.at("root")[0];
                ++cross;
                for (int i = 0; i < 2; ++i)
                    if (!verify_solution(z.instance, z.witnesses[i]).accepted || z.witnesses[i][root] != (i == 0 ? u : v))
                        failures.push_back("cross gadget on " + name);
            }
        for (Vertex a = 0; a < h.order(); ++a)
            for (Vertex m = 0; m < h.order(); ++m)
                for (Vertex c = a + 1; c < h.order(); ++c) {
                    if (m == a || m == c || !h.adjacent(a, m) || !h.adjacent(m, c)) continue;
                    const DesignatedP3 d{a, m, c};
                    for (FunnyList s : {FunnyList::two, FunnyList::one_three}) {
                        const bool applies = s == FunnyList::two
                                                 ? !is_trivial_vertex(h, d, m)
                                                 : !is_trivial_vertex(h, d, a) || !is_trivial_vertex(h, d, c);
                        if (!applies) continue;
                        auto p = min_funny_p(h, s, d, 8);
                        if (!p) {
                            ++skipped;
                            continue;
                        }
                        GadgetOutput g;
                        try {
                            g = funny_gadget(h, s, d, *p, c7_gadget_cap);
                        } catch (const Error& e) {
                            if (e.code() != "too-large") throw;
                            ++skipped;
                            continue;
                        }
                        ++funny;
                        const Instance& inst = g.instance;
                        const Vertex root = g.annotations.at("root")[0];
                        bool ok = girth(inst.source) >= *p;
                        if (s == FunnyList::two) {
                            const Homomorphism& h2 = g.witnesses.at(0);
                            ok = ok && is_list_homomorphism(inst, h2).ok && h2[root] == m;
                            const auto happy = happy_vertices(inst, h2);
                            for (Vertex x = 0; x < inst.source.order(); ++x)
                                if (x != root && !std::binary_search(happy.begin(), happy.end(), x)) ok = false;
                            VertexSet image;
                            for (Vertex w : inst.source.neighbors(root)) {
                                image.insert(h2[w]);
                                if (inst.lists[w].contains(a) || inst.lists[w].contains(c)) ok = false;
                            }
                            ok = ok && image == (h.neighbor_set(m) - VertexSet{a, c});
                        } else {
                            ok = ok && g.witnesses.size() == 2 && verify_solution(inst, g.witnesses[0]).accepted &&
                                 verify_solution(inst, g.witnesses[1]).accepted && g.witnesses[0][root] == a &&
                                 g.witnesses[1][root] == c;
                        }
                        if (!ok) failures.push_back("funny gadget on " + name);
                    }
                }
    }
    std::ostringstream d;
    d << "3 variable claims, " << cross << " cross gadgets and " << funny << " funny gadgets over a zoo of " << zoo.size()
      << " targets (" << skipped << " funny cases over the size cap); " << failures.size() << " failures";
    if (!failures.empty()) d << "; first: " << failures.front();
    const bool ok = failures.empty() && static_cast<int>(zoo.size()) == c7_zoo_size && funny > 0;
    return detail::finish(7, "gadget-local claims", ok, d.str(), clock);
}

/// Criterion 8: dp_solve against enumeration of all X colourings, under two
/// different decompositions.
inline Outcome criterion_8(std::uint64_t seed)
{
    detail::Stopwatch clock;
    Rng rng(seed ^ 0x0808);
    long long cases = 0, wrong = 0, feasible = 0, bound = 0;
    for (int i = 0; i < c8_count; ++i) {
        const int n = detail::uniform(rng, 1, c8_max_n);
        AuxInstance aux;
        aux.is_x = detail::random_sides(rng, n);
        aux.graph = detail::random_bipartite(rng, aux.is_x, 0.2 + 0.6 * detail::unit(rng));
        for (Vertex v = 0; v < n; ++v) {
            aux.mask.push_back(static_cast<std::uint8_t>(aux.is_x[v] ? (detail::unit(rng) < 0.8 ? 3 : detail::uniform(rng, 0, 2))
                                                                      : detail::uniform(rng, 0, 3)));
            aux.origin.push_back(v);
        }
        // Direct enumeration.
        std::vector<Vertex> xs;
        for (Vertex v = 0; v < n; ++v)
            if (aux.is_x[v]) xs.push_back(v);
        bool direct = false;
        std::vector<std::uint8_t> colour(static_cast<std::size_t>(n), 0);
        for (std::uint32_t bits = 0; bits < (1U << xs.size()) && !direct; ++bits) {
            bool ok = true;
            for (std::size_t k = 0; k < xs.size(); ++k) {
                colour[xs[k]] = (bits >> k & 1U) ? colour_three : colour_one;
                if (!(aux.mask[xs[k]] & colour[xs[k]])) ok = false;
            }
            for (Vertex y = 0; y < n && ok; ++y) {
                if (aux.is_x[y]) continue;
                std::uint8_t seen = 0;
                for (Vertex x : aux.graph.neighbors(y)) seen |= colour[x];
                if ((aux.mask[y] & ~seen) != 0) ok = false;
            }
            direct = ok;
        }
        ++cases;
        feasible += direct;
        for (EliminationHeuristic heuristic : {EliminationHeuristic::min_fill, EliminationHeuristic::min_degree}) {
            DpResult r = dp_solve(aux, decompose(aux.graph, heuristic), true);
            if (r.feasible != direct) ++wrong;
            if (r.feasible) {
                for (Vertex y = 0; y < n; ++y) {
                    if (aux.is_x[y]) {
                        if (!(aux.mask[y] & r.colouring[y]) || r.colouring[y] == both_colours) ++wrong;
                        continue;
                    }
                    std::uint8_t seen = 0;
                    for (Vertex x : aux.graph.neighbors(y)) seen |= r.colouring[x];
                    if ((aux.mask[y] & ~seen) != 0) ++wrong;
                }
            }
            for (const DpNodeStats& s : r.stats.nodes) {
                double cap = std::pow(2.0, s.x_count) * std::pow(3.0, s.y_count);
                double raw = std::pow(2.0, s.x_count) * std::pow(4.0, s.y_count);
                if (static_cast<double>(s.survived) > cap || static_cast<double>(s.materialized) > raw) ++bound;
            }
        }
    }
    std::ostringstream d;
    d << cases << " auxiliary instances (" << feasible << " feasible), two decompositions each, " << wrong
      << " disagreements, " << bound << " state-bound violations";
    return detail::finish(8, "DP agrees with direct enumeration", wrong == 0 && bound == 0, d.str(), clock);
}

/// NAE formula for the performance smoke: x1 differs from every other
/// variable, forced by clauses NAE(x1, xi, xi). The only solutions set x1
/// against all the rest, which is the last branch a left-first search over
/// the variable cycles reaches.
inline CnfFormula c10_formula(int vars)
{
    CnfFormula f;
    f.num_vars = vars;
    for (int i = 2; i <= vars; ++i) f.clauses.push_back({1, i, i});
    return f;
}

/// Criterion 10: a generated 5,000-vertex NAE instance is solved quickly
/// by solve_p3 while the brute force runs out of budget.
inline Outcome criterion_10()
{
    detail::Stopwatch clock;
    int vars = 2;
    GadgetOutput g;
    for (;; ++vars) {
        g = gen_nae_p3(c10_formula(vars), c10_p);
        if (g.instance.source.order() >= c10_min_vertices) break;
    }
    const Instance& inst = g.instance;
    detail::Stopwatch solve_clock;
    SolveResult fast = solve_p3(inst);
    const double t = solve_clock.seconds();
    const bool fast_ok = fast.status == Status::yes && verify_solution(inst, fast.witness).accepted;
    SolveResult slow = solve_bruteforce(inst, c10_budget);
    std::ostringstream d;
    d << inst.source.order() << " vertices (" << vars << " variables, p = " << c10_p << "); solve_p3 "
      << to_string(fast.status) << " in " << t << " s (limit " << c10_time_limit_s << " s, width " << fast.stats.max_width
      << "); brute force " << to_string(slow.status) << " after " << slow.stats.nodes << " nodes (budget " << c10_budget << ")";
    const bool ok = fast_ok && t < c10_time_limit_s && slow.status == Status::budget_exceeded;
    return detail::finish(10, "performance smoke", ok, d.str(), clock);
}

enum class Suite { oracle, gadgets, structural, perf, all };

/// Criteria by suite: oracle 1-4 and 9, gadgets 5 and 7, structural 6 and
/// 8, perf 10.
inline std::vector<Outcome> run_suite(Suite suite, std::uint64_t seed, const std::function<void(const Outcome&)>& report)
{
    std::vector<Outcome> out;
    auto add = [&](Outcome o) {
        if (report) report(o);
        out.push_back(std::move(o));
    };
    const bool all = suite == Suite::all;
    if (all || suite == Suite::oracle) {
        auto pair = criterion_1_and_9(seed);
        add(pair[0]);
        add(criterion_2(seed));
        add(criterion_3(seed));
        add(criterion_4(seed));
        add(pair[1]);
    }
    if (all || suite == Suite::gadgets) {
        add(criterion_5());
        add(criterion_7());
    }
    if (all || suite == Suite::structural) {
        add(criterion_6(seed));
        add(criterion_8(seed));
    }
    if (all || suite == Suite::perf) add(criterion_10());
    std::sort(out.begin(), out.end(), [](const Outcome& a, const Outcome& b) { return a.id < b.id; });
    return out;
}

inline std::string format(const Outcome& o)
{
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(2);
    s << (o.passed ? "PASS" : "FAIL") << " criterion " << o.id << ": " << o.title << " (" << o.detail << ") ["
      << o.seconds << " s]";
    return s.str();
}

} // namespace llshom::acceptance

#endif // LLSHOM_TOOLS_ACCEPTANCE_HPP
