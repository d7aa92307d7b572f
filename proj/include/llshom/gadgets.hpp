#ifndef LLSHOM_GADGETS_HPP
#define LLSHOM_GADGETS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cnf.hpp"
#include "error.hpp"
#include "induced.hpp"
#include "isomorphism.hpp"
#include "verifier.hpp"

namespace llshom {

/// A generated instance plus named vertex roles. `witnesses` holds the
/// canonical maps of gadgets that come with them (projections, h_2, ...).
struct GadgetOutput {
    Instance instance;
    std::map<std::string, std::vector<Vertex>> annotations;
    std::vector<Homomorphism> witnesses;
};

/// Upper bound on generated source vertices; larger builds fail with
/// Error("too-large").
inline constexpr std::size_t gadget_vertex_cap = 2'000'000;

namespace detail {

class Builder {
public:
    explicit Builder(Graph target) { out_.instance.target = std::move(target); }

    Vertex add(VertexSet list, const char* role = nullptr)
    {
        if (static_cast<std::size_t>(out_.instance.source.order()) >= gadget_vertex_cap)
            throw Error("too-large", "generated instance exceeds " + std::to_string(gadget_vertex_cap) + " vertices");
        Vertex v = out_.instance.source.add_vertex();
        out_.instance.lists.push_back(list);
        if (role) tag(role, v);
        return v;
    }

    void edge(Vertex u, Vertex v) { out_.instance.source.add_edge(u, v); }
    void tag(const std::string& role, Vertex v) { out_.annotations[role].push_back(v); }

    /// Copies `part` (same target) into the instance; `part` vertex `glue`
    /// is identified with `host` when both are given. Returns the vertex map.
    std::vector<Vertex> append(const Instance& part, Vertex glue = -1, Vertex host = -1)
    {
        std::vector<Vertex> map(static_cast<std::size_t>(part.source.order()));
        for (Vertex v = 0; v < part.source.order(); ++v) map[v] = v == glue ? host : add(part.lists[v]);
        for (const Edge& e : part.source.edges()) edge(map[e.u], map[e.v]);
        return map;
    }

    Instance& instance() { return out_.instance; }
    GadgetOutput finish() { return std::move(out_); }

private:
    GadgetOutput out_;
};

inline Graph k2_two_loops() { return graphs::edge_two_loops(); }

inline std::vector<std::vector<Literal>> occurrences(const CnfFormula& f)
{
    std::vector<std::vector<Literal>> occ(static_cast<std::size_t>(f.num_vars) + 1);
    for (const Clause& c : f.clauses)
        for (Literal l : c) occ[variable_of(l)].push_back(l);
    return occ;
}

inline int count_sign(const std::vector<Literal>& occ, bool positive)
{
    return static_cast<int>(std::count_if(occ.begin(), occ.end(), [&](Literal l) { return is_positive(l) == positive; }));
}

// Broom handles shared by the P4 and K2°° constructions: handle vertices
// in order, then positive leaves on the first end and negative leaves on
// the last.
struct Broom {
    std::vector<Vertex> handle;
    std::vector<Vertex> positive;
    std::vector<Vertex> negative;
};

inline Broom add_broom(Builder& b, const std::vector<VertexSet>& handle_lists, VertexSet leaf_list, int pos, int neg)
{
    Broom br;
    for (VertexSet l : handle_lists) {
        br.handle.push_back(b.add(l, "handle"));
        if (br.handle.size() > 1) b.edge(br.handle[br.handle.size() - 2], br.handle.back());
    }
    for (int i = 0; i < pos; ++i) {
        br.positive.push_back(b.add(leaf_list, "leaf_pos"));
        b.edge(br.handle.front(), br.positive.back());
    }
    for (int i = 0; i < neg; ++i) {
        br.negative.push_back(b.add(leaf_list, "leaf_neg"));
        b.edge(br.handle.back(), br.negative.back());
    }
    return br;
}

struct K13Variable {
    Vertex x, x_neg, v0, w;
};

inline K13Variable add_k13_variable(Builder& b)
{
    K13Variable var;
    var.x = b.add(VertexSet{1, 2}, "x");
    var.x_neg = b.add(VertexSet{1, 2}, "x_neg");
    var.v0 = b.add(VertexSet{0}, "v0");
    var.w = b.add(VertexSet{3}, "w");
    b.edge(var.v0, var.x);
    b.edge(var.v0, var.x_neg);
    b.edge(var.v0, var.w);
    return var;
}

/// Subdivided claw with per-depth lists; returns the centre and arms[i][d]
/// (depth d + 1 on arm i).
inline std::pair<Vertex, std::vector<std::vector<Vertex>>> add_clause_claw(Builder& b, VertexSet centre_list,
                                                                          const std::vector<VertexSet>& depth_lists)
{
    Vertex y = b.add(centre_list, "center");
    std::vector<std::vector<Vertex>> arms(3);
    for (auto& arm : arms) {
        Vertex prev = y;
        for (std::size_t d = 0; d < depth_lists.size(); ++d) {
            Vertex s = b.add(depth_lists[d], ("s" + std::to_string(d + 1)).c_str());
            b.edge(prev, s);
            arm.push_back(s);
            prev = s;
        }
    }
    return {y, arms};
}

} // namespace detail

/// Isolated K13 variable gadget: (x, x', v0, w) are vertices 0..3.
inline GadgetOutput variable_gadget_k13()
{
    detail::Builder b(graphs::star(3));
    detail::add_k13_variable(b);
    return b.finish();
}

/// Isolated P4 broom: handle r1..r5 first, then the leaves.
inline GadgetOutput variable_gadget_p4(int positive = 1, int negative = 1)
{
    detail::Builder b(graphs::path(4));
    detail::add_broom(b, {VertexSet{0, 2}, VertexSet{1, 3}, VertexSet{2}, VertexSet{1, 3}, VertexSet{0, 2}}, VertexSet{1},
                      positive, negative);
    return b.finish();
}

/// Isolated K2°° broom: handle r1..r3 first, then the leaves.
inline GadgetOutput variable_gadget_k2loops(int positive = 1, int negative = 1)
{
    detail::Builder b(detail::k2_two_loops());
    detail::add_broom(b, {VertexSet{0, 1}, VertexSet{0}, VertexSet{0, 1}}, VertexSet{1}, positive, negative);
    return b.finish();
}

/// 3-SAT to LLSHom(K_{1,3}); H has centre 0 and leaves 1, 2, 3.
inline GadgetOutput gen_k13(const CnfFormula& input)
{
    const CnfFormula f = pad_polarity(input);
    detail::Builder b(graphs::star(3));
    std::vector<detail::K13Variable> vars(static_cast<std::size_t>(f.num_vars) + 1);
    for (int v = 1; v <= f.num_vars; ++v) vars[v] = detail::add_k13_variable(b);
    for (const Clause& c : f.clauses) {
        auto [y, arms] = detail::add_clause_claw(b, VertexSet{0}, {VertexSet{1, 3}, VertexSet{0}, VertexSet{2, 3}});
        for (int i = 0; i < 3; ++i) {
            const auto& var = vars[variable_of(c[i])];
            b.edge(arms[i][1], is_positive(c[i]) ? var.x : var.x_neg);
        }
        for (int v = 1; v <= f.num_vars; ++v) {
            b.edge(y, vars[v].x);
            b.edge(y, vars[v].x_neg);
        }
    }
    return b.finish();
}

namespace detail {

// Shared wiring of the P4 and K2°° reductions; `wire_depth` is the clause
// arm depth (1-based) joined to an occurrence leaf.
inline GadgetOutput broom_reduction(const CnfFormula& input, Graph target, const std::vector<VertexSet>& handle_lists,
                                    VertexSet leaf_list, VertexSet centre_list, const std::vector<VertexSet>& depth_lists,
                                    std::size_t wire_depth)
{
    const CnfFormula f = pad_polarity(input);
    const auto occ = occurrences(f);
    Builder b(std::move(target));
    std::vector<Broom> brooms(static_cast<std::size_t>(f.num_vars) + 1);
    std::vector<Vertex> all_leaves;
    for (int v = 1; v <= f.num_vars; ++v) {
        brooms[v] = add_broom(b, handle_lists, leaf_list, count_sign(occ[v], true), count_sign(occ[v], false));
        all_leaves.insert(all_leaves.end(), brooms[v].positive.begin(), brooms[v].positive.end());
        all_leaves.insert(all_leaves.end(), brooms[v].negative.begin(), brooms[v].negative.end());
    }
    std::vector<std::size_t> next_pos(brooms.size(), 0), next_neg(brooms.size(), 0);
    for (const Clause& c : f.clauses) {
        auto [y, arms] = add_clause_claw(b, centre_list, depth_lists);
        for (int i = 0; i < 3; ++i) {
            const int v = variable_of(c[i]);
            Vertex leaf = is_positive(c[i]) ? brooms[v].positive[next_pos[v]++] : brooms[v].negative[next_neg[v]++];
            b.edge(arms[i][wire_depth - 1], leaf);
        }
        for (Vertex leaf : all_leaves) b.edge(y, leaf);
    }
    return b.finish();
}

} // namespace detail

/// 3-SAT to LLSHom(P4); H is the path 0-1-2-3.
inline GadgetOutput gen_p4(const CnfFormula& f)
{
    return detail::broom_reduction(f, graphs::path(4),
                                   {VertexSet{0, 2}, VertexSet{1, 3}, VertexSet{2}, VertexSet{1, 3}, VertexSet{0, 2}},
                                   VertexSet{1}, VertexSet{2}, {VertexSet{1, 3}, VertexSet{0, 2}}, 2);
}

/// 3-SAT to LLSHom(K2°°); H is the edge 0-1 with loops at both ends.
inline GadgetOutput gen_k2loops(const CnfFormula& f)
{
    return detail::broom_reduction(f, detail::k2_two_loops(), {VertexSet{0, 1}, VertexSet{0}, VertexSet{0, 1}},
                                   VertexSet{1}, VertexSet{1}, {VertexSet{0, 1}, VertexSet{0}, VertexSet{0, 1}}, 3);
}

/// Empty optional when G has max degree 3, girth at least p and pairwise
/// distance at least p between degree-3 vertices.
inline std::optional<std::string> audit_nae_p3(const Graph& g, int p)
{
    if (max_degree(g) != 3) return "maximum degree is " + std::to_string(max_degree(g)) + ", expected 3";
    if (!girth_at_least(g, p)) return "girth is below " + std::to_string(p);
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> touched, queue;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (g.degree(s) != 3) continue;
        for (Vertex v : touched) dist[v] = -1;
        touched.assign({s});
        queue.assign({s});
        dist[s] = 0;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            Vertex v = queue[i];
            if (v != s && g.degree(v) == 3) return "degree-3 vertices " + std::to_string(s) + " and " + std::to_string(v) +
                                                   " are closer than " + std::to_string(p);
            if (dist[v] + 1 >= p) continue;
            for (Vertex w : g.neighbors(v))
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    touched.push_back(w);
                    queue.push_back(w);
                }
        }
    }
    return std::nullopt;
}

/// NAE-3-SAT to LLSHom(P3) on the path 0-1-2 (1 is the middle). Variables
/// with r occurrences become cycles of length 4pr with r heads 4p apart;
/// clauses become subdivided claws with arms of 4p (positive) or 4p + 2
/// (negative) vertices.
inline GadgetOutput gen_nae_p3(const CnfFormula& input, int p)
{
    if (p < 1 || p > 1'000'000) throw std::invalid_argument("p must be a positive integer");
    const CnfFormula f = pad_polarity(input);
    const auto occ = detail::occurrences(f);
    const VertexSet ends{0, 2}, middle{1};
    detail::Builder b(graphs::path(3));
    std::vector<std::vector<Vertex>> heads(occ.size());
    for (int v = 1; v <= f.num_vars; ++v) {
        const int len = 4 * p * static_cast<int>(occ[v].size());
        Vertex first = -1, prev = -1;
        for (int i = 0; i < len; ++i) {
            Vertex c = b.add(i % 2 == 0 ? ends : middle);
            if (i % (4 * p) == 0) {
                heads[v].push_back(c);
                b.tag("heads", c);
            }
            if (prev >= 0) b.edge(prev, c);
            else first = c;
            prev = c;
        }
        if (len > 0) b.edge(prev, first);
    }
    std::vector<std::size_t> next(occ.size(), 0);
    for (const Clause& c : f.clauses) {
        Vertex centre = b.add(middle, "centers");
        for (Literal l : c) {
            const int len = is_positive(l) ? 4 * p : 4 * p + 2;
            Vertex prev = heads[variable_of(l)][next[variable_of(l)]++];
            for (int k = 1; k <= len; ++k) {
                Vertex a = b.add(k % 2 == 0 ? ends : middle, "arms");
                b.edge(prev, a);
                prev = a;
            }
            b.edge(prev, centre);
        }
    }
    GadgetOutput out = b.finish();
    if (auto err = audit_nae_p3(out.instance.source, p)) throw std::logic_error("NAE construction audit failed: " + *err);
    return out;
}

/// Z = H×H with L((u,v)) = {u,v} at the root and full lists elsewhere. Both
/// projections are checked to be locally surjective before returning.
inline GadgetOutput cross_gadget(const Graph& h, Vertex u, Vertex v)
{
    if (u < 0 || v < 0 || u >= h.order() || v >= h.order()) throw std::invalid_argument("cross gadget vertex out of range");
    for (Vertex a = 0; a < h.order(); ++a)
        if (h.degree(a) == 0) throw std::invalid_argument("cross gadget needs a target without isolated vertices");
    const ProductGraph z = direct_product(h, h);
    GadgetOutput out;
    out.instance = Instance::full_lists(h, z.graph);
    const Vertex root = z.index(u, v);
    out.instance.lists[root] = VertexSet{u, v};
    out.annotations["root"] = {root};
    Homomorphism hu(static_cast<std::size_t>(z.graph.order())), hv(hu.size());
    for (Vertex x = 0; x < z.graph.order(); ++x) std::tie(hu[x], hv[x]) = z.pair(x);
    for (const Homomorphism* h2 : {&hu, &hv}) {
        Verdict verdict = verify_solution(out.instance, *h2);
        if (!verdict.accepted) throw std::logic_error("cross gadget projection rejected: " + verdict.diagnostic);
    }
    out.witnesses = {hu, hv};
    return out;
}

/// The double cover G×K2: vertex v becomes v and v + n with the same list;
/// witnesses are pulled back and annotations name the first copy. The cover
/// is loopless and projects locally bijectively onto G.
inline GadgetOutput loopless_cover(const GadgetOutput& g)
{
    GadgetOutput out;
    out.instance.target = g.instance.target;
    out.instance.source = associated_bipartite(g.instance.source).graph;
    out.instance.lists = g.instance.lists;
    out.instance.lists.insert(out.instance.lists.end(), g.instance.lists.begin(), g.instance.lists.end());
    out.annotations = g.annotations;
    for (const Homomorphism& h : g.witnesses) {
        Homomorphism lifted = h;
        lifted.insert(lifted.end(), h.begin(), h.end());
        out.witnesses.push_back(std::move(lifted));
    }
    return out;
}

/// A copy of H with L(a) = {a}; loopless (via the double cover) when H has
/// loops. Annotation "vertex" maps each H-vertex a to a copy of it.
inline GadgetOutput target_copy(const Graph& h)
{
    GadgetOutput out;
    out.instance.target = h;
    out.instance.source = h;
    Homomorphism id;
    for (Vertex a = 0; a < h.order(); ++a) {
        out.instance.lists.push_back(VertexSet::singleton(a));
        out.annotations["vertex"].push_back(a);
        id.push_back(a);
    }
    out.witnesses = {id};
    return h.has_loops() ? loopless_cover(out) : out;
}

/// The three vertices playing 1, 2, 3 in a P3 subgraph (2 the middle).
struct DesignatedP3 {
    Vertex one = -1;
    Vertex two = -1;
    Vertex three = -1;
};

/// Lexicographically least (one, two, three) with one < three, all
/// distinct, two adjacent to both.
inline std::optional<DesignatedP3> first_p3(const Graph& h)
{
    for (Vertex a = 0; a < h.order(); ++a)
        for (Vertex m = 0; m < h.order(); ++m) {
            if (m == a || !h.adjacent(a, m)) continue;
            for (Vertex c = a + 1; c < h.order(); ++c)
                if (c != m && h.adjacent(m, c)) return DesignatedP3{a, m, c};
        }
    return std::nullopt;
}

enum class FunnyList { two, one_three };

inline bool is_trivial_vertex(const Graph& h, const DesignatedP3& d, Vertex x)
{
    if (x == d.two) return h.neighbor_set(x).subset_of(VertexSet{d.one, d.three});
    return h.neighbor_set(x) == VertexSet::singleton(d.two);
}

namespace detail {

inline void check_designated(const Graph& h, const DesignatedP3& d)
{
    const int n = h.order();
    auto in = [n](Vertex x) { return x >= 0 && x < n; };
    if (!in(d.one) || !in(d.two) || !in(d.three) || d.one == d.two || d.two == d.three || d.one == d.three ||
        !h.adjacent(d.one, d.two) || !h.adjacent(d.two, d.three))
        throw std::invalid_argument("designated vertices do not form a P3 subgraph");
}

// State space of the BFS-like build: H itself (S = {2}) or H×H (S = {1,3}).
struct FunnySpace {
    Graph graph;
    Vertex seed;
    std::vector<VertexSet> list;              // list of a copy of each state
    std::vector<std::vector<Vertex>> project; // canonical maps on states
    VertexSet root_excluded;                  // states not used as root children
};

inline FunnySpace funny_space(const Graph& h, FunnyList s, const DesignatedP3& d)
{
    FunnySpace sp;
    if (s == FunnyList::two) {
        sp.graph = h;
        sp.seed = d.two;
        std::vector<Vertex> id;
        for (Vertex a = 0; a < h.order(); ++a) {
            sp.list.push_back(VertexSet::singleton(a));
            id.push_back(a);
        }
        sp.project = {id};
        sp.root_excluded = VertexSet{d.one, d.three};
    } else {
        const ProductGraph k = direct_product(h, h);
        sp.graph = k.graph;
        sp.seed = k.index(d.one, d.three);
        std::vector<Vertex> first, second;
        for (Vertex x = 0; x < k.graph.order(); ++x) {
            auto [a, b] = k.pair(x);
            sp.list.push_back(VertexSet{a, b});
            first.push_back(a);
            second.push_back(b);
        }
        sp.project = {first, second};
    }
    return sp;
}

// Children of a state; the root's children skip excluded states.
inline std::vector<Vertex> funny_children(const FunnySpace& sp, Vertex state, bool at_root)
{
    std::vector<Vertex> out;
    for (Vertex w : sp.graph.neighbors(state))
        if (!(at_root && !sp.root_excluded.empty() && sp.root_excluded.contains(w))) out.push_back(w);
    return out;
}

} // namespace detail

/// Least p for which every state needed by a leaf back edge has a copy in
/// levels 1..p, or none when no p up to `limit` works.
inline std::optional<int> min_funny_p(const Graph& h, FunnyList s, const DesignatedP3& d, int limit = 64)
{
    detail::check_designated(h, d);
    const detail::FunnySpace sp = detail::funny_space(h, s, d);
    const int n = sp.graph.order();
    for (int p = 1; p <= limit; ++p) {
        std::vector<char> level(static_cast<std::size_t>(n), 0), avail(level);
        for (Vertex w : detail::funny_children(sp, sp.seed, true)) level[w] = 1;
        for (int k = 1; k <= 2 * p; ++k) {
            if (k <= p)
                for (Vertex x = 0; x < n; ++x) avail[x] |= level[x];
            if (k == 2 * p) break;
            std::vector<char> nxt(static_cast<std::size_t>(n), 0);
            for (Vertex x = 0; x < n; ++x)
                if (level[x])
                    for (Vertex w : sp.graph.neighbors(x)) nxt[w] = 1;
            level = std::move(nxt);
        }
        bool ok = true;
        for (Vertex x = 0; x < n && ok; ++x)
            if (level[x])
                for (Vertex w : sp.graph.neighbors(x))
                    if (!avail[w]) ok = false;
        if (ok) return p;
    }
    return std::nullopt;
}

/// Funny gadget H_S rooted at vertex 0 with L(0) = S. Annotations: "root",
/// "leaves". Witnesses: h_2, or h_1 then h_3. Girth is at least p; the
/// postconditions are verified before returning.
inline GadgetOutput funny_gadget(const Graph& h, FunnyList s, const DesignatedP3& d, int p,
                                 std::size_t max_vertices = gadget_vertex_cap)
{
    detail::check_designated(h, d);
    if (!is_connected(h)) throw Error("precondition", "funny gadget needs a connected target");
    const bool nontrivial = s == FunnyList::two
                                ? !is_trivial_vertex(h, d, d.two)
                                : !is_trivial_vertex(h, d, d.one) || !is_trivial_vertex(h, d, d.three);
    if (!nontrivial) throw Error("precondition", "every vertex of the list is trivial; no gadget is needed");
    if (p < 1) throw Error("precondition", "p too small");
    const auto needed_p = min_funny_p(h, s, d, p);
    if (!needed_p) throw Error("precondition", "p too small: some vertex has no copy within the first p levels");

    const detail::FunnySpace sp = detail::funny_space(h, s, d);
    GadgetOutput out;
    out.instance.target = h;
    Graph& g = out.instance.source;
    std::vector<Vertex> state; // state of each copy
    std::vector<int> depth;
    auto add = [&](Vertex st, int dep) {
        if (state.size() >= max_vertices)
            throw Error("too-large", "funny gadget exceeds " + std::to_string(max_vertices) + " vertices");
        state.push_back(st);
        depth.push_back(dep);
        out.instance.lists.push_back(sp.list[st]);
        return g.add_vertex();
    };
    const Vertex root = add(sp.seed, 0);
    out.instance.lists[root] = s == FunnyList::two ? VertexSet{d.two} : VertexSet{d.one, d.three};
    std::vector<Vertex> frontier{root};
    for (int k = 1; k <= 2 * p; ++k) {
        std::vector<Vertex> next;
        for (Vertex parent : frontier)
            for (Vertex st : detail::funny_children(sp, state[parent], parent == root)) {
                Vertex c = add(st, k);
                g.add_edge(parent, c);
                next.push_back(c);
            }
        frontier = std::move(next);
    }

    // Copies in levels 1..p per state, in creation order.
    std::vector<std::vector<Vertex>> early(static_cast<std::size_t>(sp.graph.order()));
    for (Vertex x = 1; x < g.order() && depth[x] <= p; ++x) early[state[x]].push_back(x);

    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> touched;
    for (Vertex leaf : frontier) {
        for (Vertex w : sp.graph.neighbors(state[leaf])) {
            // Vertices within distance p - 2 of the leaf are unsafe targets.
            for (Vertex x : touched) dist[x] = -1;
            touched.assign({leaf});
            dist[leaf] = 0;
            for (std::size_t i = 0; i < touched.size(); ++i) {
                Vertex x = touched[i];
                if (dist[x] >= p - 2) continue;
                for (Vertex y : g.neighbors(x))
                    if (dist[y] < 0) {
                        dist[y] = dist[x] + 1;
                        touched.push_back(y);
                    }
            }
            Vertex target = -1;
            for (Vertex c : early[w])
                if (dist[c] < 0) {
                    target = c;
                    break;
                }
            if (target < 0) throw Error("precondition", "p too small: no back-edge target keeps the girth at least p");
            g.add_edge(leaf, target);
        }
    }
    for (Vertex x : touched) dist[x] = -1;

    out.annotations["root"] = {root};
    out.annotations["leaves"] = frontier;
    for (const auto& proj : sp.project) {
        Homomorphism hom(state.size());
        for (std::size_t x = 0; x < state.size(); ++x) hom[x] = proj[state[x]];
        out.witnesses.push_back(std::move(hom));
    }

    // Postconditions.
    for (const Homomorphism& hom : out.witnesses) {
        auto check = is_list_homomorphism(out.instance, hom);
        if (!check.ok) throw std::logic_error("funny gadget map is not a list homomorphism: " + check.message);
        for (Vertex x = 0; x < g.order(); ++x) {
            if (x == root && s == FunnyList::two) continue;
            if (!missing_neighbors(out.instance, hom, x).empty())
                throw std::logic_error("funny gadget vertex " + std::to_string(x) + " is unhappy");
        }
    }
    if (s == FunnyList::two) {
        VertexSet image;
        for (Vertex w : g.neighbors(root)) {
            image.insert(out.witnesses[0][w]);
            if (out.instance.lists[w].contains(d.one) || out.instance.lists[w].contains(d.three))
                throw std::logic_error("funny gadget root neighbour admits 1 or 3");
        }
        if (!(image == (h.neighbor_set(d.two) - VertexSet{d.one, d.three})))
            throw std::logic_error("funny gadget root image differs from N(2) minus {1,3}");
    }
    if (!girth_at_least(g, p)) throw std::logic_error("funny gadget girth is below p");
    return out;
}

/// True for K1, K1°, K2, P3 and C4 up to isomorphism.
inline bool is_poly_or_subexp_target(const Graph& h)
{
    for (const Graph& t : {Graph(1), graphs::looped_vertex(), graphs::complete(2), graphs::path(3), graphs::cycle(4)})
        if (isomorphic(h, t)) return true;
    return false;
}

inline bool is_poly_target(const Graph& h)
{
    for (const Graph& t : {Graph(1), graphs::looped_vertex(), graphs::complete(2)})
        if (isomorphic(h, t)) return true;
    return false;
}

/// 3-SAT to LLSHom(H) for connected H outside {K1, K1°, K2, P3, C4}. The
/// base is the construction for the least induced H' among K2°°, P4, K13
/// (in that priority); gadgets attached at each base vertex supply the
/// H-neighbours outside H'. Without any such H' the construction is made
/// for H* and the returned instance is over H* (annotation "routed").
inline GadgetOutput gen_general_h_pathfree(const CnfFormula& f, const Graph& h)
{
    if (h.order() > VertexSet::capacity) throw std::invalid_argument("target graph has more than 64 vertices");
    if (!is_connected(h) || h.order() == 0) throw std::invalid_argument("target graph must be connected");
    if (is_poly_or_subexp_target(h)) throw std::invalid_argument("target is polynomial or subexponential for path-free inputs");

    struct Base {
        Graph pattern;
        GadgetOutput (*gen)(const CnfFormula&);
    };
    const Base bases[] = {{detail::k2_two_loops(), gen_k2loops}, {graphs::path(4), gen_p4}, {graphs::star(3), gen_k13}};
    for (const Base& base : bases) {
        auto emb = find_induced(h, base.pattern);
        if (!emb) continue;
        const GadgetOutput original = base.gen(f);
        VertexSet inside;
        for (Vertex a : *emb) inside.insert(a);
        const VertexSet outside = VertexSet::full(h.order()) - inside;

        detail::Builder b(h);
        const Instance& g0 = original.instance;
        std::vector<VertexSet> lists;
        for (const VertexSet& l : g0.lists) {
            VertexSet m;
            l.for_each([&](Vertex a) { m.insert((*emb)[a]); });
            lists.push_back(m);
        }
        for (Vertex w = 0; w < g0.source.order(); ++w) b.add(lists[w]);
        for (const Edge& e : g0.source.edges()) b.edge(e.u, e.v);
        for (auto& [role, vs] : original.annotations)
            for (Vertex v : vs) b.tag(role, v);

        const GadgetOutput copy = target_copy(h);
        auto attach_copy = [&](Vertex w, Vertex c) {
            auto map = b.append(copy.instance);
            Vertex contact = map[copy.annotations.at("vertex")[c]];
            b.edge(w, contact);
            b.tag("contacts", contact);
        };
        for (Vertex w = 0; w < g0.source.order(); ++w) {
            const VertexSet l = lists[w];
            const int size = l.size();
            if (size == 1) {
                (h.neighbor_set(l.front()) & outside).for_each([&](Vertex c) { attach_copy(w, c); });
            } else if (size == 2) {
                auto values = l.elements();
                const Vertex a = values[0], bb = values[1];
                Vertex q = -1;
                for (Vertex x : g0.source.neighbors(w))
                    if (lists[x].size() == 1) {
                        q = x;
                        break;
                    }
                if (q < 0) throw std::logic_error("base vertex with a two-element list has no singleton neighbour");
                const Vertex cq = lists[q].front();
                const VertexSet na = h.neighbor_set(a) & outside, nb = h.neighbor_set(bb) & outside;
                const VertexSet common = na & nb;
                common.for_each([&](Vertex c) { attach_copy(w, c); });
                ((na - common) | (nb - common)).for_each([&](Vertex c) {
                    GadgetOutput z = cross_gadget(h, c, cq);
                    if (h.has_loops()) z = loopless_cover(z);
                    auto map = b.append(z.instance);
                    Vertex root = map[z.annotations.at("root")[0]];
                    b.edge(w, root);
                    b.tag("contacts", root);
                });
            } else if (size > 2) {
                throw std::logic_error("base construction has a list with more than two elements");
            }
        }
        GadgetOutput out = b.finish();
        out.annotations["base"] = {};
        for (Vertex w = 0; w < g0.source.order(); ++w) out.annotations["base"].push_back(w);
        out.annotations["embedding"] = *emb;
        return out;
    }
    if (is_bipartite(h)) throw std::logic_error("bipartite target without an induced P4 or K13 outside the excluded cases");
    GadgetOutput out = gen_general_h_pathfree(f, associated_bipartite(h).graph);
    out.annotations["routed"] = {};
    return out;
}

/// Default girth parameter for general targets: |V(H)|^2.
inline int default_girth_p(const Graph& h) { return h.order() * h.order(); }

/// NAE-3-SAT to LLSHom(H) on inputs of girth at least p: the P3
/// construction relabelled through `d`, with funny gadgets glued at every
/// base vertex whose list has a non-trivial member. Targets on at most two
/// vertices are handled through H* (annotation "routed").
inline GadgetOutput gen_general_h_girth(const CnfFormula& f, const Graph& h, int p,
                                        std::optional<DesignatedP3> designated = std::nullopt)
{
    if (!is_connected(h) || h.order() == 0) throw std::invalid_argument("target graph must be connected");
    if (is_poly_target(h)) throw std::invalid_argument("target is polynomial-time solvable");
    if (h.order() <= 2) {
        GadgetOutput out = gen_general_h_girth(f, associated_bipartite(h).graph, p, designated);
        out.annotations["routed"] = {};
        return out;
    }
    const DesignatedP3 d = designated ? *designated : *first_p3(h);
    detail::check_designated(h, d);
    const GadgetOutput base = gen_nae_p3(f, p);
    const Vertex relabel[3] = {d.one, d.two, d.three};

    detail::Builder b(h);
    const Instance& g0 = base.instance;
    for (Vertex u = 0; u < g0.source.order(); ++u) {
        VertexSet m;
        g0.lists[u].for_each([&](Vertex a) { m.insert(relabel[a]); });
        b.add(m);
    }
    for (const Edge& e : g0.source.edges()) b.edge(e.u, e.v);
    for (auto& [role, vs] : base.annotations)
        for (Vertex v : vs) b.tag(role, v);

    std::optional<GadgetOutput> two, one_three;
    if (!is_trivial_vertex(h, d, d.two)) two = funny_gadget(h, FunnyList::two, d, p);
    if (!is_trivial_vertex(h, d, d.one) || !is_trivial_vertex(h, d, d.three))
        one_three = funny_gadget(h, FunnyList::one_three, d, p);
    for (Vertex u = 0; u < g0.source.order(); ++u) {
        const bool middle = g0.lists[u] == VertexSet{1};
        const std::optional<GadgetOutput>& gadget = middle ? two : one_three;
        if (!gadget) continue;
        b.append(gadget->instance, gadget->annotations.at("root")[0], u);
        b.tag("roots", u);
    }
    return b.finish();
}

} // namespace llshom

#endif // LLSHOM_GADGETS_HPP
