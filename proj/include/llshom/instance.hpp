#ifndef LLSHOM_INSTANCE_HPP
#define LLSHOM_INSTANCE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "vertex_set.hpp"

namespace llshom {

using ListAssignment = std::vector<VertexSet>;
using Homomorphism = std::vector<Vertex>;

/// An instance (G, L) of LLSHom(H).
struct Instance {
    Graph target;
    Graph source;
    ListAssignment lists;

    /// Throws if the lists do not cover exactly V(G) or mention non-H vertices.
    void validate() const
    {
        if (target.order() > VertexSet::capacity)
            throw std::invalid_argument("target graph has more than 64 vertices");
        if (static_cast<int>(lists.size()) != source.order())
            throw std::invalid_argument("list assignment does not cover the source graph");
        const VertexSet all = VertexSet::full(target.order());
        for (const VertexSet& l : lists)
            if (!l.subset_of(all)) throw std::invalid_argument("list mentions a vertex outside the target");
    }

    static Instance full_lists(Graph target, Graph source)
    {
        Instance inst{std::move(target), std::move(source), {}};
        inst.lists.assign(static_cast<std::size_t>(inst.source.order()), VertexSet::full(inst.target.order()));
        return inst;
    }

    friend bool operator==(const Instance&, const Instance&) = default;
};

/// Sub-instance on a vertex subset; `vertices[i]` is the original index of
/// local vertex i.
struct SubInstance {
    Instance instance;
    std::vector<Vertex> vertices;
};

inline SubInstance restrict_instance(const Instance& inst, std::vector<Vertex> vertices)
{
    SubInstance sub;
    sub.instance.target = inst.target;
    sub.instance.source = induced_subgraph(inst.source, vertices);
    for (Vertex v : vertices) sub.instance.lists.push_back(inst.lists[v]);
    sub.vertices = std::move(vertices);
    return sub;
}

/// Components of G in order of least vertex.
inline std::vector<SubInstance> split_components(const Instance& inst)
{
    std::vector<SubInstance> out;
    for (auto& comp : connected_components(inst.source)) out.push_back(restrict_instance(inst, std::move(comp)));
    return out;
}

/// A consistent instance for a bipartite target with classes X, Y:
/// x_side[v] = 1 means v lies in the source class mapped into X.
struct ConsistentInstance {
    Instance instance;
    std::vector<std::uint8_t> x_side;
};

/// The two consistent orientations of one connected component of G.
struct ComponentSplit {
    std::vector<Vertex> vertices;
    std::vector<ConsistentInstance> options;
};

/// Splits an instance over a connected bipartite target into consistent
/// instances: per component of G, L1 maps the class of its least vertex into
/// X (the target class holding vertex 0) and L2 the reverse. Empty optional
/// when G is not bipartite.
inline std::optional<std::vector<ComponentSplit>> split_consistent(const Instance& inst)
{
    auto hb = bipartition(inst.target);
    if (!hb) throw std::invalid_argument("consistency split needs a bipartite target");
    VertexSet tx, ty;
    for (Vertex v : hb->class_a) tx.insert(v);
    for (Vertex v : hb->class_b) ty.insert(v);
    if (!bipartition(inst.source)) return std::nullopt;
    std::vector<ComponentSplit> out;
    for (auto& part : split_components(inst)) {
        auto gb = bipartition(part.instance.source);
        ComponentSplit split;
        split.vertices = part.vertices;
        for (int orientation = 0; orientation < 2; ++orientation) {
            ConsistentInstance ci;
            ci.instance = part.instance;
            ci.x_side.resize(part.vertices.size());
            for (Vertex v = 0; v < part.instance.source.order(); ++v) {
                bool in_x = gb->in_a(v) == (orientation == 0);
                ci.x_side[v] = in_x ? 1 : 0;
                ci.instance.lists[v] &= in_x ? tx : ty;
            }
            split.options.push_back(std::move(ci));
        }
        out.push_back(std::move(split));
    }
    return out;
}

/// x_side for an instance whose lists already respect a bipartition of G
/// with respect to target classes (tx, ty). Per component the orientation
/// putting its least vertex into tx is preferred.
inline std::optional<std::vector<std::uint8_t>> consistent_sides(const Instance& inst, VertexSet tx, VertexSet ty)
{
    auto gb = bipartition(inst.source);
    if (!gb) return std::nullopt;
    std::vector<std::uint8_t> side(static_cast<std::size_t>(inst.source.order()), 0);
    for (const auto& comp : connected_components(inst.source)) {
        bool done = false;
        for (int orientation = 0; orientation < 2 && !done; ++orientation) {
            bool ok = true;
            for (Vertex v : comp) {
                bool in_x = gb->in_a(v) == (orientation == 0);
                if (!inst.lists[v].subset_of(in_x ? tx : ty)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            for (Vertex v : comp) side[v] = (gb->in_a(v) == (orientation == 0)) ? 1 : 0;
            done = true;
        }
        if (!done) return std::nullopt;
    }
    return side;
}

/// Lift of a consistent instance over H* to H: L(v) = {x : x' or x'' in L'(v)}.
struct LiftedInstance {
    Instance instance;
    /// 1 when v's list lies in the primed class.
    std::vector<std::uint8_t> primed;
};

/// `primed` fixes which source vertices take primed images; by default it is
/// derived from the lists.
inline LiftedInstance lift_to_base(const Instance& star_inst, const Graph& base,
                                   std::optional<std::vector<std::uint8_t>> primed = {})
{
    const AssociatedBipartite star = associated_bipartite(base);
    if (!(star.graph == star_inst.target)) throw std::invalid_argument("instance target is not the associated bipartite graph");
    VertexSet primes, doubles;
    for (Vertex v = 0; v < base.order(); ++v) {
        primes.insert(star.prime(v));
        doubles.insert(star.double_prime(v));
    }
    if (!primed) primed = consistent_sides(star_inst, primes, doubles);
    auto inconsistent = [] { return std::invalid_argument("instance over the associated bipartite graph is not consistent"); };
    if (!primed || static_cast<int>(primed->size()) != star_inst.source.order()) throw inconsistent();
    for (Vertex v = 0; v < star_inst.source.order(); ++v)
        if (!star_inst.lists[v].subset_of((*primed)[v] ? primes : doubles)) throw inconsistent();
    for (const Edge& e : star_inst.source.edges())
        if ((*primed)[e.u] == (*primed)[e.v]) throw inconsistent();
    LiftedInstance out;
    out.instance.target = base;
    out.instance.source = star_inst.source;
    out.primed = *primed;
    for (const VertexSet& l : star_inst.lists) {
        VertexSet lifted;
        l.for_each([&](Vertex x) { lifted.insert(star.base(x)); });
        out.instance.lists.push_back(lifted);
    }
    return out;
}

/// Maps a witness for the lifted instance back to H*.
inline Homomorphism lower_witness(const LiftedInstance& lifted, const Homomorphism& h)
{
    const int n0 = lifted.instance.target.order();
    Homomorphism out(h.size());
    for (std::size_t v = 0; v < h.size(); ++v) out[v] = lifted.primed[v] ? h[v] : h[v] + n0;
    return out;
}

/// Two P3 instances equivalent (jointly) to a consistent C4 instance. The
/// C4 target must be 0-1-2-3-0; X-side lists lie in {0,2}, Y-side lists in
/// {1,3}. Both outputs use the path 0-1-2 with middle 1.
struct C4Reduction {
    Instance first;  // over C4[0,1,2]; Y pinned to the middle
    Instance second; // over C4[3,0,1]; X pinned to the middle
    std::vector<std::uint8_t> x_side;
    static constexpr Vertex first_label[3] = {0, 1, 2};
    static constexpr Vertex second_label[3] = {3, 0, 1};
};

inline bool is_canonical_c4(const Graph& h) { return h == graphs::cycle(4); }

/// `x_side` fixes the orientation; without it the class holding the least
/// vertex of each component is X when the lists allow it.
inline C4Reduction reduce_c4_to_p3(const Instance& inst, std::optional<std::vector<std::uint8_t>> x_side = {})
{
    if (!is_canonical_c4(inst.target)) throw std::invalid_argument("target is not the cycle 0-1-2-3");
    if (!x_side) x_side = consistent_sides(inst, VertexSet{0, 2}, VertexSet{1, 3});
    if (!x_side || static_cast<int>(x_side->size()) != inst.source.order())
        throw std::invalid_argument("instance over C4 is not consistent");
    for (Vertex v = 0; v < inst.source.order(); ++v)
        if (!inst.lists[v].subset_of((*x_side)[v] ? VertexSet{0, 2} : VertexSet{1, 3}))
            throw std::invalid_argument("instance over C4 is not consistent");
    for (const Edge& e : inst.source.edges())
        if ((*x_side)[e.u] == (*x_side)[e.v]) throw std::invalid_argument("sides do not form a bipartition");
    C4Reduction r;
    r.x_side = *x_side;
    const Graph p3 = graphs::path(3);
    r.first.target = p3;
    r.second.target = p3;
    r.first.source = inst.source;
    r.second.source = inst.source;
    for (Vertex v = 0; v < inst.source.order(); ++v) {
        const VertexSet l = inst.lists[v];
        if (r.x_side[v]) {
            r.first.lists.push_back(l);              // {0,2} keep their labels
            r.second.lists.push_back(VertexSet{1});  // C4 vertex 0 is the middle
        } else {
            r.first.lists.push_back(VertexSet{1});   // C4 vertex 1 is the middle
            VertexSet m;                             // 3 -> 0, 1 -> 2
            if (l.contains(3)) m.insert(0);
            if (l.contains(1)) m.insert(2);
            r.second.lists.push_back(m);
        }
    }
    return r;
}

/// h(x) = h'(x) on X and h(y) = h''(y) on Y, in C4 labels.
inline Homomorphism combine_c4_witness(const C4Reduction& r, const Homomorphism& first, const Homomorphism& second)
{
    Homomorphism h(r.x_side.size());
    for (std::size_t v = 0; v < h.size(); ++v)
        h[v] = r.x_side[v] ? C4Reduction::first_label[first[v]] : C4Reduction::second_label[second[v]];
    return h;
}

} // namespace llshom

#endif // LLSHOM_INSTANCE_HPP
