#ifndef LLSHOM_TREE_DECOMPOSITION_HPP
#define LLSHOM_TREE_DECOMPOSITION_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace llshom {

/// Bags (each sorted) joined by tree edges over bag indices.
struct TreeDecomposition {
    std::vector<std::vector<Vertex>> bags;
    std::vector<std::pair<int, int>> edges;

    int width() const
    {
        std::size_t w = 0;
        for (const auto& b : bags) w = std::max(w, b.size());
        return static_cast<int>(w) - 1;
    }
};

enum class EliminationHeuristic { min_fill, min_degree };

namespace detail {

class Eliminator {
public:
    Eliminator(const Graph& g, EliminationHeuristic heuristic)
        : heuristic_(heuristic), adj_(static_cast<std::size_t>(g.order())), score_(adj_.size())
    {
        for (Vertex v = 0; v < g.order(); ++v)
            for (Vertex w : g.neighbors(v))
                if (w != v) adj_[v].push_back(w);
    }

    /// Elimination order plus, for each eliminated vertex, its neighbours
    /// still present at that moment.
    std::pair<std::vector<Vertex>, std::vector<std::vector<Vertex>>> run()
    {
        const int n = static_cast<int>(adj_.size());
        for (Vertex v = 0; v < n; ++v) {
            score_[v] = key(v);
            queue_.insert(score_[v]);
        }
        std::vector<Vertex> order;
        std::vector<std::vector<Vertex>> higher(static_cast<std::size_t>(n));
        while (!queue_.empty()) {
            Vertex v = std::get<2>(*queue_.begin());
            queue_.erase(queue_.begin());
            order.push_back(v);
            std::vector<Vertex> nb = adj_[v];
            higher[v] = nb;
            for (Vertex w : nb) erase_sorted(adj_[w], v);
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j)
                    if (!has(nb[i], nb[j])) {
                        insert_sorted(adj_[nb[i]], nb[j]);
                        insert_sorted(adj_[nb[j]], nb[i]);
                    }
            // Fill counts can only change within distance two of v.
            std::vector<Vertex> touched = nb;
            if (heuristic_ == EliminationHeuristic::min_fill)
                for (Vertex w : nb)
                    for (Vertex x : adj_[w]) touched.push_back(x);
            std::sort(touched.begin(), touched.end());
            touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
            for (Vertex w : touched) {
                queue_.erase(score_[w]);
                score_[w] = key(w);
                queue_.insert(score_[w]);
            }
        }
        return {order, higher};
    }

private:
    using Key = std::tuple<long long, int, Vertex>;

    bool has(Vertex a, Vertex b) const { return std::binary_search(adj_[a].begin(), adj_[a].end(), b); }

    static void insert_sorted(std::vector<Vertex>& v, Vertex x) { v.insert(std::lower_bound(v.begin(), v.end(), x), x); }
    static void erase_sorted(std::vector<Vertex>& v, Vertex x)
    {
        auto it = std::lower_bound(v.begin(), v.end(), x);
        if (it != v.end() && *it == x) v.erase(it);
    }

    Key key(Vertex v) const
    {
        const auto& nb = adj_[v];
        const int deg = static_cast<int>(nb.size());
        if (heuristic_ == EliminationHeuristic::min_degree) return {deg, 0, v};
        long long fill = 0;
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!has(nb[i], nb[j])) ++fill;
        return {fill, deg, v};
    }

    EliminationHeuristic heuristic_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Key> score_;
    std::set<Key> queue_;
};

} // namespace detail

/// Decomposition from a greedy elimination order (min-fill with min-degree
/// then index tie-breaks, or plain min-degree). One bag per vertex: the
/// vertex plus its neighbours when eliminated. Separate components are
/// chained through their roots, which share no vertices.
inline TreeDecomposition decompose(const Graph& g, EliminationHeuristic heuristic = EliminationHeuristic::min_fill)
{
    TreeDecomposition td;
    const int n = g.order();
    if (n == 0) {
        td.bags.emplace_back();
        return td;
    }
    auto [order, higher] = detail::Eliminator(g, heuristic).run();
    std::vector<int> position(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) position[order[i]] = i;
    td.bags.resize(static_cast<std::size_t>(n));
    int previous_root = -1;
    for (int i = 0; i < n; ++i) {
        Vertex v = order[i];
        auto& bag = td.bags[i];
        bag = higher[v];
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        if (higher[v].empty()) {
            if (previous_root >= 0) td.edges.emplace_back(previous_root, i);
            previous_root = i;
        } else {
            int parent = n;
            for (Vertex w : higher[v]) parent = std::min(parent, position[w]);
            td.edges.emplace_back(i, parent);
        }
    }
    return td;
}

/// Empty optional when the cover, edge and connectivity conditions hold and
/// the bag graph is a tree; otherwise a description of the first failure.
inline std::optional<std::string> validate(const Graph& g, const TreeDecomposition& td)
{
    const int k = static_cast<int>(td.bags.size());
    if (k == 0) return g.order() == 0 ? std::nullopt : std::optional<std::string>("no bags");
    if (static_cast<int>(td.edges.size()) != k - 1) return "bag graph has the wrong number of edges for a tree";
    std::vector<std::vector<int>> tree(static_cast<std::size_t>(k));
    for (auto [a, b] : td.edges) {
        if (a < 0 || b < 0 || a >= k || b >= k || a == b) return "bad tree edge";
        tree[a].push_back(b);
        tree[b].push_back(a);
    }
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 0;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        ++reached;
        for (int u : tree[t])
            if (!seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
    }
    if (reached != k) return "bag graph is disconnected";

    std::vector<std::vector<int>> holding(static_cast<std::size_t>(g.order()));
    for (int t = 0; t < k; ++t)
        for (Vertex v : td.bags[t]) {
            if (v < 0 || v >= g.order()) return "bag mentions a vertex outside the graph";
            holding[v].push_back(t);
        }
    for (Vertex v = 0; v < g.order(); ++v)
        if (holding[v].empty()) return "vertex " + std::to_string(v) + " is in no bag";
    auto in_bag = [&](int t, Vertex v) { return std::binary_search(td.bags[t].begin(), td.bags[t].end(), v); };
    for (const Edge& e : g.edges()) {
        bool covered = false;
        for (int t : holding[e.u])
            if (in_bag(t, e.v)) {
                covered = true;
                break;
            }
        if (!covered) return "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is in no bag";
    }
    // Bags holding v must be connected: in a tree, that is |nodes| - 1 internal edges.
    std::vector<int> internal(static_cast<std::size_t>(g.order()), 0);
    for (auto [a, b] : td.edges)
        for (Vertex v : td.bags[a])
            if (in_bag(b, v)) ++internal[v];
    for (Vertex v = 0; v < g.order(); ++v)
        if (internal[v] != static_cast<int>(holding[v].size()) - 1)
            return "bags holding vertex " + std::to_string(v) + " are not connected";
    return std::nullopt;
}

/// Adds `extra` to every bag.
inline TreeDecomposition augment_bags(TreeDecomposition td, const std::vector<Vertex>& extra)
{
    if (td.bags.empty()) td.bags.emplace_back();
    for (auto& bag : td.bags) {
        bag.insert(bag.end(), extra.begin(), extra.end());
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    }
    return td;
}

/// Nice decomposition: children precede parents in `nodes`; the last node
/// is the root and has an empty bag, as do leaves.
struct NiceNode {
    enum class Type { leaf, introduce, forget, join };
    Type type = Type::leaf;
    Vertex vertex = -1; // introduced or forgotten vertex
    int left = -1;
    int right = -1;
    std::vector<Vertex> bag;
};

struct NiceTreeDecomposition {
    std::vector<NiceNode> nodes;
    int root() const { return static_cast<int>(nodes.size()) - 1; }
};

inline NiceTreeDecomposition make_nice(const TreeDecomposition& td)
{
    NiceTreeDecomposition nice;
    auto& nodes = nice.nodes;
    const int k = static_cast<int>(td.bags.size());
    std::vector<std::vector<int>> tree(static_cast<std::size_t>(k));
    for (auto [a, b] : td.edges) {
        tree[a].push_back(b);
        tree[b].push_back(a);
    }
    // The last bag is the elimination root for decompose(); any bag works.
    const int root = k - 1;
    std::vector<int> parent(static_cast<std::size_t>(k), -1), order;
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    std::vector<int> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        order.push_back(t);
        for (int u : tree[t])
            if (!seen[u]) {
                seen[u] = 1;
                parent[u] = t;
                stack.push_back(u);
            }
    }

    auto add = [&](NiceNode node) {
        nodes.push_back(std::move(node));
        return static_cast<int>(nodes.size()) - 1;
    };
    // Moves node `from` (bag a) to bag b by forgets then introduces.
    auto transition = [&](int from, const std::vector<Vertex>& target) {
        std::vector<Vertex> bag = nodes[from].bag;
        for (Vertex v : std::vector<Vertex>(bag)) {
            if (std::binary_search(target.begin(), target.end(), v)) continue;
            NiceNode f;
            f.type = NiceNode::Type::forget;
            f.vertex = v;
            f.left = from;
            bag.erase(std::lower_bound(bag.begin(), bag.end(), v));
            f.bag = bag;
            from = add(std::move(f));
        }
        for (Vertex v : target) {
            if (std::binary_search(bag.begin(), bag.end(), v)) continue;
            NiceNode in;
            in.type = NiceNode::Type::introduce;
            in.vertex = v;
            in.left = from;
            bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
            in.bag = bag;
            from = add(std::move(in));
        }
        return from;
    };

    std::vector<int> built(static_cast<std::size_t>(k), -1);
    std::vector<std::vector<int>> child_nodes(static_cast<std::size_t>(k));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int t = *it;
        const auto& bag = td.bags[t];
        std::vector<int> parts;
        for (int c : child_nodes[t]) parts.push_back(transition(c, bag));
        if (parts.empty()) parts.push_back(transition(add(NiceNode{}), bag));
        int acc = parts[0];
        for (std::size_t i = 1; i < parts.size(); ++i) {
            NiceNode j;
            j.type = NiceNode::Type::join;
            j.left = acc;
            j.right = parts[i];
            j.bag = bag;
            acc = add(std::move(j));
        }
        built[t] = acc;
        if (parent[t] >= 0) child_nodes[parent[t]].push_back(acc);
    }
    transition(built[root], {});
    return nice;
}

} // namespace llshom

#endif // LLSHOM_TREE_DECOMPOSITION_HPP
