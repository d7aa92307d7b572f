#ifndef LLSHOM_DP_HPP
#define LLSHOM_DP_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "aux_instance.hpp"
#include "error.hpp"
#include "tree_decomposition.hpp"

namespace llshom {

/// Bag positions are limited so that a state fits in 64 bits (2 bits each).
inline constexpr int max_dp_bag_size = 32;

struct DpNodeStats {
    int x_count = 0;
    int y_count = 0;
    std::size_t materialized = 0; // distinct states before dominance pruning
    std::size_t survived = 0;
};

struct DpStats {
    std::size_t max_states = 0;
    std::size_t total_states = 0;
    std::vector<DpNodeStats> nodes; // filled only when requested
};

struct DpResult {
    bool feasible = false;
    std::vector<std::uint8_t> colouring; // colour bits per aux vertex; 0 on Y
    DpStats stats;
};

namespace detail {

struct DpState {
    std::uint64_t key;
    int left;  // state index in the first child table
    int right; // state index in the second child table (joins)
};

inline std::uint64_t field(std::uint64_t key, int pos) { return (key >> (2 * pos)) & 3U; }

inline std::uint64_t insert_field(std::uint64_t key, int pos, std::uint64_t value)
{
    const int shift = 2 * pos;
    const std::uint64_t low = shift == 0 ? 0 : key & ((std::uint64_t{1} << shift) - 1);
    const std::uint64_t high = shift >= 64 ? 0 : key >> shift;
    return low | (value << shift) | (shift + 2 >= 64 ? 0 : high << (shift + 2));
}

inline std::uint64_t remove_field(std::uint64_t key, int pos)
{
    const int shift = 2 * pos;
    const std::uint64_t low = shift == 0 ? 0 : key & ((std::uint64_t{1} << shift) - 1);
    const std::uint64_t high = shift + 2 >= 64 ? 0 : key >> (shift + 2);
    return low | (shift >= 64 ? 0 : high << shift);
}

inline int position(const std::vector<Vertex>& bag, Vertex v)
{
    return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

} // namespace detail

/// Dynamic program over a nice decomposition. A state holds, per bag
/// vertex, a 2-bit field: the colour of an X vertex, or for a Y vertex the
/// colours seen so far restricted to sigma(y). Within a group of equal
/// X-fields, states whose Y-fields are pointwise contained in another's are
/// dropped.
inline DpResult dp_solve(const AuxInstance& aux, const TreeDecomposition& td, bool record_nodes = false)
{
    using detail::DpState;
    for (const auto& bag : td.bags)
        if (static_cast<int>(bag.size()) > max_dp_bag_size)
            throw Error("too-large", "decomposition bag exceeds " + std::to_string(max_dp_bag_size) + " vertices");
    const NiceTreeDecomposition nice = make_nice(td);
    const int count = static_cast<int>(nice.nodes.size());
    std::vector<std::vector<DpState>> tables(static_cast<std::size_t>(count));
    DpResult result;

    for (int t = 0; t < count; ++t) {
        const NiceNode& node = nice.nodes[t];
        const auto& bag = node.bag;
        std::vector<DpState> raw;
        switch (node.type) {
        case NiceNode::Type::leaf: raw.push_back({0, -1, -1}); break;
        case NiceNode::Type::introduce: {
            const Vertex v = node.vertex;
            const int pos = detail::position(bag, v);
            const auto& child = tables[node.left];
            // Positions of bag neighbours, shifted for the child layout.
            std::vector<int> nb_child_pos;
            for (Vertex w : aux.graph.neighbors(v))
                if (std::binary_search(bag.begin(), bag.end(), w)) {
                    int p = detail::position(bag, w);
                    nb_child_pos.push_back(p > pos ? p - 1 : p);
                }
            for (int i = 0; i < static_cast<int>(child.size()); ++i) {
                std::uint64_t key = child[i].key;
                if (aux.is_x[v]) {
                    for (std::uint64_t c : {std::uint64_t{colour_one}, std::uint64_t{colour_three}}) {
                        if (!(aux.mask[v] & c)) continue;
                        std::uint64_t k = key;
                        for (int p : nb_child_pos) {
                            Vertex y = bag[p >= pos ? p + 1 : p];
                            k |= (c & aux.mask[y]) << (2 * p);
                        }
                        raw.push_back({detail::insert_field(k, pos, c), i, -1});
                    }
                } else {
                    std::uint64_t seen = 0;
                    for (int p : nb_child_pos) seen |= detail::field(key, p);
                    raw.push_back({detail::insert_field(key, pos, seen & aux.mask[v]), i, -1});
                }
            }
            break;
        }
        case NiceNode::Type::forget: {
            const Vertex v = node.vertex;
            const auto& child_bag = nice.nodes[node.left].bag;
            const int pos = detail::position(child_bag, v);
            const auto& child = tables[node.left];
            for (int i = 0; i < static_cast<int>(child.size()); ++i) {
                std::uint64_t key = child[i].key;
                if (!aux.is_x[v] && detail::field(key, pos) != aux.mask[v]) continue;
                raw.push_back({detail::remove_field(key, pos), i, -1});
            }
            break;
        }
        case NiceNode::Type::join: {
            std::uint64_t xmask = 0;
            for (int p = 0; p < static_cast<int>(bag.size()); ++p)
                if (aux.is_x[bag[p]]) xmask |= std::uint64_t{3} << (2 * p);
            const auto& a = tables[node.left];
            const auto& b = tables[node.right];
            std::unordered_map<std::uint64_t, std::vector<int>> by_x;
            for (int j = 0; j < static_cast<int>(b.size()); ++j) by_x[b[j].key & xmask].push_back(j);
            for (int i = 0; i < static_cast<int>(a.size()); ++i) {
                auto it = by_x.find(a[i].key & xmask);
                if (it == by_x.end()) continue;
                for (int j : it->second) raw.push_back({a[i].key | b[j].key, i, j});
            }
            break;
        }
        }

        // Deduplicate, keeping the first occurrence.
        std::vector<DpState> unique;
        {
            std::unordered_map<std::uint64_t, char> seen;
            seen.reserve(raw.size() * 2);
            for (const auto& s : raw)
                if (seen.emplace(s.key, 1).second) unique.push_back(s);
        }
        const std::size_t materialized = unique.size();

        // Dominance pruning within each X group.
        std::uint64_t xmask = 0;
        for (int p = 0; p < static_cast<int>(bag.size()); ++p)
            if (aux.is_x[bag[p]]) xmask |= std::uint64_t{3} << (2 * p);
        std::unordered_map<std::uint64_t, std::vector<int>> groups;
        for (int i = 0; i < static_cast<int>(unique.size()); ++i) groups[unique[i].key & xmask].push_back(i);
        std::vector<char> dropped(unique.size(), 0);
        for (auto& [x, members] : groups) {
            if (members.size() < 2) continue;
            for (int i : members) {
                const std::uint64_t yi = unique[i].key & ~xmask;
                for (int j : members) {
                    if (i == j || dropped[j]) continue;
                    const std::uint64_t yj = unique[j].key & ~xmask;
                    if ((yi & ~yj) == 0 && yi != yj) {
                        dropped[i] = 1;
                        break;
                    }
                }
            }
        }
        auto& table = tables[t];
        for (std::size_t i = 0; i < unique.size(); ++i)
            if (!dropped[i]) table.push_back(unique[i]);

        result.stats.total_states += table.size();
        result.stats.max_states = std::max(result.stats.max_states, table.size());
        if (record_nodes) {
            DpNodeStats ns;
            for (Vertex v : bag) (aux.is_x[v] ? ns.x_count : ns.y_count)++;
            ns.materialized = materialized;
            ns.survived = table.size();
            result.stats.nodes.push_back(ns);
        }
    }

    const int root = nice.root();
    if (tables[root].empty()) return result;
    result.feasible = true;
    result.colouring.assign(static_cast<std::size_t>(aux.order()), 0);
    // Walk back from the root's single state; introduce nodes fix X colours.
    std::vector<std::pair<int, int>> stack{{root, 0}};
    while (!stack.empty()) {
        auto [t, s] = stack.back();
        stack.pop_back();
        const NiceNode& node = nice.nodes[t];
        const DpState& st = tables[t][s];
        if (node.type == NiceNode::Type::introduce && aux.is_x[node.vertex])
            result.colouring[node.vertex] =
                static_cast<std::uint8_t>(detail::field(st.key, detail::position(node.bag, node.vertex)));
        if (node.left >= 0) stack.push_back({node.left, st.left});
        if (node.right >= 0) stack.push_back({node.right, st.right});
    }
    return result;
}

} // namespace llshom

#endif // LLSHOM_DP_HPP
