#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "widthlab/graph.hpp"

namespace widthlab {

inline constexpr std::size_t kTreewidthCap = 22;

struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> tree_edges;

    std::size_t width() const {
        std::size_t w = 0;
        for (const VertexSet& bag : bags) w = std::max(w, bag.count());
        return w == 0 ? 0 : w - 1;
    }
};

inline std::string to_text(const TreeDecomposition& td) {
    std::ostringstream os;
    os << "bags " << td.bags.size() << '\n';
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        os << i << ':';
        td.bags[i].for_each([&](Vertex v) { os << ' ' << v; });
        os << '\n';
    }
    os << "edges\n";
    for (const auto& [a, b] : td.tree_edges) os << a << ' ' << b << '\n';
    return os.str();
}

/// Every edge of g lies in some bag, every vertex's bags induce a nonempty
/// subtree, and the node graph is a tree.
inline bool is_valid_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
    const std::size_t t = td.bags.size();
    if (t == 0) return g.vertex_count() == 0;
    if (td.tree_edges.size() != t - 1) return false;
    std::vector<std::vector<std::uint32_t>> adj(t);
    for (const auto& [a, b] : td.tree_edges) {
        if (a >= t || b >= t || a == b) return false;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    {
        std::vector<bool> seen(t, false);
        std::vector<std::uint32_t> stack{0};
        seen[0] = true;
        std::size_t visited = 0;
        while (!stack.empty()) {
            std::uint32_t x = stack.back();
            stack.pop_back();
            ++visited;
            for (std::uint32_t y : adj[x])
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
        }
        if (visited != t) return false;
    }
    for (const auto& [u, v] : g.edges()) {
        bool covered = false;
        for (const VertexSet& bag : td.bags)
            if (bag.contains(u) && bag.contains(v)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        std::vector<std::uint32_t> hosts;
        for (std::uint32_t i = 0; i < t; ++i)
            if (td.bags[i].contains(static_cast<Vertex>(v))) hosts.push_back(i);
        if (hosts.empty()) return false;
        std::vector<bool> in_host(t, false);
        for (std::uint32_t i : hosts) in_host[i] = true;
        std::vector<bool> seen(t, false);
        std::vector<std::uint32_t> stack{hosts[0]};
        seen[hosts[0]] = true;
        std::size_t reached = 0;
        while (!stack.empty()) {
            std::uint32_t x = stack.back();
            stack.pop_back();
            ++reached;
            for (std::uint32_t y : adj[x])
                if (in_host[y] && !seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
        }
        if (reached != hosts.size()) return false;
    }
    return true;
}

struct TreewidthResult {
    std::uint32_t width = 0;
    TreeDecomposition decomposition;
};

namespace detail {

/// Back-degree of v after eliminating the set `done`: the number of vertices
/// outside done+v reachable from v through done.
inline std::uint32_t elimination_back_degree(const std::vector<std::uint32_t>& adj, std::uint32_t done,
                                             std::uint32_t v) {
    const std::uint32_t vbit = 1u << v;
    std::uint32_t comp = vbit;
    std::uint32_t frontier = vbit;
    std::uint32_t reach = 0;
    while (frontier) {
        std::uint32_t nbrs = 0;
        std::uint32_t f = frontier;
        while (f) {
            const unsigned u = static_cast<unsigned>(std::countr_zero(f));
            f &= f - 1;
            nbrs |= adj[u];
        }
        reach |= nbrs;
        frontier = nbrs & done & ~comp;
        comp |= frontier;
    }
    return static_cast<std::uint32_t>(std::popcount(reach & ~done & ~vbit));
}

}  // namespace detail

/// Exact tree-width by dynamic programming over vertex subsets: the value is
/// the minimum over elimination orderings of the maximum back-degree, where
/// the back-degree counts neighbours reachable through already-eliminated
/// vertices. The witness decomposition is rebuilt from an optimal ordering
/// by simulated fill-in elimination.
inline TreewidthResult treewidth_exact(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw std::domain_error("treewidth_exact: empty graph");
    if (n > kTreewidthCap) throw capacity_error("treewidth_exact: n exceeds the DP cap");

    std::vector<std::uint32_t> adj(n, 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }

    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::vector<std::uint8_t> f(static_cast<std::size_t>(full) + 1, 0);
    for (std::uint32_t set = 1; set <= full; ++set) {
        std::uint32_t best = 0xFF;
        std::uint32_t rest = set;
        while (rest) {
            const unsigned v = static_cast<unsigned>(std::countr_zero(rest));
            rest &= rest - 1;
            const std::uint32_t without = set & ~(1u << v);
            const std::uint32_t sub = f[without];
            if (sub >= best) continue;  // q >= 0, so the max cannot beat best
            const std::uint32_t q = detail::elimination_back_degree(adj, without, v);
            best = std::min(best, std::max(sub, q));
        }
        f[set] = static_cast<std::uint8_t>(best);
        if (set == full) break;  // avoid wrap when full == UINT32_MAX
    }

    TreewidthResult result;
    result.width = f[full];

    // Recover one optimal elimination ordering (last-eliminated first).
    std::vector<Vertex> order(n);
    std::uint32_t set = full;
    for (std::size_t slot = n; slot-- > 0;) {
        std::uint32_t chosen = 0;
        bool found = false;
        std::uint32_t rest = set;
        while (rest) {
            const unsigned v = static_cast<unsigned>(std::countr_zero(rest));
            rest &= rest - 1;
            const std::uint32_t without = set & ~(1u << v);
            const std::uint32_t value =
                std::max<std::uint32_t>(f[without], detail::elimination_back_degree(adj, without, v));
            if (value == f[set]) {
                chosen = v;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("treewidth_exact: witness reconstruction failed");
        order[slot] = static_cast<Vertex>(chosen);
        set &= ~(1u << chosen);
    }

    // Fill-in elimination along the order yields the bags.
    std::vector<std::uint32_t> fill(adj);
    std::vector<std::uint32_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[order[i]] = static_cast<std::uint32_t>(i);
    std::uint32_t remaining = full;
    std::vector<std::uint32_t> bag_mask(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = order[i];
        remaining &= ~(1u << v);
        const std::uint32_t nb = fill[v] & remaining;
        bag_mask[i] = nb | (1u << v);
        std::uint32_t a = nb;
        while (a) {
            const unsigned x = static_cast<unsigned>(std::countr_zero(a));
            a &= a - 1;
            fill[x] |= nb & ~(1u << x);
        }
    }
    TreeDecomposition td;
    td.bags.reserve(n);
    for (std::size_t i = 0; i < n; ++i) td.bags.push_back(VertexSet::from_mask(n, bag_mask[i]));
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t nb = bag_mask[i] & ~(1u << order[i]);
        if (nb != 0) {
            std::uint32_t first = 0xFFFFFFFF;
            std::uint32_t a = nb;
            while (a) {
                const unsigned x = static_cast<unsigned>(std::countr_zero(a));
                a &= a - 1;
                first = std::min(first, position[x]);
            }
            td.tree_edges.emplace_back(static_cast<std::uint32_t>(i), first);
        } else if (i + 1 < n) {
            td.tree_edges.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i + 1));
        }
    }
    result.decomposition = std::move(td);
    return result;
}

}  // namespace widthlab
