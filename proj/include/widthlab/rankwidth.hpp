#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "widthlab/bit_matrix.hpp"
#include "widthlab/graph.hpp"

namespace widthlab {

inline constexpr std::size_t kRankwidthCap = 12;

/// Rank-decomposition witness: a subcubic tree (node degrees one or three)
/// with every graph vertex assigned to a distinct leaf.
struct RankDecomposition {
    std::size_t node_count = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> tree_edges;
    std::vector<std::int64_t> leaf_of_vertex;  // graph vertex -> tree node
};

struct RankwidthResult {
    std::uint32_t width = 0;
    RankDecomposition decomposition;
};

namespace detail {

inline std::uint32_t rank_of_rows(std::vector<std::uint32_t> rows) {
    std::uint32_t rank = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] == 0) continue;
        const unsigned pivot = static_cast<unsigned>(std::countr_zero(rows[i]));
        ++rank;
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (rows[j] >> pivot & 1) rows[j] ^= rows[i];
    }
    return rank;
}

/// Leaf bipartition induced by deleting a tree edge.
inline void leaf_split(const RankDecomposition& rd, std::size_t edge_index, VertexSet& a, VertexSet& b) {
    std::vector<std::vector<std::uint32_t>> adj(rd.node_count);
    for (std::size_t i = 0; i < rd.tree_edges.size(); ++i) {
        if (i == edge_index) continue;
        adj[rd.tree_edges[i].first].push_back(rd.tree_edges[i].second);
        adj[rd.tree_edges[i].second].push_back(rd.tree_edges[i].first);
    }
    std::vector<bool> side_a(rd.node_count, false);
    std::vector<std::uint32_t> stack{rd.tree_edges[edge_index].first};
    side_a[rd.tree_edges[edge_index].first] = true;
    while (!stack.empty()) {
        std::uint32_t x = stack.back();
        stack.pop_back();
        for (std::uint32_t y : adj[x])
            if (!side_a[y]) {
                side_a[y] = true;
                stack.push_back(y);
            }
    }
    for (std::size_t v = 0; v < rd.leaf_of_vertex.size(); ++v) {
        if (side_a[static_cast<std::size_t>(rd.leaf_of_vertex[v])])
            a.insert(static_cast<Vertex>(v));
        else
            b.insert(static_cast<Vertex>(v));
    }
}

}  // namespace detail

/// True when the witness is a subcubic tree whose leaves are in bijection
/// with the graph's vertices and whose maximum edge cutrank equals the
/// claimed width. Graphs with fewer than two vertices carry a trivial
/// witness of width zero.
inline bool is_valid_rank_decomposition(const Graph& g, const RankDecomposition& rd,
                                        std::uint32_t claimed_width) {
    const std::size_t n = g.vertex_count();
    if (n <= 1) return claimed_width == 0;
    if (rd.node_count == 0 || rd.tree_edges.size() != rd.node_count - 1) return false;
    std::vector<std::uint32_t> degree(rd.node_count, 0);
    for (const auto& [a, b] : rd.tree_edges) {
        if (a >= rd.node_count || b >= rd.node_count || a == b) return false;
        ++degree[a];
        ++degree[b];
    }
    {  // connectivity
        std::vector<std::vector<std::uint32_t>> adj(rd.node_count);
        for (const auto& [a, b] : rd.tree_edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::vector<bool> seen(rd.node_count, false);
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
        if (visited != rd.node_count) return false;
    }
    std::size_t leaves = 0;
    for (std::uint32_t d : degree) {
        if (d != 1 && d != 3) return false;
        if (d == 1) ++leaves;
    }
    if (leaves != n || rd.leaf_of_vertex.size() != n) return false;
    std::vector<bool> taken(rd.node_count, false);
    for (std::int64_t leaf : rd.leaf_of_vertex) {
        if (leaf < 0 || static_cast<std::size_t>(leaf) >= rd.node_count) return false;
        if (degree[static_cast<std::size_t>(leaf)] != 1) return false;
        if (taken[static_cast<std::size_t>(leaf)]) return false;
        taken[static_cast<std::size_t>(leaf)] = true;
    }
    std::uint32_t widest = 0;
    for (std::size_t i = 0; i < rd.tree_edges.size(); ++i) {
        VertexSet a(n), b(n);
        detail::leaf_split(rd, i, a, b);
        widest = std::max(widest, static_cast<std::uint32_t>(cutrank(g, a, b)));
    }
    return widest == claimed_width;
}

/// Exact rank-width by subset dynamic programming over the global cut
/// function rho(X) = cutrank(X, V \ X):
///   f({v}) = 0
///   f(S)   = min over proper bipartitions S = T u (S\T) of
///            max(f(T), f(S\T), rho(T), rho(S\T))
///   rw     = min over bipartitions V = A u B of max(rho(A), f(A), f(B)).
/// The witness tree is rebuilt from the chosen splits. Convention: width 0
/// with a trivial witness for n <= 1.
inline RankwidthResult rankwidth_exact(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kRankwidthCap) throw capacity_error("rankwidth_exact: n exceeds the DP cap");
    if (n <= 1) {
        RankwidthResult trivial;
        trivial.decomposition.node_count = n;
        if (n == 1) trivial.decomposition.leaf_of_vertex = {0};
        return trivial;
    }

    std::vector<std::uint32_t> adj(n, 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    const std::uint32_t full = (1u << n) - 1;

    std::vector<std::uint8_t> rho(full + 1, 0);
    for (std::uint32_t x = 1; x < full; ++x) {
        std::vector<std::uint32_t> rows;
        std::uint32_t r = x;
        while (r) {
            const unsigned v = static_cast<unsigned>(std::countr_zero(r));
            r &= r - 1;
            rows.push_back(adj[v] & ~x);
        }
        rho[x] = static_cast<std::uint8_t>(detail::rank_of_rows(std::move(rows)));
    }

    std::vector<std::uint8_t> f(full + 1, 0);
    std::vector<std::uint32_t> choice(full + 1, 0);
    for (std::uint32_t set = 1; set <= full; ++set) {
        if (std::popcount(set) < 2) continue;
        const std::uint32_t low = set & (set ^ (set - 1));  // lowest bit stays in T
        std::uint32_t best = 0xFF, best_t = 0;
        // Enumerate submasks T of set that contain the lowest bit.
        for (std::uint32_t rest = set & ~low;; rest = (rest - 1) & (set & ~low)) {
            const std::uint32_t t = rest | low;
            if (t != set) {
                const std::uint32_t other = set & ~t;
                const std::uint32_t value = std::max(std::max<std::uint32_t>(f[t], f[other]),
                                                     std::max<std::uint32_t>(rho[t], rho[other]));
                if (value < best) {
                    best = value;
                    best_t = t;
                }
            }
            if (rest == 0) break;
        }
        f[set] = static_cast<std::uint8_t>(best);
        choice[set] = best_t;
        if (set == full) break;
    }

    std::uint32_t width = 0xFF, root_a = 0;
    for (std::uint32_t rest = full & ~1u;; rest = (rest - 1) & (full & ~1u)) {
        const std::uint32_t a = rest | 1u;
        if (a != full) {
            const std::uint32_t b = full & ~a;
            const std::uint32_t value =
                std::max<std::uint32_t>(rho[a], std::max<std::uint32_t>(f[a], f[b]));
            if (value < width) {
                width = value;
                root_a = a;
            }
        }
        if (rest == 0) break;
    }

    RankwidthResult result;
    result.width = width;
    RankDecomposition& rd = result.decomposition;
    rd.leaf_of_vertex.assign(n, -1);
    // Build the two halves as rooted binary trees, then join their roots.
    auto build = [&](auto&& self, std::uint32_t set) -> std::uint32_t {
        if (std::popcount(set) == 1) {
            const unsigned v = static_cast<unsigned>(std::countr_zero(set));
            const std::uint32_t node = static_cast<std::uint32_t>(rd.node_count++);
            rd.leaf_of_vertex[v] = node;
            return node;
        }
        const std::uint32_t t = choice[set];
        const std::uint32_t left = self(self, t);
        const std::uint32_t right = self(self, set & ~t);
        const std::uint32_t node = static_cast<std::uint32_t>(rd.node_count++);
        rd.tree_edges.emplace_back(node, left);
        rd.tree_edges.emplace_back(node, right);
        return node;
    };
    const std::uint32_t ra = build(build, root_a);
    const std::uint32_t rb = build(build, full & ~root_a);
    rd.tree_edges.emplace_back(ra, rb);
    return result;
}

/// A tree edge of the witness whose leaf sides both have at least ceil(n/3)
/// vertices; one exists in every subcubic tree with n >= 2 leaves. Returns
/// the induced vertex bipartition.
inline std::pair<VertexSet, VertexSet> balanced_leaf_split(const Graph& g, const RankDecomposition& rd) {
    const std::size_t n = g.vertex_count();
    if (n < 2) throw std::domain_error("balanced_leaf_split: need at least two vertices");
    const std::size_t lo = (n + 2) / 3;
    for (std::size_t i = 0; i < rd.tree_edges.size(); ++i) {
        VertexSet a(n), b(n);
        detail::leaf_split(rd, i, a, b);
        if (a.count() >= lo && b.count() >= lo) return {a, b};
    }
    throw std::logic_error("balanced_leaf_split: no balanced edge found");
}

inline std::string to_text(const RankDecomposition& rd) {
    // Parent array rooted at node 0, then the vertex-to-leaf map.
    std::vector<std::int64_t> parent(rd.node_count, -1);
    std::vector<std::vector<std::uint32_t>> adj(rd.node_count);
    for (const auto& [a, b] : rd.tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    if (rd.node_count > 0) {
        std::vector<bool> seen(rd.node_count, false);
        std::vector<std::uint32_t> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            std::uint32_t x = stack.back();
            stack.pop_back();
            for (std::uint32_t y : adj[x])
                if (!seen[y]) {
                    seen[y] = true;
                    parent[y] = x;
                    stack.push_back(y);
                }
        }
    }
    std::ostringstream os;
    os << "nodes " << rd.node_count << '\n' << "parents";
    for (std::int64_t p : parent) os << ' ' << p;
    os << '\n' << "leaves\n";
    for (std::size_t v = 0; v < rd.leaf_of_vertex.size(); ++v)
        os << v << ' ' << rd.leaf_of_vertex[v] << '\n';
    return os.str();
}

}  // namespace widthlab
