#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "widthlab/graph.hpp"

namespace widthlab {

/// Parameters for the bounded-degree tree grower. Zero fields are replaced
/// by the documented defaults at run time:
///   child_cap      K  = ceil(4 ln(1/delta)), at least 2
///   initial_order  N1 = 4 ln ln ln n + 1, rounded up to an odd value >= 5
///   max_attempts   ceil(gamma^-N1 * N1) with 1-gamma = (2+3delta/4)e^(-1-delta/2),
///                  capped at attempt_cap
///   target         ceil(delta * n / 8)
/// The triple-log default for N1 is degenerate at practical n (it evaluates
/// to the floor); pass initial_order explicitly when the early phase needs a
/// wider base.
struct TreeGrowthParams {
    double delta = 0.0;
    std::uint32_t child_cap = 0;
    std::uint32_t initial_order = 0;
    std::uint64_t max_attempts = 0;
    std::uint64_t target = 0;
    std::uint64_t attempt_cap = 100000;
};

struct GrownTree {
    Vertex root = 0;
    std::vector<Vertex> vertices;          // insertion order, root first
    std::vector<std::int64_t> parent_of;   // -1 root, -2 not in the tree
    std::uint32_t max_degree = 0;
};

struct TreeGrowthOutcome {
    std::optional<GrownTree> tree;  // absent when every attempt failed
    std::uint64_t attempts_used = 0;
};

namespace detail {

struct ResolvedGrowthParams {
    std::uint32_t k;
    std::uint32_t n1;
    std::uint64_t attempts;
    std::uint64_t target;
};

inline ResolvedGrowthParams resolve(const TreeGrowthParams& p, std::size_t n) {
    if (!(p.delta > 0.0)) throw std::invalid_argument("tree growth: delta must be positive");
    ResolvedGrowthParams r{};
    r.k = p.child_cap != 0
              ? p.child_cap
              : static_cast<std::uint32_t>(std::max(2.0, std::ceil(4.0 * std::log(1.0 / p.delta))));
    if (r.k < 2) throw std::invalid_argument("tree growth: child cap must be at least 2");

    if (p.initial_order != 0) {
        r.n1 = p.initial_order;
    } else {
        double v = 5.0;
        if (n > 16) {
            const double lll = std::log(std::log(std::log(static_cast<double>(n))));
            if (std::isfinite(lll)) v = 4.0 * lll + 1.0;
        }
        r.n1 = static_cast<std::uint32_t>(std::max(5.0, std::ceil(v)));
    }
    if (r.n1 % 2 == 0) ++r.n1;  // sizes reachable by two-child expansions are odd
    if (r.n1 < 5) r.n1 = 5;

    if (p.max_attempts != 0) {
        r.attempts = p.max_attempts;
    } else {
        const double gamma =
            std::clamp(1.0 - (2.0 + 0.75 * p.delta) * std::exp(-1.0 - 0.5 * p.delta), 0.01, 0.99);
        const double k_attempts = std::ceil(std::pow(gamma, -static_cast<double>(r.n1)) * r.n1);
        r.attempts = k_attempts > static_cast<double>(p.attempt_cap)
                         ? p.attempt_cap
                         : static_cast<std::uint64_t>(k_attempts);
    }
    r.target = p.target != 0
                   ? p.target
                   : static_cast<std::uint64_t>(std::ceil(p.delta * static_cast<double>(n) / 8.0));
    if (r.target == 0) r.target = 1;
    return r;
}

}  // namespace detail

/// Restricted breadth-first tree growth: first grow a partial binary tree of
/// order N1 (root of degree two, inner vertices of degree three, leaves on
/// the last two levels) by repeated attempts, discarding the vertices of
/// failed attempts; then extend level by level, giving each frontier vertex
/// up to K fresh children, until the tree reaches the target size or no
/// frontier vertex can extend. Every arbitrary choice (root, children,
/// expanded leaf, discard set) takes the lowest available index, so the
/// whole procedure is a deterministic function of the graph; the seed
/// argument is reserved for randomized choice policies and is ignored here.
/// The produced tree always satisfies max degree <= K + 1.
inline TreeGrowthOutcome grow_bounded_degree_tree(const Graph& g, const TreeGrowthParams& params,
                                                  std::uint64_t /*seed*/ = 0) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("tree growth: empty graph");
    const detail::ResolvedGrowthParams p = detail::resolve(params, n);

    std::vector<bool> used(n, false);  // X: tree vertices plus discards
    std::size_t used_count = 0;
    Vertex scan = 0;  // lowest index possibly not in X

    auto next_free = [&]() -> std::optional<Vertex> {
        while (scan < n && used[scan]) ++scan;
        if (scan >= n) return std::nullopt;
        return scan;
    };
    auto mark = [&](Vertex v) {
        used[v] = true;
        ++used_count;
    };

    std::vector<std::int64_t> parent(n, -2);
    std::vector<Vertex> order;

    TreeGrowthOutcome outcome;
    for (std::uint64_t attempt = 0; attempt < p.attempts; ++attempt) {
        outcome.attempts_used = attempt + 1;
        const auto root = next_free();
        if (!root) return outcome;  // universe exhausted before any success

        std::vector<Vertex> tree_vertices{*root};
        std::vector<std::int64_t> tree_parent{-1};
        mark(*root);

        // Unexpanded leaves, split by depth so the expansion picks the
        // lowest index among those of minimal depth; this keeps all leaves
        // on the last two levels.
        std::set<Vertex> cur{*root};
        std::set<Vertex> nxt;
        bool failed = false;
        while (tree_vertices.size() < p.n1) {
            if (cur.empty()) cur.swap(nxt);
            if (cur.empty()) {
                failed = true;
                break;
            }
            const Vertex w = *cur.begin();
            cur.erase(cur.begin());
            std::vector<Vertex> fresh;
            for (Vertex u : g.neighbors(w)) {
                if (!used[u]) {
                    fresh.push_back(u);
                    if (fresh.size() == 2) break;
                }
            }
            if (fresh.size() < 2) {
                failed = true;
                break;
            }
            for (Vertex u : fresh) {
                mark(u);
                tree_vertices.push_back(u);
                tree_parent.push_back(w);
                nxt.insert(u);
            }
        }

        if (failed) {
            // Discard enough of the lowest free vertices to account for the
            // whole attempt. If the universe cannot cover it, give up.
            std::uint64_t still = p.n1 - tree_vertices.size();
            while (still > 0) {
                const auto v = next_free();
                if (!v) return outcome;
                mark(*v);
                --still;
            }
            continue;
        }

        // Success: adopt this partial binary tree and switch to level growth.
        order = tree_vertices;
        for (std::size_t i = 0; i < tree_vertices.size(); ++i) parent[tree_vertices[i]] = tree_parent[i];

        std::vector<Vertex> level(cur.begin(), cur.end());
        level.insert(level.end(), nxt.begin(), nxt.end());
        std::sort(level.begin(), level.end());
        while (order.size() < p.target && !level.empty()) {
            std::vector<Vertex> next_level;
            for (Vertex v : level) {
                if (order.size() >= p.target) break;
                std::uint32_t added = 0;
                for (Vertex u : g.neighbors(v)) {
                    if (used[u]) continue;
                    mark(u);
                    parent[u] = v;
                    order.push_back(u);
                    next_level.push_back(u);
                    if (++added == p.k || order.size() >= p.target) break;
                }
            }
            std::sort(next_level.begin(), next_level.end());
            level = std::move(next_level);
        }

        GrownTree tree;
        tree.root = *root;
        tree.vertices = std::move(order);
        tree.parent_of = std::move(parent);
        std::vector<std::uint32_t> deg(n, 0);
        for (Vertex v : tree.vertices) {
            if (tree.parent_of[v] >= 0) {
                ++deg[v];
                ++deg[static_cast<Vertex>(tree.parent_of[v])];
            }
        }
        for (Vertex v : tree.vertices) tree.max_degree = std::max(tree.max_degree, deg[v]);
        outcome.tree = std::move(tree);
        return outcome;
    }
    return outcome;
}

inline std::string tree_parent_text(const GrownTree& tree) {
    std::vector<Vertex> vs = tree.vertices;
    std::sort(vs.begin(), vs.end());
    std::string out;
    for (Vertex v : vs) {
        out += std::to_string(v);
        out += ' ';
        out += std::to_string(tree.parent_of[v]);
        out += '\n';
    }
    return out;
}

}  // namespace widthlab
