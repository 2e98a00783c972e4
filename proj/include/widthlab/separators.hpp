#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "widthlab/graph.hpp"
#include "widthlab/rational.hpp"

namespace widthlab {

inline constexpr std::size_t kSeparatorCap = 20;

namespace detail {

/// Component sizes of g restricted to `alive` (a bitmask).
inline std::vector<std::uint32_t> component_sizes_in_mask(const std::vector<std::uint32_t>& adj,
                                                          std::uint32_t alive) {
    std::vector<std::uint32_t> sizes;
    std::uint32_t todo = alive;
    while (todo) {
        std::uint32_t comp = todo & (~todo + 1);  // lowest remaining vertex
        std::uint32_t frontier = comp;
        while (frontier) {
            std::uint32_t nbrs = 0;
            std::uint32_t f = frontier;
            while (f) {
                const unsigned u = static_cast<unsigned>(std::countr_zero(f));
                f &= f - 1;
                nbrs |= adj[u];
            }
            frontier = nbrs & alive & ~comp;
            comp |= frontier;
        }
        sizes.push_back(static_cast<std::uint32_t>(std::popcount(comp)));
        todo &= ~comp;
    }
    return sizes;
}

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(g.vertex_count(), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    return adj;
}

}  // namespace detail

/// Is every component of G - S of size at most alpha * |V \ S|?
/// (S = V is vacuously a separator.)
inline bool is_separator(const Graph& g, const VertexSet& s, const Rational& alpha) {
    const std::size_t n = g.vertex_count();
    if (s.universe() != n) throw std::invalid_argument("is_separator: universe mismatch");
    if (n > 32) throw capacity_error("is_separator: n exceeds the enumeration cap");
    const std::uint32_t smask = static_cast<std::uint32_t>(s.low_mask());
    const std::uint32_t alive = ((n == 32 ? ~0u : (1u << n) - 1)) & ~smask;
    const std::uint32_t rest = static_cast<std::uint32_t>(std::popcount(alive));
    const auto adj = detail::adjacency_masks(g);
    for (std::uint32_t size : detail::component_sizes_in_mask(adj, alive)) {
        // size <= alpha * rest, compared exactly
        if (Rational(size) > alpha * Rational(rest)) return false;
    }
    return true;
}

struct SeparatorResult {
    std::uint32_t size = 0;
    VertexSet separator;
};

/// Smallest k such that some S with |S| = k leaves every component of G - S
/// of size at most alpha * |V \ S|. Always defined because S = V works.
/// Subset enumeration in increasing size, so the witness is the
/// lexicographically first optimum.
inline SeparatorResult sep_alpha_exact(const Graph& g, const Rational& alpha) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw std::domain_error("sep_alpha_exact: empty graph");
    if (n > kSeparatorCap) throw capacity_error("sep_alpha_exact: n exceeds the enumeration cap");
    if (!(alpha > Rational(0)) || alpha > Rational(1))
        throw std::invalid_argument("sep_alpha_exact: alpha outside (0,1]");

    const auto adj = detail::adjacency_masks(g);
    const std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t k = 0; k <= n; ++k) {
        // Gosper's hack over all subsets of size k.
        std::uint32_t set = (k == 0) ? 0 : (1u << k) - 1;
        for (;;) {
            const std::uint32_t alive = full & ~set;
            const std::uint32_t rest = static_cast<std::uint32_t>(std::popcount(alive));
            bool ok = true;
            for (std::uint32_t size : detail::component_sizes_in_mask(adj, alive)) {
                if (Rational(size) > alpha * Rational(rest)) {
                    ok = false;
                    break;
                }
            }
            if (ok) return SeparatorResult{k, VertexSet::from_mask(n, set)};
            if (set == 0) break;
            const std::uint32_t c = set & (~set + 1);
            const std::uint32_t r = set + c;
            set = (((r ^ set) >> 2) / c) | r;
            if (set > full) break;
        }
    }
    // Unreachable: S = V always qualifies.
    throw std::logic_error("sep_alpha_exact: enumeration exhausted");
}

/// Partition (A, S, B) with no A-B edges and both sides between one and two
/// thirds of |V \ S|.
struct BalancedPartition {
    VertexSet a, s, b;
};

inline bool is_valid_balanced_partition(const Graph& g, const BalancedPartition& p) {
    const std::size_t n = g.vertex_count();
    if (p.a.universe() != n || p.s.universe() != n || p.b.universe() != n) return false;
    if (p.a.intersects(p.s) || p.a.intersects(p.b) || p.s.intersects(p.b)) return false;
    if (p.a.count() + p.s.count() + p.b.count() != n) return false;
    if (edge_cut(g, p.a, p.b) != 0) return false;
    const std::size_t rest = n - p.s.count();
    const std::size_t lo = (rest + 2) / 3;
    const std::size_t hi = 2 * rest / 3;
    return p.a.count() >= lo && p.a.count() <= hi && p.b.count() >= lo && p.b.count() <= hi;
}

/// Greedy construction of a balanced partition from a 1/2-separator: list
/// the components of G - S in non-increasing order of size and move the
/// shortest prefix whose union reaches a third of the rest into A.
inline BalancedPartition balanced_partition_from_separator(const Graph& g, const VertexSet& s) {
    const std::size_t n = g.vertex_count();
    if (s.universe() != n) throw std::invalid_argument("balanced_partition_from_separator: universe mismatch");
    if (!is_separator(g, s, Rational(1, 2)))
        throw std::domain_error("balanced_partition_from_separator: S is not a 1/2-separator");
    const std::size_t rest = n - s.count();
    if (rest == 0)
        throw std::domain_error("balanced_partition_from_separator: S leaves no vertices to split");

    InducedSubgraph remainder = induced_subgraph(g, s.complement());
    std::vector<VertexSet> comps = components(remainder.graph);
    std::stable_sort(comps.begin(), comps.end(),
                     [](const VertexSet& x, const VertexSet& y) { return x.count() > y.count(); });

    BalancedPartition out{VertexSet(n), s, VertexSet(n)};
    std::size_t taken = 0;
    std::size_t j = 0;
    while (j < comps.size() && 3 * taken < rest) {
        comps[j].for_each([&](Vertex v) { out.a.insert(remainder.old_of_new[v]); });
        taken += comps[j].count();
        ++j;
    }
    for (; j < comps.size(); ++j)
        comps[j].for_each([&](Vertex v) { out.b.insert(remainder.old_of_new[v]); });
    return out;
}

}  // namespace widthlab
