#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "widthlab/graph.hpp"
#include "widthlab/rational.hpp"

namespace widthlab {

/// Hard cap for the 2^n cut enumerations below; they fail fast above it
/// instead of silently running for hours.
inline constexpr std::size_t kCutEnumerationCap = 24;

struct CheegerResult {
    Rational phi;
    VertexSet argmin;  // a side achieving the minimum, contains vertex 0
};

/// Exact Cheeger constant min_S e(S,S^c) / min(d(S), d(S^c)) over nonempty
/// proper subsets, by enumeration of the 2^(n-1) splits containing vertex 0.
/// Edge multiplicity counts; loops add two to d(S) and never cross a cut.
template <class G>
CheegerResult cheeger_exact(const G& g) {
    const std::size_t n = g.vertex_count();
    if (n < 2) throw std::domain_error("cheeger_exact: need at least two vertices");
    if (g.edge_count() == 0) throw std::domain_error("cheeger_exact: graph has no edges");
    if (!is_connected(g)) throw std::domain_error("cheeger_exact: graph is disconnected");
    if (n > kCutEnumerationCap) throw capacity_error("cheeger_exact: n exceeds enumeration cap");

    std::vector<std::uint64_t> deg(n);
    std::uint64_t total_degree = 0;
    for (std::size_t v = 0; v < n; ++v) {
        deg[v] = g.degree(static_cast<Vertex>(v));
        total_degree += deg[v];
    }
    const auto& edges = g.edges();

    Rational best(1);  // <= 1 always: e(S,S^c) <= min(d(S), d(S^c)) for some split
    std::uint32_t best_mask = 1;
    bool have = false;
    const std::uint32_t limit = static_cast<std::uint32_t>(1ULL << (n - 1));
    for (std::uint32_t half = 0; half < limit; ++half) {
        const std::uint32_t mask = (half << 1) | 1u;  // vertex 0 always inside
        if (mask == (1ULL << n) - 1) continue;        // proper subset only
        std::uint64_t d_in = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (mask >> v & 1) d_in += deg[v];
        std::uint64_t cut = 0;
        for (const auto& [u, v] : edges)
            if (((mask >> u) & 1) != ((mask >> v) & 1)) ++cut;
        const std::uint64_t d_min = std::min(d_in, total_degree - d_in);
        if (d_min == 0) continue;  // isolated side cannot happen in a connected graph with n>=2
        Rational value(static_cast<long long>(cut), static_cast<long long>(d_min));
        if (!have || value < best) {
            best = value;
            best_mask = mask;
            have = true;
        }
    }
    return CheegerResult{best, VertexSet::from_mask(n, best_mask)};
}

/// Exact bisection width: minimum e(A,B) over bipartitions with
/// ceil(n/3) <= |A| <= floor(2n/3). Enumeration, n capped.
template <class G>
std::uint64_t bisection_width_exact(const G& g) {
    const std::size_t n = g.vertex_count();
    if (n < 2) throw std::domain_error("bisection_width_exact: need at least two vertices");
    if (n > kCutEnumerationCap) throw capacity_error("bisection_width_exact: n exceeds enumeration cap");

    const std::size_t lo = (n + 2) / 3;  // ceil(n/3)
    const std::size_t hi = (2 * n) / 3;  // floor(2n/3)
    const auto& edges = g.edges();
    std::uint64_t best = ~0ULL;
    const std::uint32_t limit = static_cast<std::uint32_t>(1ULL << (n - 1));
    for (std::uint32_t half = 0; half < limit; ++half) {
        const std::uint32_t mask = (half << 1) | 1u;  // fix vertex 0 in A; (A,B) unordered
        const std::size_t size_a = static_cast<std::size_t>(std::popcount(mask));
        if (size_a < lo || size_a > hi) continue;
        std::uint64_t cut = 0;
        for (const auto& [u, v] : edges)
            if (((mask >> u) & 1) != ((mask >> v) & 1)) ++cut;
        best = std::min(best, cut);
    }
    return best;
}

/// Crossing-number lower bound max(0, (b(G)^2 - 4 * sum d(v)^2) / 16)
/// derived from the bisection-width inequality. Exact b(G), so the same
/// size cap applies.
template <class G>
double cr_lower_bound(const G& g) {
    const std::size_t n = g.vertex_count();
    if (n < 2) return 0.0;
    const double b = static_cast<double>(bisection_width_exact(g));
    double degree_squares = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
        const double d = static_cast<double>(g.degree(static_cast<Vertex>(v)));
        degree_squares += d * d;
    }
    const double bound = (b * b - 4.0 * degree_squares) / 16.0;
    return bound > 0.0 ? bound : 0.0;
}

}  // namespace widthlab
