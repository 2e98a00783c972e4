#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "widthlab/graph.hpp"
#include "widthlab/rng.hpp"

namespace widthlab {

/// Binomial random graph G(n,p): every unordered pair is an edge
/// independently with probability p. Sparse sampling runs in expected
/// O(n + m) time by geometric skipping over the pair sequence
/// (1,0),(2,0),(2,1),(3,0),... rather than flipping all C(n,2) coins.
inline Graph sample_gnp(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0) || !(p <= 1.0)) throw std::invalid_argument("sample_gnp: p outside [0,1]");
    if (p == 0.0 || n < 2) return Graph(n, {});

    std::vector<EdgePair> edges;
    if (p == 1.0) {
        edges.reserve(n * (n - 1) / 2);
        for (Vertex v = 1; v < n; ++v)
            for (Vertex u = 0; u < v; ++u) edges.emplace_back(u, v);
        return Graph(n, std::move(edges));
    }

    Rng rng(seed);
    const double log_q = std::log1p(-p);
    std::uint64_t v = 1;
    std::uint64_t w = static_cast<std::uint64_t>(-1);  // position within row v, starts before 0
    while (v < n) {
        const double r = rng.real01();
        const double skip = std::floor(std::log1p(-r) / log_q);
        // Clamp: a single huge skip means no further edge exists at all.
        if (skip > static_cast<double>(n) * static_cast<double>(n)) break;
        w += 1 + static_cast<std::uint64_t>(skip);
        while (v < n && w >= v) {
            w -= v;
            ++v;
        }
        if (v < n) edges.emplace_back(static_cast<Vertex>(w), static_cast<Vertex>(v));
    }
    return Graph(n, std::move(edges));
}

/// Sprinkling complement: p2 such that (1-p1)(1-p2) = 1-p, i.e. sampling
/// G(n,p1) and G(n,p2) independently and taking the union is distributed
/// as G(n,p).
inline double sprinkle_complement(double p, double p1) {
    if (!(p >= 0.0) || !(p < 1.0)) throw std::invalid_argument("sprinkle_complement: p outside [0,1)");
    if (!(p1 >= 0.0) || p1 > p) throw std::invalid_argument("sprinkle_complement: need 0 <= p1 <= p");
    return (p - p1) / (1.0 - p1);
}

inline Graph union_graphs(const Graph& g1, const Graph& g2) {
    if (g1.vertex_count() != g2.vertex_count())
        throw std::invalid_argument("union_graphs: vertex counts differ");
    std::vector<EdgePair> edges;
    edges.reserve(g1.edge_count() + g2.edge_count());
    const auto& a = g1.edges();
    const auto& b = g2.edges();
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j]))
            edges.push_back(a[i++]);
        else if (i == a.size() || b[j] < a[i])
            edges.push_back(b[j++]);
        else {
            edges.push_back(a[i++]);
            ++j;
        }
    }
    return Graph(g1.vertex_count(), std::move(edges));
}

}  // namespace widthlab
