#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "widthlab/graph.hpp"
#include "widthlab/rng.hpp"

namespace widthlab {

using DegreeSequence = std::vector<std::uint32_t>;

/// Configuration-model state: cells W_1..W_s of half-edges (cell i holds
/// d_i consecutive half-edge indices) plus a perfect matching on all
/// half-edges, stored as a fixed-point-free involution.
class Configuration {
public:
    Configuration() = default;

    Configuration(DegreeSequence degrees, std::vector<std::uint32_t> partner)
        : partner_(std::move(partner)) {
        cell_offset_.reserve(degrees.size() + 1);
        cell_offset_.push_back(0);
        for (std::uint32_t d : degrees) cell_offset_.push_back(cell_offset_.back() + d);
        const std::uint32_t h = cell_offset_.back();
        if (partner_.size() != h) throw std::invalid_argument("Configuration: matching size mismatch");
        if (h % 2 != 0) throw std::invalid_argument("Configuration: odd number of half-edges");
        cell_of_.resize(h);
        for (std::size_t c = 0; c + 1 < cell_offset_.size(); ++c)
            for (std::uint32_t e = cell_offset_[c]; e < cell_offset_[c + 1]; ++e)
                cell_of_[e] = static_cast<std::uint32_t>(c);
        for (std::uint32_t e = 0; e < h; ++e) {
            if (partner_[e] >= h || partner_[e] == e || partner_[partner_[e]] != e)
                throw std::invalid_argument("Configuration: matching is not a fixed-point-free involution");
        }
    }

    std::size_t cell_count() const { return cell_offset_.empty() ? 0 : cell_offset_.size() - 1; }
    std::uint32_t half_edge_count() const { return cell_offset_.empty() ? 0 : cell_offset_.back(); }

    std::uint32_t cell_of(std::uint32_t half_edge) const { return cell_of_[half_edge]; }
    std::uint32_t partner(std::uint32_t half_edge) const { return partner_[half_edge]; }

    std::uint32_t cell_degree(std::size_t cell) const {
        return cell_offset_[cell + 1] - cell_offset_[cell];
    }

    std::uint32_t cell_begin(std::size_t cell) const { return cell_offset_[cell]; }
    std::uint32_t cell_end(std::size_t cell) const { return cell_offset_[cell + 1]; }

    DegreeSequence degrees() const {
        DegreeSequence d(cell_count());
        for (std::size_t c = 0; c < d.size(); ++c) d[c] = cell_degree(c);
        return d;
    }

    const std::vector<std::uint32_t>& matching() const { return partner_; }

    friend bool operator==(const Configuration& a, const Configuration& b) {
        return a.cell_offset_ == b.cell_offset_ && a.partner_ == b.partner_;
    }

private:
    std::vector<std::uint32_t> cell_offset_;  // s+1 entries
    std::vector<std::uint32_t> cell_of_;      // per half-edge
    std::vector<std::uint32_t> partner_;      // involution without fixed points
};

/// Uniform configuration on the given degree sequence: shuffle all half-edges
/// (Fisher-Yates) and pair them up consecutively. Uniformity over perfect
/// matchings follows from uniformity of the shuffle.
inline Configuration sample_configuration(const DegreeSequence& degrees, std::uint64_t seed) {
    std::uint64_t total = std::accumulate(degrees.begin(), degrees.end(), std::uint64_t{0});
    if (total % 2 != 0) throw std::invalid_argument("sample_configuration: odd half-edge total");
    std::vector<std::uint32_t> order(total);
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    rng.shuffle(order);
    std::vector<std::uint32_t> partner(total);
    for (std::size_t i = 0; i + 1 < total; i += 2) {
        partner[order[i]] = order[i + 1];
        partner[order[i + 1]] = order[i];
    }
    return Configuration(degrees, std::move(partner));
}

/// Project a configuration to its multigraph: vertex per cell, one edge per
/// matched pair; a pair inside one cell becomes a loop.
inline MultiGraph multigraph_of(const Configuration& c) {
    std::vector<EdgePair> edges;
    edges.reserve(c.half_edge_count() / 2);
    for (std::uint32_t e = 0; e < c.half_edge_count(); ++e) {
        const std::uint32_t f = c.partner(e);
        if (e < f) edges.emplace_back(c.cell_of(e), c.cell_of(f));
    }
    return MultiGraph(c.cell_count(), std::move(edges));
}

/// G*(m,k): random k-regular multigraph on m vertices via the constant
/// degree sequence.
inline MultiGraph sample_random_regular(std::uint32_t m, std::uint32_t k, std::uint64_t seed) {
    return multigraph_of(sample_configuration(DegreeSequence(m, k), seed));
}

inline bool is_simple(const MultiGraph& g) {
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].first == edges[i].second) return false;
        if (i > 0 && edges[i] == edges[i - 1]) return false;
    }
    return true;
}

/// A simple multigraph reinterpreted as a Graph.
inline Graph as_simple_graph(const MultiGraph& g) {
    if (!is_simple(g)) throw std::domain_error("as_simple_graph: multigraph has loops or parallel edges");
    return Graph(g.vertex_count(), g.edges());
}

}  // namespace widthlab
