#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "widthlab/common.hpp"
#include "widthlab/vertex_set.hpp"

namespace widthlab {

using EdgePair = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1. No loops, no parallel edges.
/// Immutable after construction; the edge list is kept sorted with u < v.
class Graph {
public:
    Graph() = default;

    Graph(std::size_t n, std::vector<EdgePair> edges) : n_(n), edges_(std::move(edges)) {
        for (auto& [u, v] : edges_) {
            if (u >= n_ || v >= n_) throw std::out_of_range("Graph: endpoint out of range");
            if (u == v) throw std::invalid_argument("Graph: self-loop not allowed");
            if (u > v) std::swap(u, v);
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw std::invalid_argument("Graph: duplicate edge");
        build_adjacency();
    }

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<EdgePair>& edges() const { return edges_; }

    std::size_t degree(Vertex v) const {
        check(v);
        return off_[v + 1] - off_[v];
    }

    std::span<const Vertex> neighbors(Vertex v) const {
        check(v);
        return {adj_.data() + off_[v], adj_.data() + off_[v + 1]};
    }

    bool adjacent(Vertex u, Vertex v) const {
        check(u);
        check(v);
        auto row = neighbors(u);
        return std::binary_search(row.begin(), row.end(), v);
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void check(Vertex v) const {
        if (v >= n_) throw std::out_of_range("Graph: vertex out of range");
    }

    void build_adjacency() {
        off_.assign(n_ + 1, 0);
        for (const auto& [u, v] : edges_) {
            ++off_[u + 1];
            ++off_[v + 1];
        }
        for (std::size_t i = 0; i < n_; ++i) off_[i + 1] += off_[i];
        adj_.resize(edges_.size() * 2);
        std::vector<std::size_t> cursor(off_.begin(), off_.end() - 1);
        for (const auto& [u, v] : edges_) {
            adj_[cursor[u]++] = v;
            adj_[cursor[v]++] = u;
        }
        for (std::size_t v = 0; v < n_; ++v)
            std::sort(adj_.begin() + static_cast<std::ptrdiff_t>(off_[v]),
                      adj_.begin() + static_cast<std::ptrdiff_t>(off_[v + 1]));
    }

    std::size_t n_ = 0;
    std::vector<EdgePair> edges_;
    std::vector<std::size_t> off_;
    std::vector<Vertex> adj_;
};

/// Undirected multigraph: parallel edges and loops allowed. A loop {v,v}
/// contributes two to the degree of v and appears twice in its adjacency row.
class MultiGraph {
public:
    MultiGraph() = default;

    MultiGraph(std::size_t n, std::vector<EdgePair> edges) : n_(n), edges_(std::move(edges)) {
        for (auto& [u, v] : edges_) {
            if (u >= n_ || v >= n_) throw std::out_of_range("MultiGraph: endpoint out of range");
            if (u > v) std::swap(u, v);
        }
        std::sort(edges_.begin(), edges_.end());
        build_adjacency();
    }

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<EdgePair>& edges() const { return edges_; }

    std::size_t degree(Vertex v) const {
        check(v);
        return off_[v + 1] - off_[v];
    }

    std::span<const Vertex> neighbors(Vertex v) const {
        check(v);
        return {adj_.data() + off_[v], adj_.data() + off_[v + 1]};
    }

    std::size_t loop_count(Vertex v) const {
        check(v);
        std::size_t c = 0;
        for (const auto& [a, b] : edges_)
            if (a == v && b == v) ++c;
        return c;
    }

    friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void check(Vertex v) const {
        if (v >= n_) throw std::out_of_range("MultiGraph: vertex out of range");
    }

    void build_adjacency() {
        off_.assign(n_ + 1, 0);
        for (const auto& [u, v] : edges_) {
            ++off_[u + 1];
            ++off_[v + 1];
        }
        for (std::size_t i = 0; i < n_; ++i) off_[i + 1] += off_[i];
        adj_.resize(edges_.size() * 2);
        std::vector<std::size_t> cursor(off_.begin(), off_.end() - 1);
        for (const auto& [u, v] : edges_) {
            adj_[cursor[u]++] = v;
            adj_[cursor[v]++] = u;
        }
        for (std::size_t v = 0; v < n_; ++v)
            std::sort(adj_.begin() + static_cast<std::ptrdiff_t>(off_[v]),
                      adj_.begin() + static_cast<std::ptrdiff_t>(off_[v + 1]));
    }

    std::size_t n_ = 0;
    std::vector<EdgePair> edges_;
    std::vector<std::size_t> off_;
    std::vector<Vertex> adj_;
};

/// Sum of degrees over U; loops count twice.
template <class G>
std::uint64_t degree_sum(const G& g, const VertexSet& u) {
    if (u.universe() != g.vertex_count())
        throw std::out_of_range("degree_sum: set universe does not match graph");
    std::uint64_t total = 0;
    u.for_each([&](Vertex v) { total += g.degree(v); });
    return total;
}

/// Number of edges (with multiplicity) with one endpoint in A, the other in B.
template <class G>
std::uint64_t edge_cut(const G& g, const VertexSet& a, const VertexSet& b) {
    if (a.universe() != g.vertex_count() || b.universe() != g.vertex_count())
        throw std::out_of_range("edge_cut: set universe does not match graph");
    if (a.intersects(b)) throw std::invalid_argument("edge_cut: sets overlap");
    std::uint64_t cut = 0;
    for (const auto& [u, v] : g.edges()) {
        if ((a.contains(u) && b.contains(v)) || (a.contains(v) && b.contains(u))) ++cut;
    }
    return cut;
}

/// Edge count minus vertex count. Meaningful for a single connected
/// component; a tree has excess -1.
template <class G>
long long excess(const G& g) {
    return static_cast<long long>(g.edge_count()) - static_cast<long long>(g.vertex_count());
}

struct ComponentLabels {
    std::vector<Vertex> label;       // component id per vertex, ids are 0..k-1 by first visit
    std::vector<std::size_t> size;   // per component id
};

template <class G>
ComponentLabels component_labels(const G& g) {
    const std::size_t n = g.vertex_count();
    ComponentLabels out;
    out.label.assign(n, static_cast<Vertex>(-1));
    std::vector<Vertex> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (out.label[s] != static_cast<Vertex>(-1)) continue;
        const Vertex id = static_cast<Vertex>(out.size.size());
        out.size.push_back(0);
        out.label[s] = id;
        stack.push_back(static_cast<Vertex>(s));
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            ++out.size[id];
            for (Vertex w : g.neighbors(v)) {
                if (out.label[w] == static_cast<Vertex>(-1)) {
                    out.label[w] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    return out;
}

template <class G>
std::vector<VertexSet> components(const G& g) {
    ComponentLabels labels = component_labels(g);
    std::vector<VertexSet> out(labels.size.size(), VertexSet(g.vertex_count()));
    for (std::size_t v = 0; v < g.vertex_count(); ++v) out[labels.label[v]].insert(static_cast<Vertex>(v));
    return out;
}

template <class G>
bool is_connected(const G& g) {
    if (g.vertex_count() == 0) return true;
    return component_labels(g).size.size() == 1;
}

/// Vertices of the largest component, ascending. Ties go to the component
/// whose smallest vertex is smallest (i.e. the first one discovered).
template <class G>
std::vector<Vertex> largest_component(const G& g) {
    ComponentLabels labels = component_labels(g);
    if (labels.size.empty()) return {};
    Vertex best = 0;
    for (Vertex id = 1; id < labels.size.size(); ++id)
        if (labels.size[id] > labels.size[best]) best = id;
    std::vector<Vertex> out;
    out.reserve(labels.size[best]);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (labels.label[v] == best) out.push_back(static_cast<Vertex>(v));
    return out;
}

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> old_of_new;  // new vertex i was old_of_new[i]
};

struct InducedSubMultigraph {
    MultiGraph graph;
    std::vector<Vertex> old_of_new;
};

namespace detail {

template <class G, class Out>
Out induce(const G& g, const std::vector<Vertex>& keep_sorted) {
    std::vector<Vertex> new_of_old(g.vertex_count(), static_cast<Vertex>(-1));
    for (std::size_t i = 0; i < keep_sorted.size(); ++i) {
        Vertex v = keep_sorted[i];
        if (v >= g.vertex_count()) throw std::out_of_range("induced_subgraph: vertex out of range");
        new_of_old[v] = static_cast<Vertex>(i);
    }
    std::vector<EdgePair> edges;
    for (const auto& [u, v] : g.edges()) {
        Vertex nu = new_of_old[u], nv = new_of_old[v];
        if (nu != static_cast<Vertex>(-1) && nv != static_cast<Vertex>(-1)) edges.emplace_back(nu, nv);
    }
    return Out{{keep_sorted.size(), std::move(edges)}, keep_sorted};
}

}  // namespace detail

inline InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep_sorted) {
    return detail::induce<Graph, InducedSubgraph>(g, keep_sorted);
}

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    return induced_subgraph(g, keep.to_vector());
}

inline InducedSubMultigraph induced_subgraph(const MultiGraph& g, const std::vector<Vertex>& keep_sorted) {
    return detail::induce<MultiGraph, InducedSubMultigraph>(g, keep_sorted);
}

inline InducedSubMultigraph induced_subgraph(const MultiGraph& g, const VertexSet& keep) {
    return induced_subgraph(g, keep.to_vector());
}

}  // namespace widthlab
