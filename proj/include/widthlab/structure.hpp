#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "widthlab/graph.hpp"

namespace widthlab {

struct CoreResult {
    Graph core;
    std::vector<Vertex> old_of_new;
};

/// 2-core: the maximal subgraph of minimum degree >= 2, obtained by
/// iterated deletion of vertices of degree <= 1. Idempotent; empty when no
/// cycle exists.
inline CoreResult two_core(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> deg(n);
    std::vector<bool> dead(n, false);
    std::vector<Vertex> queue;
    for (std::size_t v = 0; v < n; ++v) {
        deg[v] = g.degree(static_cast<Vertex>(v));
        if (deg[v] <= 1) {
            dead[v] = true;
            queue.push_back(static_cast<Vertex>(v));
        }
    }
    while (!queue.empty()) {
        Vertex v = queue.back();
        queue.pop_back();
        for (Vertex w : g.neighbors(v)) {
            if (dead[w]) continue;
            if (--deg[w] <= 1) {
                dead[w] = true;
                queue.push_back(w);
            }
        }
    }
    std::vector<Vertex> keep;
    for (std::size_t v = 0; v < n; ++v)
        if (!dead[v]) keep.push_back(static_cast<Vertex>(v));
    InducedSubgraph sub = induced_subgraph(g, keep);
    return CoreResult{std::move(sub.graph), std::move(sub.old_of_new)};
}

/// Witness of a degree-two suppression: which input vertices survive, and
/// for each output edge the full input path (endpoints included) that it
/// replaces.
struct SuppressionMap {
    std::vector<Vertex> old_of_new;
    std::vector<std::vector<Vertex>> edge_paths;  // aligned with the output graph's edge order
};

inline std::string to_text(const SuppressionMap& map) {
    std::ostringstream os;
    for (std::size_t i = 0; i < map.edge_paths.size(); ++i) {
        os << i << ':';
        for (Vertex v : map.edge_paths[i]) os << ' ' << v;
        os << '\n';
    }
    return os.str();
}

struct SuppressResult {
    MultiGraph graph;
    SuppressionMap map;
};

/// Repeatedly replace a non-kept degree-2 vertex by an edge joining its two
/// neighbours (a loop when they coincide). A vertex whose degree two comes
/// from a single loop is terminal and stays. The input is a subdivision of
/// the output restricted to surviving vertices.
inline SuppressResult suppress_degree_two(const MultiGraph& g, const VertexSet* keep = nullptr) {
    const std::size_t n = g.vertex_count();
    if (keep != nullptr && keep->universe() != n)
        throw std::invalid_argument("suppress_degree_two: keep-set universe mismatch");

    struct EdgeRec {
        Vertex a, b;
        std::vector<Vertex> path;  // a ... b in input vertex ids
        bool alive = true;
    };
    std::vector<EdgeRec> recs;
    recs.reserve(g.edge_count());
    std::vector<std::vector<std::uint32_t>> inc(n);  // loops listed twice
    for (const auto& [u, v] : g.edges()) {
        const std::uint32_t id = static_cast<std::uint32_t>(recs.size());
        recs.push_back(EdgeRec{u, v, {u, v}, true});
        inc[u].push_back(id);
        inc[v].push_back(id);
    }

    std::vector<bool> suppressed(n, false);
    auto suppressible = [&](Vertex v) -> bool {
        if (suppressed[v]) return false;
        if (keep != nullptr && keep->contains(v)) return false;
        if (inc[v].size() != 2) return false;
        return inc[v][0] != inc[v][1];  // a lone loop cannot be contracted away
    };

    std::set<Vertex> candidates;
    for (std::size_t v = 0; v < n; ++v)
        if (suppressible(static_cast<Vertex>(v))) candidates.insert(static_cast<Vertex>(v));

    auto detach = [&](Vertex v, std::uint32_t id) {
        auto& list = inc[v];
        list.erase(std::find(list.begin(), list.end(), id));
    };
    auto oriented_from = [&](const EdgeRec& e, Vertex from) {
        std::vector<Vertex> p = e.path;
        if (p.front() != from) std::reverse(p.begin(), p.end());
        return p;
    };

    while (!candidates.empty()) {
        const Vertex v = *candidates.begin();
        candidates.erase(candidates.begin());
        if (!suppressible(v)) continue;
        const std::uint32_t id1 = inc[v][0];
        const std::uint32_t id2 = inc[v][1];
        EdgeRec& e1 = recs[id1];
        EdgeRec& e2 = recs[id2];
        const Vertex a = (e1.a == v) ? e1.b : e1.a;
        const Vertex b = (e2.a == v) ? e2.b : e2.a;

        std::vector<Vertex> left = oriented_from(e1, a);    // a ... v
        std::vector<Vertex> right = oriented_from(e2, v);   // v ... b
        left.insert(left.end(), right.begin() + 1, right.end());

        e1.alive = false;
        e2.alive = false;
        detach(a, id1);
        detach(b, id2);
        inc[v].clear();
        suppressed[v] = true;

        const std::uint32_t nid = static_cast<std::uint32_t>(recs.size());
        recs.push_back(EdgeRec{a, b, std::move(left), true});
        inc[a].push_back(nid);
        inc[b].push_back(nid);

        if (suppressible(a)) candidates.insert(a);
        if (suppressible(b)) candidates.insert(b);
    }

    std::vector<Vertex> old_of_new;
    std::vector<Vertex> new_of_old(n, static_cast<Vertex>(-1));
    for (std::size_t v = 0; v < n; ++v) {
        if (!suppressed[v]) {
            new_of_old[v] = static_cast<Vertex>(old_of_new.size());
            old_of_new.push_back(static_cast<Vertex>(v));
        }
    }

    struct OutEdge {
        EdgePair e;
        std::vector<Vertex> path;
    };
    std::vector<OutEdge> out;
    for (const EdgeRec& r : recs) {
        if (!r.alive) continue;
        Vertex u = new_of_old[r.a];
        Vertex v = new_of_old[r.b];
        std::vector<Vertex> path = r.path;
        if (u > v || (u == v && path.size() > 2 && path[1] > path[path.size() - 2]))
            std::reverse(path.begin(), path.end());
        if (u > v) std::swap(u, v);
        out.push_back(OutEdge{{u, v}, std::move(path)});
    }
    std::sort(out.begin(), out.end(),
              [](const OutEdge& x, const OutEdge& y) { return std::tie(x.e, x.path) < std::tie(y.e, y.path); });

    std::vector<EdgePair> edges;
    SuppressionMap map;
    map.old_of_new = std::move(old_of_new);
    for (auto& rec : out) {
        edges.push_back(rec.e);
        map.edge_paths.push_back(std::move(rec.path));
    }
    return SuppressResult{MultiGraph(map.old_of_new.size(), std::move(edges)), std::move(map)};
}

inline SuppressResult suppress_degree_two(const Graph& g, const VertexSet* keep = nullptr) {
    return suppress_degree_two(MultiGraph(g.vertex_count(), g.edges()), keep);
}

struct KernelResult {
    MultiGraph kernel;
    SuppressionMap map;  // in the input graph's vertex ids
};

/// Kernel: 2-core, then delete isolated cycles, then contract every bare
/// path to a single (possibly parallel or loop) edge. Result has minimum
/// degree >= 3 or is empty.
inline KernelResult kernel(const Graph& g) {
    CoreResult core = two_core(g);
    ComponentLabels labels = component_labels(core.core);
    std::vector<bool> cyclic(labels.size.size(), true);
    for (std::size_t v = 0; v < core.core.vertex_count(); ++v)
        if (core.core.degree(static_cast<Vertex>(v)) != 2) cyclic[labels.label[v]] = false;
    std::vector<Vertex> keep;
    for (std::size_t v = 0; v < core.core.vertex_count(); ++v)
        if (!cyclic[labels.label[v]]) keep.push_back(static_cast<Vertex>(v));

    InducedSubgraph pruned = induced_subgraph(core.core, keep);
    SuppressResult sup = suppress_degree_two(pruned.graph);

    // Rewrite the suppression witness in the original graph's vertex ids.
    auto original = [&](Vertex v) { return core.old_of_new[pruned.old_of_new[v]]; };
    KernelResult out;
    out.kernel = std::move(sup.graph);
    out.map.old_of_new.reserve(sup.map.old_of_new.size());
    for (Vertex v : sup.map.old_of_new) out.map.old_of_new.push_back(original(v));
    out.map.edge_paths.reserve(sup.map.edge_paths.size());
    for (const auto& path : sup.map.edge_paths) {
        std::vector<Vertex> p;
        p.reserve(path.size());
        for (Vertex v : path) p.push_back(original(v));
        out.map.edge_paths.push_back(std::move(p));
    }
    return out;
}

/// Local complementation G*v: adjacency within N(v) is reversed, everything
/// else untouched. Applying it twice at the same vertex is the identity.
inline Graph local_complement(const Graph& g, Vertex v) {
    if (v >= g.vertex_count()) throw std::out_of_range("local_complement: vertex out of range");
    const auto nbrs = g.neighbors(v);
    std::vector<EdgePair> edges;
    edges.reserve(g.edge_count() + nbrs.size() * nbrs.size() / 2);
    for (const auto& [a, b] : g.edges()) {
        const bool inside = g.adjacent(v, a) && g.adjacent(v, b);
        if (!inside) edges.emplace_back(a, b);
    }
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j)
            if (!g.adjacent(nbrs[i], nbrs[j])) edges.emplace_back(nbrs[i], nbrs[j]);
    return Graph(g.vertex_count(), std::move(edges));
}

struct ResolvedSubdivision {
    Graph graph;  // induced on the untouched vertices
    std::vector<Vertex> old_of_new;
};

/// Undo subdivisions: for each x in X (ascending), x must currently have
/// degree exactly two with nonadjacent neighbours; local-complement at x and
/// delete it. This restores the subdivided edge, so the result equals the
/// degree-two suppression whenever both preconditions hold.
inline ResolvedSubdivision resolve_subdivision(const Graph& g, const VertexSet& x_set) {
    const std::size_t n = g.vertex_count();
    if (x_set.universe() != n) throw std::invalid_argument("resolve_subdivision: universe mismatch");
    std::vector<std::set<Vertex>> adj(n);
    for (const auto& [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    x_set.for_each([&](Vertex x) {
        if (adj[x].size() != 2)
            throw std::domain_error("resolve_subdivision: vertex " + std::to_string(x) +
                                    " does not have degree 2");
        auto it = adj[x].begin();
        const Vertex a = *it++;
        const Vertex b = *it;
        if (adj[a].count(b))
            throw std::domain_error("resolve_subdivision: neighbours of vertex " + std::to_string(x) +
                                    " are adjacent");
        adj[a].erase(x);
        adj[b].erase(x);
        adj[x].clear();
        adj[a].insert(b);
        adj[b].insert(a);
    });
    std::vector<Vertex> keep;
    std::vector<Vertex> new_of_old(n, static_cast<Vertex>(-1));
    for (std::size_t v = 0; v < n; ++v) {
        if (!x_set.contains(static_cast<Vertex>(v))) {
            new_of_old[v] = static_cast<Vertex>(keep.size());
            keep.push_back(static_cast<Vertex>(v));
        }
    }
    std::vector<EdgePair> edges;
    for (Vertex v : keep)
        for (Vertex w : adj[v])
            if (v < w) edges.emplace_back(new_of_old[v], new_of_old[w]);
    return ResolvedSubdivision{Graph(keep.size(), std::move(edges)), std::move(keep)};
}

}  // namespace widthlab
