#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "widthlab/graph.hpp"

namespace widthlab {

// Edge-list text format: first line "n m", then m lines "u v". A Graph is
// written with u < v and the lines sorted; a MultiGraph repeats lines for
// multiplicity and writes a loop as "v v". The writer is canonical, so
// parse(write(g)) == g and write(parse(write(g))) is byte-identical.

namespace detail {

template <class G>
void write_edges(std::ostream& os, const G& g) {
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

inline std::vector<EdgePair> read_edge_lines(std::istream& is, std::size_t& n_out) {
    std::size_t n = 0, m = 0;
    if (!(is >> n >> m)) throw std::invalid_argument("edge list: missing header line");
    std::vector<EdgePair> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        unsigned long long u = 0, v = 0;
        if (!(is >> u >> v)) throw std::invalid_argument("edge list: truncated edge line");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    n_out = n;
    return edges;
}

}  // namespace detail

inline void write_edge_list(std::ostream& os, const Graph& g) { detail::write_edges(os, g); }
inline void write_edge_list(std::ostream& os, const MultiGraph& g) { detail::write_edges(os, g); }

template <class G>
std::string to_edge_list(const G& g) {
    std::ostringstream os;
    write_edge_list(os, g);
    return os.str();
}

inline Graph read_graph(std::istream& is) {
    std::size_t n = 0;
    auto edges = detail::read_edge_lines(is, n);
    return Graph(n, std::move(edges));
}

inline MultiGraph read_multigraph(std::istream& is) {
    std::size_t n = 0;
    auto edges = detail::read_edge_lines(is, n);
    return MultiGraph(n, std::move(edges));
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream is(text);
    return read_graph(is);
}

inline MultiGraph parse_multigraph(const std::string& text) {
    std::istringstream is(text);
    return read_multigraph(is);
}

template <class G>
void save_edge_list(const std::string& path, const G& g) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_edge_list(os, g);
}

inline Graph load_graph(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    return read_graph(is);
}

inline MultiGraph load_multigraph(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    return read_multigraph(is);
}

}  // namespace widthlab
