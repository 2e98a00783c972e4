#pragma once

#include <vector>

#include "widthlab/graph.hpp"

namespace widthlab::testing {

inline Graph path_graph(std::size_t n) {
    std::vector<EdgePair> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    return Graph(n, std::move(edges));
}

inline Graph cycle_graph(std::size_t n) {
    std::vector<EdgePair> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    edges.emplace_back(0, static_cast<Vertex>(n - 1));
    return Graph(n, std::move(edges));
}

inline Graph complete_graph(std::size_t n) {
    std::vector<EdgePair> edges;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

inline Graph star_graph(std::size_t leaves) {
    std::vector<EdgePair> edges;
    for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph(leaves + 1, std::move(edges));
}

inline Graph cube_graph() {  // Q3: vertices are 3-bit strings, edges flip one bit
    std::vector<EdgePair> edges;
    for (Vertex v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b) {
            const Vertex w = v ^ (1u << b);
            if (v < w) edges.emplace_back(v, w);
        }
    return Graph(8, std::move(edges));
}

inline Graph grid_graph(std::size_t rows, std::size_t cols) {
    std::vector<EdgePair> edges;
    auto id = [&](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph(rows * cols, std::move(edges));
}

}  // namespace widthlab::testing
