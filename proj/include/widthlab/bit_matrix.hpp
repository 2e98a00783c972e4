#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "widthlab/graph.hpp"

namespace widthlab {

/// Matrix over GF(2), rows bit-packed into 64-bit words.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64), data_(rows * words_per_row_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t r, std::size_t c, bool value = true) {
        check(r, c);
        std::uint64_t& w = data_[r * words_per_row_ + (c >> 6)];
        const std::uint64_t bit = 1ULL << (c & 63);
        if (value)
            w |= bit;
        else
            w &= ~bit;
    }

    bool get(std::size_t r, std::size_t c) const {
        check(r, c);
        return (data_[r * words_per_row_ + (c >> 6)] >> (c & 63)) & 1ULL;
    }

    std::size_t nonzero_count() const {
        std::size_t c = 0;
        for (std::uint64_t w : data_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Rank over GF(2) by row elimination. Degenerate shapes (all rows equal,
    /// zero matrix) exit early; that is the common case in cutrank loops.
    std::size_t rank() const {
        if (rows_ == 0 || cols_ == 0) return 0;
        std::vector<std::uint64_t> work(data_);
        const std::size_t wpr = words_per_row_;

        bool any = false, all_same = true;
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t k = 0; k < wpr; ++k) {
                if (work[r * wpr + k]) any = true;
                if (work[r * wpr + k] != work[k]) all_same = false;
            }
        }
        if (!any) return 0;
        if (all_same) return 1;

        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
            const std::size_t word = col >> 6;
            const std::uint64_t bit = 1ULL << (col & 63);
            std::size_t pivot = rows_;
            for (std::size_t r = rank; r < rows_; ++r) {
                if (work[r * wpr + word] & bit) {
                    pivot = r;
                    break;
                }
            }
            if (pivot == rows_) continue;
            if (pivot != rank)
                for (std::size_t k = 0; k < wpr; ++k) std::swap(work[pivot * wpr + k], work[rank * wpr + k]);
            for (std::size_t r = rank + 1; r < rows_; ++r) {
                if (work[r * wpr + word] & bit)
                    for (std::size_t k = word; k < wpr; ++k) work[r * wpr + k] ^= work[rank * wpr + k];
            }
            ++rank;
        }
        return rank;
    }

private:
    void check(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("BitMatrix: index out of range");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> data_;
};

inline std::size_t gf2_rank(const BitMatrix& m) { return m.rank(); }

/// Rank over GF(2) of the A-by-B adjacency matrix. Symmetric in (A, B).
inline std::size_t cutrank(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.universe() != g.vertex_count() || b.universe() != g.vertex_count())
        throw std::out_of_range("cutrank: set universe does not match graph");
    if (a.intersects(b)) throw std::invalid_argument("cutrank: sets overlap");
    const std::vector<Vertex> rows = a.to_vector();
    const std::vector<Vertex> cols = b.to_vector();
    BitMatrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto nbrs = g.neighbors(rows[i]);
        std::size_t j = 0;
        for (Vertex w : nbrs) {
            while (j < cols.size() && cols[j] < w) ++j;
            if (j < cols.size() && cols[j] == w) m.set(i, j);
        }
    }
    return m.rank();
}

}  // namespace widthlab
