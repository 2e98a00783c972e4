#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include <bit>

#include "widthlab/common.hpp"

namespace widthlab {

/// Dense bitset over a fixed vertex universe 0..n-1.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet of(std::size_t universe, std::initializer_list<Vertex> members) {
        VertexSet s(universe);
        for (Vertex v : members) s.insert(v);
        return s;
    }

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~0ULL;
        s.trim();
        return s;
    }

    std::size_t universe() const { return n_; }

    bool contains(Vertex v) const {
        if (v >= n_) return false;
        return (words_[v >> 6] >> (v & 63)) & 1ULL;
    }

    void insert(Vertex v) {
        check_range(v);
        words_[v >> 6] |= 1ULL << (v & 63);
    }

    void erase(Vertex v) {
        check_range(v);
        words_[v >> 6] &= ~(1ULL << (v & 63));
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    bool intersects(const VertexSet& other) const {
        std::size_t k = std::min(words_.size(), other.words_.size());
        for (std::size_t i = 0; i < k; ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& other) {
        require_same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& other) {
        require_same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    VertexSet complement() const {
        VertexSet s(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
        s.trim();
        return s;
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(count());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                const unsigned b = static_cast<unsigned>(std::countr_zero(w));
                f(static_cast<Vertex>(i * 64 + b));
                w &= w - 1;
            }
        }
    }

    /// Low 64 bits; only meaningful when universe() <= 64.
    std::uint64_t low_mask() const { return words_.empty() ? 0 : words_[0]; }

    static VertexSet from_mask(std::size_t universe, std::uint64_t mask) {
        if (universe > 64) throw std::invalid_argument("VertexSet::from_mask: universe > 64");
        VertexSet s(universe);
        if (!s.words_.empty()) s.words_[0] = mask;
        s.trim();
        return s;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

private:
    void check_range(Vertex v) const {
        if (v >= n_) throw std::out_of_range("VertexSet: vertex out of range");
    }
    void require_same_universe(const VertexSet& other) const {
        if (n_ != other.n_) throw std::invalid_argument("VertexSet: universe mismatch");
    }
    void trim() {
        if (n_ % 64 != 0 && !words_.empty()) words_.back() &= (1ULL << (n_ % 64)) - 1;
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace widthlab
