#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "widthlab/graph.hpp"

namespace widthlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

struct TreePartitionCount {
    BigInt total;
    std::vector<BigInt> by_crossings;  // index i: partitions with exactly i crossing edges
};

/// Number of ordered bipartitions (A,B) of a tree's vertices, both sides
/// nonempty, with at most k crossing edges. An i-edge subset of the tree
/// whose removal is crossed exactly determines two such partitions (the two
/// proper 2-colourings of the component tree), so the count is
/// 2 * sum_{i=1..k} C(m-1, i) regardless of the tree's shape.
inline TreePartitionCount count_tree_partitions(const Graph& tree, std::uint64_t max_crossings) {
    if (!is_tree(tree) || tree.vertex_count() < 2)
        throw std::domain_error("count_tree_partitions: input is not a tree on >= 2 vertices");
    const std::uint64_t m = tree.vertex_count();
    TreePartitionCount out;
    out.total = 0;
    out.by_crossings.assign(max_crossings + 1, 0);
    for (std::uint64_t i = 1; i <= max_crossings && i <= m - 1; ++i) {
        out.by_crossings[i] = 2 * binomial(m - 1, i);
        out.total += out.by_crossings[i];
    }
    return out;
}

/// h(x) = -x log2 x - (1-x) log2 (1-x), with h(0) = h(1) = 0.
inline double binary_entropy(double x) {
    if (!(x >= 0.0) || !(x <= 1.0)) throw std::domain_error("binary_entropy: x outside [0,1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

/// Checks sum_{i=1..k} C(m,i) <= 2^(h(k/m) m). The left side is exact; the
/// right side's exponent is padded upward by a small margin so floating
/// point can only err toward accepting, never toward a spurious violation.
inline bool entropy_bound_holds(std::uint64_t m, std::uint64_t k) {
    if (m == 0 || 2 * k > m) throw std::invalid_argument("entropy_bound_holds: need k <= m/2");
    BigInt lhs = 0;
    for (std::uint64_t i = 1; i <= k; ++i) lhs += binomial(m, i);
    if (lhs == 0) return true;
    const double rhs_exponent =
        binary_entropy(static_cast<double>(k) / static_cast<double>(m)) * static_cast<double>(m) + 1e-9;
    const unsigned long bits = boost::multiprecision::msb(lhs);  // floor(log2 lhs)
    if (static_cast<double>(bits) > rhs_exponent) return false;  // log2(lhs) >= bits
    const long double lhs_ld = lhs.convert_to<long double>();
    return static_cast<double>(std::log2(lhs_ld)) <= rhs_exponent;
}

/// Exact E[min(Bin(n,p), cap)], as a rational.
inline BigRational truncated_binomial_mean(std::uint64_t n, const BigRational& p, std::uint64_t cap) {
    if (p < 0 || p > 1) throw std::invalid_argument("truncated_binomial_mean: p outside [0,1]");
    if (cap == 0) return 0;
    if (cap >= n) return BigRational(n) * p;
    const BigInt a = boost::multiprecision::numerator(p);
    const BigInt b = boost::multiprecision::denominator(p);
    const BigInt q = b - a;
    // E[min(X,cap)] = cap + sum_{j<cap} (j - cap) P(X = j), over the common
    // denominator b^n.
    std::vector<BigInt> a_pow(cap), q_pow(cap);
    a_pow[0] = 1;
    for (std::uint64_t j = 1; j < cap; ++j) a_pow[j] = a_pow[j - 1] * a;
    q_pow[cap - 1] = boost::multiprecision::pow(q, static_cast<unsigned>(n - cap + 1));
    for (std::uint64_t j = cap - 1; j-- > 0;) q_pow[j] = q_pow[j + 1] * q;
    BigInt numerator = 0;
    for (std::uint64_t j = 0; j < cap; ++j) {
        numerator += binomial(n, j) * a_pow[j] * q_pow[j] *
                     (static_cast<std::int64_t>(j) - static_cast<std::int64_t>(cap));
    }
    const BigInt b_pow = boost::multiprecision::pow(b, static_cast<unsigned>(n));
    return BigRational(cap) + BigRational(numerator, b_pow);
}

/// E[min(Bin(n,p), cap)] >= np - cap * 2^-cap, compared exactly. Meaningful
/// when 2 e n p < cap.
inline bool truncated_mean_bound_holds(std::uint64_t n, const BigRational& p, std::uint64_t cap) {
    const BigRational mean = truncated_binomial_mean(n, p, cap);
    const BigRational bound =
        BigRational(n) * p - BigRational(BigInt(cap), boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(cap)));
    return mean >= bound;
}

}  // namespace widthlab
