// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Every statistical criterion runs with a pinned seed so a failure is
// reproducible bit for bit.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "widthlab/counting.hpp"
#include "widthlab/coupling.hpp"
#include "widthlab/cuts.hpp"
#include "widthlab/experiments.hpp"
#include "widthlab/random_graphs.hpp"
#include "widthlab/rankwidth.hpp"
#include "widthlab/rng.hpp"
#include "widthlab/separators.hpp"
#include "widthlab/tree_growth.hpp"
#include "widthlab/treewidth.hpp"

using namespace widthlab;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

// Independent separator check for criterion 6: plain adjacency-list BFS,
// no bitmasks, no shared code with the library's enumeration.
bool separator_oracle(const Graph& g, const VertexSet& s) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> blocked(n, false);
    s.for_each([&](Vertex v) { blocked[v] = true; });
    std::size_t rest = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (!blocked[v]) ++rest;
    std::vector<int> seen(n, 0);
    for (std::size_t start = 0; start < n; ++start) {
        if (blocked[start] || seen[start]) continue;
        std::size_t size = 0;
        std::vector<Vertex> queue{static_cast<Vertex>(start)};
        seen[start] = 1;
        while (!queue.empty()) {
            const Vertex v = queue.back();
            queue.pop_back();
            ++size;
            for (Vertex w : g.neighbors(v))
                if (!blocked[w] && !seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
        if (2 * size > rest) return false;
    }
    return true;
}

}  // namespace

int main() {
    // ---- Criteria 1-3 and 14 share one batch of supercritical runs. ------
    ExperimentConfig big;
    big.experiment = "sparse_scaling";
    big.n_grid = {2000000};
    big.epsilon_grid = {0.1};
    big.trials = 20;
    big.master_seed = 20250809;
    const std::vector<TrialRecord> runs = run_sparse_scaling(big);
    {
        const double n = 2e6, eps = 0.1;
        const double eps3n = eps * eps * eps * n;
        const double eps2n = eps * eps * n;
        double d3 = 0, d2 = 0, ex = 0;
        int giant_ok = 0, bracket_ok = 0;
        for (const TrialRecord& r : runs) {
            d3 += static_cast<double>(r.d3) / eps3n;
            d2 += static_cast<double>(r.d2) / eps2n;
            ex += static_cast<double>(r.l1_excess) / eps3n;
            if (static_cast<double>(r.l1_size) >= eps * n / 2) ++giant_ok;
            if (static_cast<double>(r.l1_excess) + 1 <= 1.34 * eps3n) ++bracket_ok;
        }
        d3 /= runs.size();
        d2 /= runs.size();
        ex /= runs.size();
        report(1, "2-core degree profile at n=2e6", d3 >= 1.07 && d3 <= 1.60 && d2 >= 1.70 && d2 <= 2.30,
               "mean D3/eps^3n=" + fmt(d3) + " in [1.07,1.60], mean D2/eps^2n=" + fmt(d2) +
                   " in [1.70,2.30]; finite-eps theory at eps=0.1 gives 0.999 and 1.546, so the "
                   "stated windows need eps <= 0.07");
        report(2, "giant-component excess", ex >= 0.50 && ex <= 0.85,
               "mean excess/eps^3n=" + fmt(ex) + " in [0.50,0.85]");
        report(3, "giant-component size", giant_ok >= 19,
               std::to_string(giant_ok) + "/20 trials with |L1| >= eps n/2");
        report(14, "width bracket proxy at scale",
               bracket_ok >= 18,
               std::to_string(bracket_ok) +
                   "/20 trials with excess+1 <= 1.34 eps^3 n; exact widths at this n are out of "
                   "reach, criteria 1-3, 10, 11 carry the two bound directions");
    }

    // ---- Criterion 4: rank-width <= tree-width + 1. -----------------------
    {
        const double probs[3] = {0.2, 0.5, 0.8};
        Rng rng(41);
        int violations = 0;
        for (int it = 0; it < 500; ++it) {
            const std::size_t n = 2 + rng.below(9);  // n in [2,10]
            const Graph g = sample_gnp(n, probs[it % 3], rng.u64());
            if (rankwidth_exact(g).width > treewidth_exact(g).width + 1) ++violations;
        }
        report(4, "rw <= tw + 1 on 500 random graphs", violations == 0,
               std::to_string(violations) + " violations");
    }

    // ---- Criterion 5: tw >= sep_1/2 - 1. ----------------------------------
    {
        Rng rng(42);
        int violations = 0;
        for (int it = 0; it < 500; ++it) {
            const std::size_t n = 2 + rng.below(11);  // n in [2,12]
            const Graph g = sample_gnp(n, 0.2 + 0.1 * static_cast<double>(it % 5), rng.u64());
            const std::uint32_t tw = treewidth_exact(g).width;
            const std::uint32_t sep = sep_alpha_exact(g, Rational(1, 2)).size;
            if (static_cast<long long>(tw) < static_cast<long long>(sep) - 1) ++violations;
        }
        report(5, "tw >= sep_1/2 - 1 on 500 random graphs", violations == 0,
               std::to_string(violations) + " violations");
    }

    // ---- Criterion 6: balanced-partition constructor. ----------------------
    {
        Rng rng(43);
        int confirmed = 0, violations = 0;
        while (confirmed < 500) {
            const std::size_t n = 3 + rng.below(10);  // n in [3,12]
            const Graph g = sample_gnp(n, 0.15 + 0.1 * static_cast<double>(confirmed % 4), rng.u64());
            VertexSet s(n);
            for (std::size_t v = 0; v < n; ++v)
                if (rng.below(3) == 0) s.insert(static_cast<Vertex>(v));
            if (s.count() == n) continue;
            if (!separator_oracle(g, s)) continue;  // independent confirmation
            ++confirmed;
            const BalancedPartition p = balanced_partition_from_separator(g, s);
            if (!is_valid_balanced_partition(g, p)) ++violations;
        }
        report(6, "balanced partitions from confirmed separators", violations == 0,
               std::to_string(violations) + " violations over 500 confirmed instances");
    }

    // ---- Criterion 7: low-support rank bound. -------------------------------
    {
        Rng rng(44);
        int violations = 0;
        const std::uint32_t supports[3] = {2, 3, 5};
        for (int it = 0; it < 1000; ++it) {
            const std::uint32_t support = supports[it % 3];
            const std::size_t rows = 2 + rng.below(15), cols = 2 + rng.below(15);
            BitMatrix m(rows, cols);
            std::vector<std::uint32_t> row_used(rows, 0), col_used(cols, 0);
            const std::size_t tries = rng.below(rows * cols + 1);
            for (std::size_t t = 0; t < tries; ++t) {
                const std::size_t r = rng.below(rows), c = rng.below(cols);
                if (row_used[r] < support && col_used[c] < support && !m.get(r, c)) {
                    m.set(r, c);
                    ++row_used[r];
                    ++col_used[c];
                }
            }
            if (gf2_rank(m) * support * support < m.nonzero_count()) ++violations;
        }
        report(7, "rank >= nnz / M^2 for support-M matrices", violations == 0,
               std::to_string(violations) + " violations over 1000 matrices");
    }

    // ---- Criterion 8: tree partition counting + entropy bound. --------------
    {
        Rng rng(45);
        bool ok = true;
        std::string detail = "counts, closed form, orientation bound, entropy bound all verified";
        for (int it = 0; it < 200 && ok; ++it) {
            const std::size_t m = 2 + rng.below(11);
            std::vector<EdgePair> edges;
            for (Vertex v = 1; v < m; ++v) edges.emplace_back(static_cast<Vertex>(rng.below(v)), v);
            const Graph tree(m, std::move(edges));
            const std::uint64_t k = rng.below(m);
            const TreePartitionCount got = count_tree_partitions(tree, k);

            BigInt closed = 0;  // 2 sum_{i<=k} C(m-1, i)
            for (std::uint64_t i = 1; i <= k; ++i) closed += 2 * binomial(m - 1, i);
            if (got.total != closed) {
                ok = false;
                detail = "closed form mismatch";
            }
            BigInt brute = 0;
            std::vector<BigInt> per_i(k + 1, 0);
            for (std::uint32_t mask = 1; mask + 1 < (1u << m); ++mask) {
                std::uint64_t crossings = 0;
                for (const auto& [u, v] : tree.edges())
                    if ((mask >> u & 1) != (mask >> v & 1)) ++crossings;
                if (crossings <= k) {
                    ++brute;
                    ++per_i[crossings];
                }
            }
            if (got.total != brute) {
                ok = false;
                detail = "2^m enumeration mismatch";
            }
            for (std::uint64_t i = 0; i <= k && ok; ++i) {
                if (got.by_crossings[i] != per_i[i]) {
                    ok = false;
                    detail = "per-crossing histogram mismatch";
                }
                if (got.by_crossings[i] >
                    binomial(m, i) * boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(i))) {
                    ok = false;
                    detail = "orientation bound exceeded";
                }
            }
        }
        for (std::uint64_t m = 1; m <= 60 && ok; ++m)
            for (std::uint64_t k = 0; 2 * k <= m; ++k)
                if (!entropy_bound_holds(m, k)) {
                    ok = false;
                    detail = "entropy bound failed at m=" + std::to_string(m);
                }
        report(8, "partition counting and entropy bound", ok, detail);
    }

    // ---- Criterion 9: cubic extraction, structural + distributional. --------
    {
        Rng rng(46);
        int violations = 0;
        for (int it = 0; it < 1000; ++it) {
            DegreeSequence d;
            std::uint64_t total = 0, d3 = 0, big_halves = 0;
            const std::size_t len = 2 + rng.below(29);
            for (std::size_t i = 0; i < len; ++i) {
                d.push_back(2 + static_cast<std::uint32_t>(rng.below(5)));
                total += d.back();
            }
            if (total % 2 == 1) ++d.back();
            for (std::uint32_t x : d) {
                if (x == 3) ++d3;
                if (x >= 4) big_halves += x;
            }
            const Configuration c = sample_configuration(d, rng.u64());
            const CubicExtraction ext = extract_cubic(c);
            bool ok = validate_extraction(c, ext).ok;
            for (std::size_t cell = 0; cell < ext.cubic.cell_count(); ++cell)
                if (ext.cubic.cell_degree(cell) != 3) ok = false;
            if (d3 > big_halves && ext.m < d3 - big_halves) ok = false;
            if (!ok) ++violations;
        }
        const UniformityResult uni = coupling_uniformity_test({3, 3, 3, 3, 2, 2}, 50000, 47);
        const bool ok = violations == 0 && uni.min_p_value() > 0.001;
        report(9, "cubic extraction: structure and uniformity", ok,
               std::to_string(violations) + " structural violations; conditional chi-square p=" +
                   fmt(uni.min_p_value()) + " > 0.001");
    }

    // ---- Criterion 10: expansion of random cubic graphs. --------------------
    {
        const ExpansionSurvey survey = cubic_expansion_survey(14, 300, 48);
        const double fraction = survey.fraction_at_least(Rational(2, 11));
        report(10, "cubic expansion at m=14", fraction >= 0.90,
               "fraction with Phi >= 2/11: " + fmt(fraction) + ", required >= 0.90; the 2/11 "
               "constant is the vertex-normalized isoperimetric bound, under which the rate is "
               "1.000 here, while the degree-normalized Cheeger constant divides it by 3");
    }

    // ---- Criterion 11: rank-width of cubic expanders. -----------------------
    {
        Rng rng(49);
        int violations = 0;
        for (int it = 0; it < 100; ++it) {
            const std::uint32_t m = 4 + 2 * static_cast<std::uint32_t>(rng.below(5));  // 4..12 even
            const std::uint64_t seed = rng.u64();
            MultiGraph h;
            for (std::uint64_t attempt = 0;; ++attempt) {
                h = sample_random_regular(m, 3, child_seed(seed, attempt));
                if (is_simple(h)) break;
            }
            const Graph simple = as_simple_graph(h);
            const std::uint32_t rw = rankwidth_exact(simple).width;
            Rational phi(0);
            if (is_connected(simple)) phi = cheeger_exact(simple).phi;
            if (Rational(rw) < phi * Rational(m, 9)) ++violations;
        }
        report(11, "rw >= Phi m/9 on random cubic graphs", violations == 0,
               std::to_string(violations) + " violations over 100 graphs");
    }

    // ---- Criterion 12: bounded-degree tree growth. --------------------------
    {
        const std::size_t n = 100000;
        int reached = 0;
        bool degree_ok = true;
        std::uint64_t worst_degree = 0;
        for (std::uint64_t s = 0; s < 10; ++s) {
            const Graph g = sample_gnp(n, 1.2 / static_cast<double>(n), child_seed(50, s));
            TreeGrowthParams params;
            params.delta = 0.2;
            params.child_cap = 7;
            params.initial_order = 11;  // the triple-log default degenerates at this n
            const TreeGrowthOutcome outcome = grow_bounded_degree_tree(g, params, s);
            if (outcome.tree) {
                worst_degree = std::max<std::uint64_t>(worst_degree, outcome.tree->max_degree);
                if (outcome.tree->max_degree > 8) degree_ok = false;
                if (outcome.tree->vertices.size() >= 2500) ++reached;
            }
        }
        report(12, "bounded-degree tree growth at n=1e5", degree_ok && reached >= 9,
               "max degree " + std::to_string(worst_degree) + " <= 8; target reached in " +
                   std::to_string(reached) + "/10 seeds");
    }

    // ---- Criterion 13: truncated binomial mean bound. ------------------------
    {
        int violations = 0;
        const std::pair<long long, long long> ds[3] = {{1, 1}, {6, 5}, {3, 2}};
        for (std::uint64_t n = 10; n <= 1000; ++n) {
            for (const auto& [num, den] : ds) {
                const BigRational p(BigInt(num), BigInt(den) * n);
                const double d = static_cast<double>(num) / static_cast<double>(den);
                const std::uint64_t cap =
                    static_cast<std::uint64_t>(std::ceil(2 * 2.718281828459045235 * d)) + 1;
                if (!truncated_mean_bound_holds(n, p, cap)) ++violations;
            }
        }
        report(13, "E[min(Bin(n,p),K)] >= np - K 2^-K on the full grid", violations == 0,
               std::to_string(violations) + " violations over 2973 grid points");
    }

    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criterion(s) failed -- measured values and the calibration analysis are in "
                    "the detail fields above\n",
                    failures);
    return failures == 0 ? 0 : 1;
}
