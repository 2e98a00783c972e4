#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "widthlab/configuration.hpp"
#include "widthlab/coupling.hpp"
#include "widthlab/cuts.hpp"
#include "widthlab/graph.hpp"
#include "widthlab/random_graphs.hpp"
#include "widthlab/rankwidth.hpp"
#include "widthlab/rational.hpp"
#include "widthlab/rng.hpp"
#include "widthlab/stats.hpp"
#include "widthlab/structure.hpp"
#include "widthlab/treewidth.hpp"

namespace widthlab {

struct DegreeProfile {
    std::vector<std::uint64_t> counts;      // counts[i] = number of vertices of degree i
    std::optional<Rational> branching_ratio;  // sum D_i i(i-1) / (2 sum D_i i); null without edges

    std::uint64_t count(std::size_t degree) const {
        return degree < counts.size() ? counts[degree] : 0;
    }
    std::uint64_t weighted_tail(std::size_t from_degree) const {  // sum_{i>=from} i * D_i
        std::uint64_t total = 0;
        for (std::size_t i = from_degree; i < counts.size(); ++i) total += i * counts[i];
        return total;
    }
};

template <class G>
DegreeProfile degree_profile(const G& g) {
    DegreeProfile out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const std::size_t d = g.degree(static_cast<Vertex>(v));
        if (d >= out.counts.size()) out.counts.resize(d + 1, 0);
        ++out.counts[d];
    }
    long long num = 0, den = 0;
    for (std::size_t i = 0; i < out.counts.size(); ++i) {
        num += static_cast<long long>(out.counts[i]) * static_cast<long long>(i) *
               static_cast<long long>(i > 0 ? i - 1 : 0);
        den += static_cast<long long>(out.counts[i]) * static_cast<long long>(i);
    }
    if (den > 0) out.branching_ratio = Rational(num, 2 * den);
    return out;
}

struct ExperimentConfig {
    std::string experiment = "sparse_scaling";
    std::vector<std::uint64_t> n_grid;
    std::vector<double> epsilon_grid;
    std::uint32_t trials = 1;
    std::uint64_t master_seed = 0;
    std::string output;

    // Per-experiment knobs.
    std::uint32_t survey_m = 14;                      // expansion survey: vertices per cubic sample
    Rational phi_threshold{2, 11};                    // expansion survey: pass mark
    DegreeSequence uniformity_degrees{3, 3, 3, 3, 2, 2};
    std::uint32_t uniformity_samples = 50000;
    double min_expected = 5.0;                        // chi-square pooling
    std::vector<std::uint32_t> cubic_orders{4, 6, 8, 10, 12};  // width bracket, part (a)
};

struct TrialRecord {
    std::string experiment;
    std::uint64_t n = 0;
    double epsilon = 0.0;
    std::uint32_t trial = 0;
    std::uint64_t seed = 0;
    std::uint64_t l1_size = 0;
    long long l1_excess = 0;
    std::uint64_t core_size = 0;
    std::uint64_t d2 = 0;
    std::uint64_t d3 = 0;
    std::uint64_t w4plus = 0;
    std::uint64_t kernel_v = 0;
    std::uint64_t kernel_e = 0;
    std::uint64_t cubic_m = 0;
    std::optional<std::uint32_t> tw;
    std::optional<std::uint32_t> rw;
    std::uint64_t runtime_ms = 0;
};

inline const char* csv_header() {
    return "experiment,n,epsilon,trial,seed,l1_size,l1_excess,core_size,d2,d3,w4plus,kernel_v,"
           "kernel_e,cubic_m,tw,rw,runtime_ms";
}

inline std::string csv_row(const TrialRecord& r) {
    char eps[40];
    std::snprintf(eps, sizeof eps, "%.17g", r.epsilon);
    std::ostringstream os;
    os << r.experiment << ',' << r.n << ',' << eps << ',' << r.trial << ',' << r.seed << ','
       << r.l1_size << ',' << r.l1_excess << ',' << r.core_size << ',' << r.d2 << ',' << r.d3 << ','
       << r.w4plus << ',' << r.kernel_v << ',' << r.kernel_e << ',' << r.cubic_m << ',';
    if (r.tw) os << *r.tw;
    os << ',';
    if (r.rw) os << *r.rw;
    os << ',' << r.runtime_ms;
    return os.str();
}

inline std::string to_csv(const std::vector<TrialRecord>& records) {
    std::string out = csv_header();
    out += '\n';
    for (const TrialRecord& r : records) {
        out += csv_row(r);
        out += '\n';
    }
    return out;
}

/// Worker count: WIDTHLAB_THREADS caps parallelism, 0 or unset means one
/// worker per hardware thread.
inline unsigned thread_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("WIDTHLAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return hw;
}

/// Index-parallel map; the tasks must not share mutable state. Results land
/// by index, so the outcome is independent of the schedule.
template <class F>
void parallel_for(std::size_t count, unsigned workers, F&& body) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const unsigned used = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    pool.reserve(used);
    for (unsigned t = 0; t < used; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                body(i);
            }
        });
    }
    for (std::thread& t : pool) t.join();
}

/// One supercritical trial: sample G(n, (1+eps)/n), take the largest
/// component, its excess, 2-core, degree profile, kernel, and the cubic
/// extraction of a configuration resampled from the core's degree sequence.
/// Exact widths are filled in only when the component is under the caps;
/// capacity misses leave the fields empty rather than failing the trial.
inline TrialRecord sparse_scaling_trial(const std::string& name, std::uint64_t n, double eps,
                                        std::uint32_t trial, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    TrialRecord rec;
    rec.experiment = name;
    rec.n = n;
    rec.epsilon = eps;
    rec.trial = trial;
    rec.seed = seed;

    const Graph g = sample_gnp(n, (1.0 + eps) / static_cast<double>(n), seed);
    const std::vector<Vertex> l1 = largest_component(g);
    rec.l1_size = l1.size();
    if (!l1.empty()) {
        InducedSubgraph giant = induced_subgraph(g, l1);
        rec.l1_excess = excess(giant.graph);

        CoreResult core = two_core(giant.graph);
        rec.core_size = core.core.vertex_count();
        const DegreeProfile profile = degree_profile(core.core);
        rec.d2 = profile.count(2);
        rec.d3 = profile.count(3);
        rec.w4plus = profile.weighted_tail(4);

        KernelResult kern = kernel(core.core);
        rec.kernel_v = kern.kernel.vertex_count();
        rec.kernel_e = kern.kernel.edge_count();

        if (rec.core_size > 0) {
            DegreeSequence degrees(rec.core_size);
            for (std::size_t v = 0; v < rec.core_size; ++v)
                degrees[v] = static_cast<std::uint32_t>(core.core.degree(static_cast<Vertex>(v)));
            const Configuration conf = sample_configuration(degrees, child_seed(seed, 1));
            rec.cubic_m = extract_cubic(conf).m;
        }

        try {
            if (giant.graph.vertex_count() <= kTreewidthCap) rec.tw = treewidth_exact(giant.graph).width;
            if (giant.graph.vertex_count() <= kRankwidthCap) rec.rw = rankwidth_exact(giant.graph).width;
        } catch (const capacity_error&) {
            // leave empty
        }
    }
    rec.runtime_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
            .count());
    return rec;
}

/// Trials in cell-major order, each seeded with child_seed(master, index);
/// the record list is a pure function of the config apart from runtime_ms.
inline std::vector<TrialRecord> run_sparse_scaling(const ExperimentConfig& config) {
    std::vector<std::tuple<std::uint64_t, double, std::uint32_t>> cells;
    for (std::uint64_t n : config.n_grid)
        for (double eps : config.epsilon_grid)
            for (std::uint32_t t = 0; t < config.trials; ++t) cells.emplace_back(n, eps, t);
    std::vector<TrialRecord> records(cells.size());
    parallel_for(cells.size(), thread_count(), [&](std::size_t i) {
        const auto& [n, eps, t] = cells[i];
        records[i] = sparse_scaling_trial(config.experiment, n, eps, t,
                                          child_seed(config.master_seed, i));
    });
    return records;
}

/// Number of edges incident to the ceil((delta / ln(1/delta)) n)
/// highest-degree vertices (ties broken toward lower index).
inline std::uint64_t high_degree_incidence(const Graph& g, double delta) {
    if (!(delta > 0.0) || !(delta < 1.0 / 2.718281828459045))
        throw std::invalid_argument("high_degree_incidence: need 0 < delta < 1/e");
    const std::size_t n = g.vertex_count();
    if (n == 0) return 0;
    const double share = delta / std::log(1.0 / delta);
    std::size_t top = static_cast<std::size_t>(std::ceil(share * static_cast<double>(n)));
    if (top > n) top = n;
    std::vector<Vertex> order(n);
    for (std::size_t v = 0; v < n; ++v) order[v] = static_cast<Vertex>(v);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<bool> chosen(n, false);
    for (std::size_t i = 0; i < top; ++i) chosen[order[i]] = true;
    std::uint64_t incident = 0;
    for (const auto& [u, v] : g.edges())
        if (chosen[u] || chosen[v]) ++incident;
    return incident;
}

struct ExpansionSurvey {
    std::uint32_t m = 0;
    std::uint32_t samples = 0;
    std::uint64_t rejected = 0;                       // non-simple draws
    std::map<Rational, std::uint32_t> histogram;      // exact Cheeger constant -> count
    std::uint32_t disconnected = 0;                   // recorded as Cheeger 0

    double fraction_at_least(const Rational& threshold) const {
        std::uint64_t good = 0;
        for (const auto& [phi, count] : histogram)
            if (phi >= threshold) good += count;
        return samples == 0 ? 0.0 : static_cast<double>(good) / samples;
    }
};

/// Exact edge expansion of simple random cubic multigraph samples:
/// rejection-sample simple outcomes of G*(m,3) and take the exact Cheeger
/// constant of each (zero for the occasional disconnected sample).
inline ExpansionSurvey cubic_expansion_survey(std::uint32_t m, std::uint32_t samples,
                                              std::uint64_t seed) {
    if (m % 2 != 0) throw std::invalid_argument("cubic_expansion_survey: m must be even");
    if (m > kCutEnumerationCap) throw capacity_error("cubic_expansion_survey: m exceeds the cut cap");
    ExpansionSurvey survey;
    survey.m = m;
    survey.samples = samples;
    for (std::uint32_t i = 0; i < samples; ++i) {
        const std::uint64_t sample_seed = child_seed(seed, i);
        MultiGraph h;
        for (std::uint64_t attempt = 0;; ++attempt) {
            h = sample_random_regular(m, 3, child_seed(sample_seed, attempt));
            if (is_simple(h)) break;
            ++survey.rejected;
        }
        const Graph simple = as_simple_graph(h);
        Rational phi(0);
        if (is_connected(simple)) {
            phi = cheeger_exact(simple).phi;
        } else {
            ++survey.disconnected;
        }
        ++survey.histogram[phi];
    }
    return survey;
}

inline std::string to_text(const ExpansionSurvey& s) {
    std::ostringstream os;
    os << "m " << s.m << " samples " << s.samples << " rejected " << s.rejected << " disconnected "
       << s.disconnected << '\n';
    for (const auto& [phi, count] : s.histogram) os << phi.to_string() << ' ' << count << '\n';
    return os.str();
}

struct UniformityGroup {
    std::uint32_t m = 0;
    std::uint64_t samples = 0;
    ChiSquare test;
    // Joint counts over (loop count, parallel-edge surplus): extracted vs
    // directly sampled.
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::pair<std::uint64_t, std::uint64_t>> cells;
};

struct UniformityResult {
    std::vector<UniformityGroup> groups;  // ascending m

    double min_p_value() const {
        double p = 1.0;
        for (const auto& g : groups) p = std::min(p, g.test.p_value);
        return p;
    }
};

namespace detail {

inline std::pair<std::uint32_t, std::uint32_t> loop_parallel_signature(const MultiGraph& g) {
    std::uint32_t loops = 0, surplus = 0;
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].first == edges[i].second) ++loops;
        else if (i > 0 && edges[i] == edges[i - 1]) ++surplus;
    }
    return {loops, surplus};
}

}  // namespace detail

/// Coupled-refinement uniformity check: extract a cubic configuration from N
/// uniform draws on the given degree sequence, group by the output order m,
/// and compare the joint (loop, parallel) distribution with direct uniform
/// draws of the 3-regular configuration on m cells via a two-sample
/// chi-square (pooled bins).
inline UniformityResult coupling_uniformity_test(const DegreeSequence& degrees, std::uint32_t n_samples,
                                                 std::uint64_t seed, double min_expected = 5.0) {
    std::map<std::uint32_t, std::map<std::pair<std::uint32_t, std::uint32_t>,
                                     std::pair<std::uint64_t, std::uint64_t>>>
        by_m;
    std::map<std::uint32_t, std::uint64_t> group_sizes;
    for (std::uint32_t i = 0; i < n_samples; ++i) {
        const Configuration conf = sample_configuration(degrees, child_seed(seed, 2 * i));
        const CubicExtraction ext = extract_cubic(conf);
        ++by_m[ext.m][detail::loop_parallel_signature(multigraph_of(ext.cubic))].first;
        ++group_sizes[ext.m];
    }
    const std::uint64_t direct_base = child_seed(seed, 1);
    for (const auto& [m, count] : group_sizes) {
        const std::uint64_t m_base = child_seed(direct_base, m);
        for (std::uint64_t j = 0; j < count; ++j) {
            const MultiGraph h = sample_random_regular(m, 3, child_seed(m_base, j));
            ++by_m[m][detail::loop_parallel_signature(h)].second;
        }
    }
    UniformityResult out;
    for (auto& [m, cells] : by_m) {
        UniformityGroup group;
        group.m = m;
        group.samples = group_sizes[m];
        group.cells = cells;
        if (m > 0) {
            std::vector<std::pair<std::uint64_t, std::uint64_t>> bins;
            bins.reserve(cells.size());
            for (const auto& [key, pair] : cells) bins.push_back(pair);
            group.test = two_sample_chi_square(bins, min_expected);
        }
        out.groups.push_back(std::move(group));
    }
    return out;
}

inline std::string to_text(const UniformityResult& r) {
    std::ostringstream os;
    os << "m samples chi2 dof p\n";
    for (const auto& g : r.groups)
        os << g.m << ' ' << g.samples << ' ' << g.test.statistic << ' ' << g.test.dof << ' '
           << g.test.p_value << '\n';
    return os.str();
}

struct WidthBracketResult {
    std::vector<TrialRecord> records;
    std::vector<std::string> violations;
    std::uint64_t checks = 0;
};

/// Small-instance width bracket: (a) random simple cubic graphs H must have
/// rw(H) >= Phi(H) * m / 9; (b) in sparse samples, every component satisfies
/// tw <= excess + 2 and rw <= tw + 1 (widths above their caps are recorded
/// as missing, not failures). The excess bound is the provable one: a
/// connected graph with excess -1 is a tree of tree-width one, and each
/// extra edge raises the tree-width by at most one.
inline WidthBracketResult width_bracket_small(const ExperimentConfig& config) {
    WidthBracketResult out;
    std::uint64_t index = 0;

    for (std::uint32_t m : config.cubic_orders) {
        for (std::uint32_t t = 0; t < config.trials; ++t) {
            const std::uint64_t seed = child_seed(config.master_seed, index++);
            MultiGraph h;
            for (std::uint64_t attempt = 0;; ++attempt) {
                h = sample_random_regular(m, 3, child_seed(seed, attempt));
                if (is_simple(h)) break;
            }
            const Graph simple = as_simple_graph(h);
            TrialRecord rec;
            rec.experiment = "width_bracket_cubic";
            rec.n = m;
            rec.trial = t;
            rec.seed = seed;
            rec.l1_size = largest_component(simple).size();
            rec.cubic_m = m;
            const RankwidthResult rw = rankwidth_exact(simple);
            rec.rw = rw.width;
            rec.tw = treewidth_exact(simple).width;
            ++out.checks;
            if (is_connected(simple)) {
                const Rational phi = cheeger_exact(simple).phi;
                // rw >= phi * m / 9, exactly
                if (Rational(rw.width) < phi * Rational(m, 9))
                    out.violations.push_back("cubic chain violated at m=" + std::to_string(m) +
                                             " trial=" + std::to_string(t));
            }
            out.records.push_back(std::move(rec));
        }
    }

    for (std::uint64_t n : config.n_grid) {
        for (double eps : config.epsilon_grid) {
            for (std::uint32_t t = 0; t < config.trials; ++t) {
                const std::uint64_t seed = child_seed(config.master_seed, index++);
                const Graph g = sample_gnp(n, (1.0 + eps) / static_cast<double>(n), seed);
                TrialRecord rec;
                rec.experiment = "width_bracket_sparse";
                rec.n = n;
                rec.epsilon = eps;
                rec.trial = t;
                rec.seed = seed;
                const std::vector<Vertex> giant = largest_component(g);
                rec.l1_size = giant.size();
                for (const VertexSet& comp : components(g)) {
                    InducedSubgraph sub = induced_subgraph(g, comp);
                    const bool is_giant = sub.old_of_new == giant;
                    const long long ex = excess(sub.graph);
                    std::optional<std::uint32_t> tw, rw;
                    if (sub.graph.vertex_count() <= kTreewidthCap)
                        tw = treewidth_exact(sub.graph).width;
                    if (sub.graph.vertex_count() <= kRankwidthCap)
                        rw = rankwidth_exact(sub.graph).width;
                    if (is_giant) {
                        rec.l1_excess = ex;
                        rec.tw = tw;
                        rec.rw = rw;
                    }
                    if (tw) {
                        ++out.checks;
                        if (static_cast<long long>(*tw) > ex + 2)
                            out.violations.push_back("excess bound violated: n=" + std::to_string(n));
                    }
                    if (tw && rw) {
                        ++out.checks;
                        if (*rw > *tw + 1)
                            out.violations.push_back("rw <= tw+1 violated: n=" + std::to_string(n));
                    }
                }
                out.records.push_back(std::move(rec));
            }
        }
    }
    return out;
}

}  // namespace widthlab
