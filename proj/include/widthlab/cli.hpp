#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "widthlab/cuts.hpp"
#include "widthlab/experiment_config_io.hpp"
#include "widthlab/experiments.hpp"
#include "widthlab/io.hpp"
#include "widthlab/random_graphs.hpp"
#include "widthlab/rankwidth.hpp"
#include "widthlab/structure.hpp"
#include "widthlab/tree_growth.hpp"
#include "widthlab/treewidth.hpp"

namespace widthlab::cli {

namespace detail {

inline void write_text(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << text;
}

/// Reads an edge list permitting loops and repeats.
inline MultiGraph input_multigraph(const std::string& path) { return load_multigraph(path); }

struct GnpOptions {
    std::uint64_t n = 0;
    double p = -1.0;
    double epsilon = -1.0;
    std::uint64_t seed = 0;

    double probability() const {
        if (p >= 0.0) return p;
        return (1.0 + epsilon) / static_cast<double>(n);
    }
};

}  // namespace detail

/// Command-line front door. Exit codes: 0 success, 1 domain/runtime error,
/// 2 usage error.
inline int run(int argc, const char* const* argv) {
    CLI::App app{"widthlab: random-graph structure and exact width toolkit"};
    app.require_subcommand(1);

    // --- gnp ---------------------------------------------------------------
    detail::GnpOptions gnp;
    std::string gnp_out;
    CLI::App* cmd_gnp = app.add_subcommand("gnp", "sample a binomial random graph");
    cmd_gnp->add_option("--n", gnp.n, "vertex count")->required();
    CLI::Option* opt_p = cmd_gnp->add_option("--p", gnp.p, "edge probability");
    CLI::Option* opt_eps = cmd_gnp->add_option("--epsilon", gnp.epsilon, "supercriticality, p = (1+epsilon)/n");
    opt_p->excludes(opt_eps);
    opt_eps->excludes(opt_p);
    cmd_gnp->add_option("--seed", gnp.seed, "random seed")->required();
    cmd_gnp->add_option("--out", gnp_out, "edge-list output path (stdout when omitted)");

    // --- core / kernel -----------------------------------------------------
    std::string core_in, core_out, core_map;
    CLI::App* cmd_core = app.add_subcommand("core", "2-core of a graph");
    cmd_core->add_option("--in", core_in, "edge-list input")->required();
    cmd_core->add_option("--out", core_out, "edge-list output path (stdout when omitted)");
    cmd_core->add_option("--map", core_map, "write the surviving-vertex map here");

    std::string kernel_in, kernel_out, kernel_map;
    CLI::App* cmd_kernel = app.add_subcommand("kernel", "kernel of a graph (2-core, cycles deleted, bare paths contracted)");
    cmd_kernel->add_option("--in", kernel_in, "edge-list input")->required();
    cmd_kernel->add_option("--out", kernel_out, "edge-list output path (stdout when omitted)");
    cmd_kernel->add_option("--map", kernel_map, "write the contraction audit map here");

    // --- extract -------------------------------------------------------------
    std::string extract_in, extract_out, extract_trace;
    std::uint64_t extract_seed = 0;
    CLI::App* cmd_extract = app.add_subcommand(
        "extract", "sample a configuration on the input's degree sequence and refine it to 3-regular");
    cmd_extract->add_option("--in", extract_in, "edge-list input (degrees must all be >= 2)")->required();
    cmd_extract->add_option("--seed", extract_seed, "random seed")->required();
    cmd_extract->add_option("--out", extract_out, "edge-list output path (stdout when omitted)");
    cmd_extract->add_option("--trace", extract_trace, "write the extraction trace here");

    // --- width / cheeger -----------------------------------------------------
    std::string width_in, width_out;
    bool width_exact = false;
    CLI::App* cmd_width = app.add_subcommand("width", "exact tree-width and rank-width");
    cmd_width->add_option("--in", width_in, "edge-list input")->required();
    cmd_width->add_flag("--exact", width_exact, "exact computation (default and only mode)");
    cmd_width->add_option("--out", width_out, "witness path prefix (<out>.tw.txt, <out>.rw.txt)");

    std::string cheeger_in, cheeger_out;
    CLI::App* cmd_cheeger = app.add_subcommand("cheeger", "exact Cheeger constant");
    cmd_cheeger->add_option("--in", cheeger_in, "edge-list input")->required();
    cmd_cheeger->add_option("--out", cheeger_out, "write the minimizing side here");

    // --- tree-grow -----------------------------------------------------------
    std::string grow_in, grow_out;
    std::uint64_t grow_n = 0, grow_seed = 0;
    double grow_eps = -1.0, grow_delta = 0.0;
    std::uint32_t grow_kcap = 0, grow_n1 = 0;
    CLI::App* cmd_grow = app.add_subcommand("tree-grow", "bounded-degree tree growth");
    CLI::Option* gi = cmd_grow->add_option("--in", grow_in, "edge-list input");
    CLI::Option* gn = cmd_grow->add_option("--n", grow_n, "sample G(n,(1+epsilon)/n) instead of reading a file");
    cmd_grow->add_option("--epsilon", grow_eps, "supercriticality of the sampled graph");
    cmd_grow->add_option("--delta", grow_delta, "growth parameter delta")->required();
    cmd_grow->add_option("--k-cap", grow_kcap, "children per frontier vertex (default 4 ln(1/delta))");
    cmd_grow->add_option("--initial-order", grow_n1, "order of the initial partial binary tree");
    cmd_grow->add_option("--seed", grow_seed, "seed for sampling the graph");
    cmd_grow->add_option("--out", grow_out, "write the parent array here");
    gi->excludes(gn);
    gn->excludes(gi);

    // --- experiment ----------------------------------------------------------
    std::string exp_config, exp_out;
    CLI::App* cmd_exp = app.add_subcommand("experiment", "run a configured experiment");
    cmd_exp->add_option("--config", exp_config, "JSON config path")->required();
    cmd_exp->add_option("--out", exp_out, "override the config's output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_gnp->parsed()) {
            if (gnp.p < 0.0 && gnp.epsilon < 0.0)
                throw std::invalid_argument("gnp: give exactly one of --p or --epsilon");
            const Graph g = sample_gnp(gnp.n, gnp.probability(), gnp.seed);
            if (gnp_out.empty()) {
                write_edge_list(std::cout, g);
            } else {
                save_edge_list(gnp_out, g);
                std::cout << "gnp: n=" << g.vertex_count() << " m=" << g.edge_count() << " -> "
                          << gnp_out << '\n';
            }
        } else if (cmd_core->parsed()) {
            const Graph g = load_graph(core_in);
            const CoreResult core = two_core(g);
            if (core_out.empty()) {
                write_edge_list(std::cout, core.core);
            } else {
                save_edge_list(core_out, core.core);
                std::cout << "core: v=" << core.core.vertex_count() << " e=" << core.core.edge_count()
                          << " -> " << core_out << '\n';
            }
            if (!core_map.empty()) {
                std::string text;
                for (std::size_t i = 0; i < core.old_of_new.size(); ++i)
                    text += std::to_string(i) + " " + std::to_string(core.old_of_new[i]) + "\n";
                detail::write_text(core_map, text);
            }
        } else if (cmd_kernel->parsed()) {
            const Graph g = load_graph(kernel_in);
            const KernelResult k = kernel(g);
            if (kernel_out.empty()) {
                write_edge_list(std::cout, k.kernel);
            } else {
                save_edge_list(kernel_out, k.kernel);
                std::cout << "kernel: v=" << k.kernel.vertex_count() << " e=" << k.kernel.edge_count()
                          << " -> " << kernel_out << '\n';
            }
            if (!kernel_map.empty()) detail::write_text(kernel_map, to_text(k.map));
        } else if (cmd_extract->parsed()) {
            const MultiGraph g = detail::input_multigraph(extract_in);
            DegreeSequence degrees(g.vertex_count());
            for (std::size_t v = 0; v < g.vertex_count(); ++v)
                degrees[v] = static_cast<std::uint32_t>(g.degree(static_cast<Vertex>(v)));
            const Configuration conf = sample_configuration(degrees, extract_seed);
            const CubicExtraction ext = extract_cubic(conf);
            const MultiGraph cubic = multigraph_of(ext.cubic);
            if (extract_out.empty()) {
                write_edge_list(std::cout, cubic);
            } else {
                save_edge_list(extract_out, cubic);
                std::cout << "extract: m=" << ext.m << " -> " << extract_out << '\n';
            }
            if (!extract_trace.empty()) detail::write_text(extract_trace, to_text(ext.trace));
        } else if (cmd_width->parsed()) {
            const Graph g = load_graph(width_in);
            const std::string prefix = width_out.empty() ? width_in : width_out;
            std::optional<TreewidthResult> tw;
            std::optional<RankwidthResult> rw;
            try {
                tw = treewidth_exact(g);
            } catch (const capacity_error&) {
            }
            try {
                rw = rankwidth_exact(g);
            } catch (const capacity_error&) {
            }
            if (!tw && !rw) throw capacity_error("width: graph exceeds both exact-width caps");
            std::cout << "tw=" << (tw ? std::to_string(tw->width) : "?") << " rw="
                      << (rw ? std::to_string(rw->width) : "?") << '\n';
            if (tw) detail::write_text(prefix + ".tw.txt", to_text(tw->decomposition));
            if (rw) detail::write_text(prefix + ".rw.txt", to_text(rw->decomposition));
        } else if (cmd_cheeger->parsed()) {
            const Graph g = load_graph(cheeger_in);
            const CheegerResult result = cheeger_exact(g);
            std::cout << "phi=" << result.phi.to_string() << " side=" << result.argmin.count() << '\n';
            if (!cheeger_out.empty()) {
                std::string text;
                result.argmin.for_each([&](Vertex v) { text += std::to_string(v) + "\n"; });
                detail::write_text(cheeger_out, text);
            }
        } else if (cmd_grow->parsed()) {
            Graph g;
            if (!grow_in.empty()) {
                g = load_graph(grow_in);
            } else {
                if (grow_n == 0 || grow_eps < 0.0)
                    throw std::invalid_argument("tree-grow: need --in or both --n and --epsilon");
                g = sample_gnp(grow_n, (1.0 + grow_eps) / static_cast<double>(grow_n), grow_seed);
            }
            TreeGrowthParams params;
            params.delta = grow_delta;
            params.child_cap = grow_kcap;
            params.initial_order = grow_n1;
            const TreeGrowthOutcome outcome = grow_bounded_degree_tree(g, params, grow_seed);
            if (!outcome.tree) {
                std::cerr << "tree-grow: every attempt failed (attempts=" << outcome.attempts_used
                          << ")\n";
                return 1;
            }
            std::cout << "tree: size=" << outcome.tree->vertices.size()
                      << " max_degree=" << outcome.tree->max_degree
                      << " attempts=" << outcome.attempts_used << '\n';
            if (!grow_out.empty()) detail::write_text(grow_out, tree_parent_text(*outcome.tree));
        } else if (cmd_exp->parsed()) {
            ExperimentConfig config = load_experiment_config(exp_config);
            if (!exp_out.empty()) config.output = exp_out;
            if (config.experiment == "sparse_scaling") {
                const std::vector<TrialRecord> records = run_sparse_scaling(config);
                if (!config.output.empty()) detail::write_text(config.output, to_csv(records));
                std::cout << "sparse_scaling: trials=" << records.size() << " -> " << config.output
                          << '\n';
            } else if (config.experiment == "width_bracket") {
                const WidthBracketResult result = width_bracket_small(config);
                if (!config.output.empty()) detail::write_text(config.output, to_csv(result.records));
                std::cout << "width_bracket: checks=" << result.checks
                          << " violations=" << result.violations.size() << '\n';
                for (const std::string& v : result.violations) std::cerr << "violation: " << v << '\n';
                if (!result.violations.empty()) return 1;
            } else if (config.experiment == "expansion_survey") {
                const ExpansionSurvey survey =
                    cubic_expansion_survey(config.survey_m, config.trials, config.master_seed);
                if (!config.output.empty()) detail::write_text(config.output, to_text(survey));
                std::cout << "expansion_survey: m=" << survey.m << " fraction(phi>="
                          << config.phi_threshold.to_string()
                          << ")=" << survey.fraction_at_least(config.phi_threshold) << '\n';
            } else if (config.experiment == "coupling_uniformity") {
                const UniformityResult result = coupling_uniformity_test(
                    config.uniformity_degrees, config.uniformity_samples, config.master_seed,
                    config.min_expected);
                if (!config.output.empty()) detail::write_text(config.output, to_text(result));
                std::cout << "coupling_uniformity: min_p=" << result.min_p_value() << '\n';
            } else {
                throw std::invalid_argument("experiment: unknown experiment '" + config.experiment + "'");
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace widthlab::cli
