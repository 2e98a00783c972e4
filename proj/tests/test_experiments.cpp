#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <regex>

#include "test_helpers.hpp"
#include "widthlab/experiment_config_io.hpp"
#include "widthlab/experiments.hpp"

using namespace widthlab;
using namespace widthlab::testing;

namespace {

std::string strip_runtime_column(const std::string& csv) {
    // runtime_ms is wall-clock and the single non-reproducible column.
    std::string out;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        std::size_t eol = csv.find('\n', pos);
        if (eol == std::string::npos) eol = csv.size();
        const std::string line = csv.substr(pos, eol - pos);
        const std::size_t comma = line.rfind(',');
        out += line.substr(0, comma);
        out += '\n';
        pos = eol + 1;
    }
    return out;
}

}  // namespace

TEST_CASE("degree profile on named graphs", "[experiments]") {
    const DegreeProfile c5 = degree_profile(cycle_graph(5));
    CHECK(c5.count(2) == 5);
    REQUIRE(c5.branching_ratio.has_value());
    CHECK(*c5.branching_ratio == Rational(1, 2));

    const DegreeProfile k4 = degree_profile(complete_graph(4));
    CHECK(k4.count(3) == 4);
    CHECK(*k4.branching_ratio == Rational(1));

    const DegreeProfile empty = degree_profile(Graph(4, {}));
    CHECK(empty.count(0) == 4);
    CHECK(!empty.branching_ratio.has_value());

    const DegreeProfile mixed = degree_profile(star_graph(4));
    CHECK(mixed.count(1) == 4);
    CHECK(mixed.count(4) == 1);
    CHECK(mixed.weighted_tail(4) == 4);
}

TEST_CASE("high degree incidence", "[experiments]") {
    CHECK(high_degree_incidence(Graph(10, {}), 0.1) == 0);
    // Star: delta chosen so the top set is exactly the centre.
    CHECK(high_degree_incidence(star_graph(9), 0.15) == 9);
    CHECK_THROWS_AS(high_degree_incidence(star_graph(3), 0.5), std::invalid_argument);
}

TEST_CASE("high degree incidence dominates random equal-size sets", "[experiments]") {
    // The top-degree set is the greedy worst case; random sets of the same
    // size touch far fewer edges. (The asymptotic delta-n ceiling needs far
    // smaller delta than any desk-scale run; it is not asserted here.)
    const std::size_t n = 30000;
    const double delta = 0.05;
    const std::size_t top = static_cast<std::size_t>(std::ceil(delta / std::log(1.0 / delta) * n));
    Rng rng(901);
    for (std::uint64_t s = 0; s < 4; ++s) {
        const Graph g = sample_gnp(n, 1.2 / static_cast<double>(n), child_seed(900, s));
        const std::uint64_t greedy = high_degree_incidence(g, delta);
        for (int rep = 0; rep < 5; ++rep) {
            std::vector<bool> chosen(n, false);
            std::size_t placed = 0;
            while (placed < top) {
                const std::size_t v = rng.below(n);
                if (!chosen[v]) {
                    chosen[v] = true;
                    ++placed;
                }
            }
            std::uint64_t incident = 0;
            for (const auto& [u, v] : g.edges())
                if (chosen[u] || chosen[v]) ++incident;
            CHECK(incident <= greedy);
        }
    }
}

TEST_CASE("csv output is deterministic given the config", "[experiments]") {
    ExperimentConfig config;
    config.experiment = "sparse_scaling";
    config.n_grid = {3000, 6000};
    config.epsilon_grid = {0.3};
    config.trials = 4;
    config.master_seed = 17;
    const std::string a = to_csv(run_sparse_scaling(config));
    const std::string b = to_csv(run_sparse_scaling(config));
    CHECK(strip_runtime_column(a) == strip_runtime_column(b));
    CHECK(a.substr(0, a.find('\n')) == csv_header());
}

TEST_CASE("csv output is independent of the worker count", "[experiments]") {
    ExperimentConfig config;
    config.experiment = "sparse_scaling";
    config.n_grid = {2000};
    config.epsilon_grid = {0.4};
    config.trials = 6;
    config.master_seed = 23;
    setenv("WIDTHLAB_THREADS", "1", 1);
    const std::string serial = strip_runtime_column(to_csv(run_sparse_scaling(config)));
    setenv("WIDTHLAB_THREADS", "4", 1);
    const std::string parallel = strip_runtime_column(to_csv(run_sparse_scaling(config)));
    unsetenv("WIDTHLAB_THREADS");
    CHECK(serial == parallel);
}

TEST_CASE("sparse scaling records are internally consistent", "[experiments]") {
    ExperimentConfig config;
    config.experiment = "sparse_scaling";
    config.n_grid = {20000};
    config.epsilon_grid = {0.2};
    config.trials = 5;
    config.master_seed = 31;
    for (const TrialRecord& rec : run_sparse_scaling(config)) {
        CHECK(rec.l1_size <= rec.n);
        CHECK(rec.core_size <= rec.l1_size);
        CHECK(rec.kernel_v <= rec.core_size);
        CHECK(rec.cubic_m <= rec.d3);  // output cells come from untouched degree-3 cells
        CHECK(rec.d2 + rec.d3 <= rec.core_size);
        CHECK(rec.l1_excess >= -1);
    }
}

TEST_CASE("expansion survey at m=4 sees only the complete graph", "[experiments]") {
    const ExpansionSurvey survey = cubic_expansion_survey(4, 60, 5);
    REQUIRE(survey.histogram.size() == 1);
    CHECK(survey.histogram.begin()->first == Rational(2, 3));
    CHECK(survey.fraction_at_least(Rational(2, 11)) == 1.0);

    const ExpansionSurvey again = cubic_expansion_survey(4, 60, 5);
    CHECK(again.histogram == survey.histogram);  // fixed seed, fixed histogram
    CHECK(to_text(again) == to_text(survey));
}

TEST_CASE("coupling uniformity on (3,3,2)", "[experiments]") {
    const UniformityResult r = coupling_uniformity_test({3, 3, 2}, 50000, 12);
    REQUIRE(r.groups.size() == 1);
    CHECK(r.groups[0].m == 2);
    CHECK(r.groups[0].samples == 50000);
    CHECK(r.min_p_value() > 0.001);

    const UniformityResult again = coupling_uniformity_test({3, 3, 2}, 50000, 12);
    CHECK(again.min_p_value() == r.min_p_value());  // fixed seed, fixed p-values
}

TEST_CASE("coupling uniformity identity case", "[experiments]") {
    // All-cubic sequences pass through extraction untouched, so the
    // comparison is between two uniform samplers of the same object.
    for (std::uint64_t s = 0; s < 20; ++s) {
        const Configuration c = sample_configuration(DegreeSequence(6, 3), child_seed(44, s));
        const CubicExtraction ext = extract_cubic(c);
        CHECK(ext.cubic == c);
    }
    const UniformityResult r = coupling_uniformity_test(DegreeSequence(6, 3), 4000, 13);
    CHECK(r.min_p_value() > 0.001);
}

TEST_CASE("width bracket runs clean on small instances", "[experiments]") {
    ExperimentConfig config;
    config.experiment = "width_bracket";
    config.n_grid = {12, 16};
    config.epsilon_grid = {0.5};
    config.trials = 8;
    config.master_seed = 71;
    config.cubic_orders = {4, 6, 8};
    const WidthBracketResult result = width_bracket_small(config);
    CHECK(result.checks > 0);
    CHECK(result.violations.empty());
    CHECK(!result.records.empty());
}

TEST_CASE("experiment config parsing", "[experiments]") {
    const auto j = nlohmann::json::parse(R"({
        "experiment": "sparse_scaling",
        "n": [1000], "epsilon": [0.1], "trials": 3, "seed": 9,
        "output": "out.csv"
    })");
    const ExperimentConfig config = parse_experiment_config(j);
    CHECK(config.experiment == "sparse_scaling");
    CHECK(config.n_grid == std::vector<std::uint64_t>{1000});
    CHECK(config.trials == 3);
    CHECK(config.master_seed == 9);
    CHECK(config.output == "out.csv");

    CHECK_THROWS_AS(parse_experiment_config(nlohmann::json::parse(R"({"bogus": 1})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_experiment_config(nlohmann::json::parse(R"({"epsilon": [0.0]})")),
                    std::invalid_argument);
}
