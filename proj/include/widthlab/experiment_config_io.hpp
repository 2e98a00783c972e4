#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "widthlab/experiments.hpp"

namespace widthlab {

/// Experiment configs are JSON objects; unknown keys are rejected so typos
/// fail loudly. Example:
///   {"experiment": "sparse_scaling", "n": [2000000], "epsilon": [0.1],
///    "trials": 20, "seed": 7, "output": "runs.csv"}
inline ExperimentConfig parse_experiment_config(const nlohmann::json& j) {
    ExperimentConfig config;
    for (const auto& [key, value] : j.items()) {
        if (key == "experiment")
            config.experiment = value.get<std::string>();
        else if (key == "n")
            config.n_grid = value.get<std::vector<std::uint64_t>>();
        else if (key == "epsilon")
            config.epsilon_grid = value.get<std::vector<double>>();
        else if (key == "trials")
            config.trials = value.get<std::uint32_t>();
        else if (key == "seed")
            config.master_seed = value.get<std::uint64_t>();
        else if (key == "output")
            config.output = value.get<std::string>();
        else if (key == "survey_m")
            config.survey_m = value.get<std::uint32_t>();
        else if (key == "phi_threshold") {
            const auto pair = value.get<std::vector<long long>>();
            if (pair.size() != 2) throw std::invalid_argument("config: phi_threshold wants [num, den]");
            config.phi_threshold = Rational(pair[0], pair[1]);
        } else if (key == "uniformity_degrees")
            config.uniformity_degrees = value.get<DegreeSequence>();
        else if (key == "uniformity_samples")
            config.uniformity_samples = value.get<std::uint32_t>();
        else if (key == "min_expected")
            config.min_expected = value.get<double>();
        else if (key == "cubic_orders")
            config.cubic_orders = value.get<std::vector<std::uint32_t>>();
        else
            throw std::invalid_argument("config: unknown key '" + key + "'");
    }
    if (config.trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    for (double eps : config.epsilon_grid)
        if (!(eps > 0.0)) throw std::invalid_argument("config: epsilon must be positive");
    return config;
}

inline ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open config: " + path);
    nlohmann::json j;
    is >> j;
    return parse_experiment_config(j);
}

}  // namespace widthlab
