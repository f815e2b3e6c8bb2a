#pragma once

#include <cstdint>
#include <string>

#include "mgf/circuitsim.hpp"
#include "mgf/compiler.hpp"
#include "mgf/model.hpp"

namespace mgf {

inline constexpr const char* kVersion = "0.1.0";

// Everything a run needs, loadable from a JSON file. Unknown keys are an
// error so that typos fail loudly instead of silently using defaults.
struct ExperimentConfig {
    std::string preset = "staggered5";
    double dt = 0.1;
    int n_steps = 100;
    long shots = 8192;
    int columns = 0;  // 0 -> n_sites + 1
    double tolerance = 1e-6;
    int restarts = 4;
    std::uint64_t seed = 12345;
    GateFamily family = GateFamily::four_param;
    bool literal_distance = false;
    NoiseModel noise;

    CouplingProfile profile() const;
    OptimizerConfig optimizer() const;
    int effective_columns() const;
    void validate() const;
};

ExperimentConfig config_from_json(const std::string& text);
ExperimentConfig load_config(const std::string& path);
std::string config_to_json(const ExperimentConfig& cfg);

// Run manifest: the config that produced a set of outputs plus tool version.
std::string manifest_json(const ExperimentConfig& cfg,
                          const std::string& command);

}  // namespace mgf
