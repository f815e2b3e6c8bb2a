#include "mgf/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mgf {

CouplingProfile ExperimentConfig::profile() const {
    return preset_profile(preset);
}

OptimizerConfig ExperimentConfig::optimizer() const {
    OptimizerConfig opt;
    opt.tolerance = tolerance;
    opt.restarts = restarts;
    opt.seed = seed;
    opt.family = family;
    opt.use_literal_distance = literal_distance;
    return opt;
}

int ExperimentConfig::effective_columns() const {
    return columns > 0 ? columns : profile().n_sites + 1;
}

void ExperimentConfig::validate() const {
    profile();  // throws on unknown preset
    if (dt <= 0.0) throw std::invalid_argument("config: dt must be positive");
    if (n_steps < 1) throw std::invalid_argument("config: n_steps < 1");
    if (shots < 1) throw std::invalid_argument("config: shots < 1");
    if (columns < 0) throw std::invalid_argument("config: columns < 0");
    if (tolerance <= 0.0) throw std::invalid_argument("config: tolerance <= 0");
    if (restarts < 1) throw std::invalid_argument("config: restarts < 1");
    noise.validate();
}

namespace {

void reject_unknown(const nlohmann::json& obj,
                    const std::set<std::string>& known,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!known.count(it.key())) {
            throw std::invalid_argument("config: unknown key \"" + where +
                                        it.key() + "\"");
        }
    }
}

GateFamily family_from_string(const std::string& s) {
    if (s == "four_param") return GateFamily::four_param;
    if (s == "six_param") return GateFamily::six_param;
    throw std::invalid_argument("config: unknown family \"" + s + "\"");
}

}  // namespace

ExperimentConfig config_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("config: invalid JSON: ") +
                                    e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config: not an object");
    reject_unknown(j,
                   {"preset", "dt", "n_steps", "shots", "columns", "tolerance",
                    "restarts", "seed", "family", "literal_distance", "noise"},
                   "");

    ExperimentConfig cfg;
    cfg.preset = j.value("preset", cfg.preset);
    cfg.dt = j.value("dt", cfg.dt);
    cfg.n_steps = j.value("n_steps", cfg.n_steps);
    cfg.shots = j.value("shots", cfg.shots);
    cfg.columns = j.value("columns", cfg.columns);
    cfg.tolerance = j.value("tolerance", cfg.tolerance);
    cfg.restarts = j.value("restarts", cfg.restarts);
    cfg.seed = j.value("seed", cfg.seed);
    if (j.contains("family")) {
        cfg.family = family_from_string(j.at("family").get<std::string>());
    }
    cfg.literal_distance = j.value("literal_distance", cfg.literal_distance);
    if (j.contains("noise")) {
        const auto& n = j.at("noise");
        if (!n.is_object()) {
            throw std::invalid_argument("config: noise must be an object");
        }
        reject_unknown(n,
                       {"enabled", "two_qubit_depolarizing_p",
                        "single_qubit_depolarizing_p", "readout_flip_p"},
                       "noise.");
        cfg.noise.enabled = n.value("enabled", cfg.noise.enabled);
        cfg.noise.two_qubit_depolarizing_p =
            n.value("two_qubit_depolarizing_p",
                    cfg.noise.two_qubit_depolarizing_p);
        cfg.noise.single_qubit_depolarizing_p =
            n.value("single_qubit_depolarizing_p",
                    cfg.noise.single_qubit_depolarizing_p);
        cfg.noise.readout_flip_p =
            n.value("readout_flip_p", cfg.noise.readout_flip_p);
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("config: cannot open \"" + path + "\"");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return config_from_json(buf.str());
}

namespace {

nlohmann::json config_json(const ExperimentConfig& cfg) {
    return {{"preset", cfg.preset},
            {"dt", cfg.dt},
            {"n_steps", cfg.n_steps},
            {"shots", cfg.shots},
            {"columns", cfg.columns},
            {"tolerance", cfg.tolerance},
            {"restarts", cfg.restarts},
            {"seed", cfg.seed},
            {"family", to_string(cfg.family)},
            {"literal_distance", cfg.literal_distance},
            {"noise",
             {{"enabled", cfg.noise.enabled},
              {"two_qubit_depolarizing_p", cfg.noise.two_qubit_depolarizing_p},
              {"single_qubit_depolarizing_p",
               cfg.noise.single_qubit_depolarizing_p},
              {"readout_flip_p", cfg.noise.readout_flip_p}}}};
}

}  // namespace

std::string config_to_json(const ExperimentConfig& cfg) {
    return config_json(cfg).dump(2) + "\n";
}

std::string manifest_json(const ExperimentConfig& cfg,
                          const std::string& command) {
    nlohmann::json m;
    m["version"] = kVersion;
    m["command"] = command;
    m["config"] = config_json(cfg);
    return m.dump(2) + "\n";
}

}  // namespace mgf
