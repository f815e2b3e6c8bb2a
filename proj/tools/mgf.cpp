// Command line front end: compile fixed-depth circuits, run dynamics with
// several engines and fidelity settings, and inspect the free-fermion modes.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "mgf/analysis.hpp"
#include "mgf/circuitsim.hpp"
#include "mgf/compiler.hpp"
#include "mgf/config.hpp"
#include "mgf/exact.hpp"
#include "mgf/freefermion.hpp"
#include "mgf/trotter.hpp"

namespace {

namespace fs = std::filesystem;

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

int resolve_workers(int cli_workers) {
    if (cli_workers > 0) return cli_workers;
    if (const char* env = std::getenv("MGF_WORKERS")) {
        const int w = std::atoi(env);
        if (w > 0) return w;
    }
    return 0;
}

void apply_workers(int workers) {
#ifdef _OPENMP
    if (workers > 0) omp_set_num_threads(workers);
#else
    (void)workers;
#endif
}

std::string initial_state(int n_qubits) {
    return std::string(static_cast<std::size_t>(n_qubits), '0');
}

std::vector<mgf::NativeGateSequence> compiled_circuits(
    const std::vector<mgf::CompiledTimestep>& steps,
    const mgf::CircuitLayout& layout) {
    std::vector<mgf::NativeGateSequence> circuits;
    circuits.reserve(steps.size());
    for (const auto& s : steps) {
        circuits.push_back(mgf::emit_circuit_with_frame(s, layout));
    }
    return circuits;
}

void write_analysis_outputs(const fs::path& out_dir,
                            const mgf::DynamicsTrace& trace) {
    const auto spectrum = mgf::power_spectrum(trace);
    write_file(out_dir / "trace.csv", mgf::trace_to_csv(trace));
    write_file(out_dir / "spectrum.csv", mgf::spectrum_to_csv(spectrum));

    std::vector<std::vector<mgf::Peak>> peaks;
    std::vector<mgf::EquilibrationResult> equil;
    std::vector<mgf::DampingFit> damping;
    for (int q = 0; q < trace.n_qubits(); ++q) {
        peaks.push_back(mgf::detect_peaks(spectrum, q));
        equil.push_back(mgf::equilibration_time(
            trace.times, trace.magnetization[static_cast<std::size_t>(q)]));
        damping.push_back(mgf::fit_damping(
            trace.times, trace.magnetization[static_cast<std::size_t>(q)]));
    }
    write_file(out_dir / "peaks.json", mgf::peaks_to_json(peaks));
    write_file(out_dir / "equilibration.json",
               mgf::equilibration_to_json(equil));
    write_file(out_dir / "damping.json", mgf::damping_to_json(damping));
}

int run_compile(const mgf::ExperimentConfig& cfg, const fs::path& out_dir,
                int workers) {
    const auto profile = cfg.profile();
    auto opt = cfg.optimizer();
    opt.workers = workers;
    const auto layout =
        mgf::build_layout(profile.n_sites, cfg.effective_columns());
    const auto steps = mgf::compile_trajectory_with_layout(
        profile, cfg.dt, cfg.n_steps, layout, opt);

    write_file(out_dir / "compile_report.csv", mgf::compile_report_csv(steps));
    double worst = 0.0;
    int rejected = 0;
    for (const auto& s : steps) {
        char name[32];
        std::snprintf(name, sizeof(name), "step_%03d.qasm", s.step_index);
        write_file(out_dir / name,
                   mgf::to_qasm(mgf::emit_circuit_with_frame(s, layout)));
        worst = std::max(worst, s.residual);
        if (!s.accepted) ++rejected;
    }
    write_file(out_dir / "manifest.json", mgf::manifest_json(cfg, "compile"));
    std::printf("compiled %zu steps, worst residual %.3e, %d above tolerance\n",
                steps.size(), worst, rejected);
    return rejected == 0 ? 0 : 3;
}

int run_dynamics(const mgf::ExperimentConfig& cfg, const fs::path& out_dir,
                 const std::string& engine, const std::string& fidelity,
                 int workers) {
    const auto profile = cfg.profile();
    const std::string init = initial_state(profile.n_sites);

    mgf::SimMode mode;
    if (fidelity == "ideal") {
        mode = mgf::SimMode::ideal;
    } else if (fidelity == "sampled") {
        mode = mgf::SimMode::sampled;
    } else if (fidelity == "noisy") {
        mode = mgf::SimMode::noisy;
    } else {
        std::fprintf(stderr, "unknown fidelity \"%s\"\n", fidelity.c_str());
        return 2;
    }
    auto noise = cfg.noise;
    noise.enabled = mode == mgf::SimMode::noisy;

    mgf::DynamicsTrace trace;
    if (engine == "exact") {
        if (mode != mgf::SimMode::ideal) {
            std::fprintf(stderr,
                         "engine \"exact\" only supports --fidelity ideal\n");
            return 2;
        }
        trace = mgf::evolve_quench(profile, cfg.dt, cfg.n_steps, init);
    } else if (engine == "compiled") {
        auto opt = cfg.optimizer();
        opt.workers = workers;
        const auto layout =
            mgf::build_layout(profile.n_sites, cfg.effective_columns());
        const auto steps = mgf::compile_trajectory_with_layout(
            profile, cfg.dt, cfg.n_steps, layout, opt);
        trace = mgf::simulate_trace(
            compiled_circuits(steps, layout), profile.n_sites, init, cfg.dt,
            mode, noise, cfg.shots, cfg.seed,
            mode == mgf::SimMode::noisy ? mgf::TraceSource::compiled_noisy
                                        : mgf::TraceSource::compiled_ideal);
    } else if (engine == "trotter") {
        std::vector<mgf::NativeGateSequence> circuits;
        for (int k = 1; k <= cfg.n_steps; ++k) {
            circuits.push_back(
                mgf::trotter_evolution(profile, cfg.dt, k).full);
        }
        trace = mgf::simulate_trace(
            circuits, profile.n_sites, init, cfg.dt, mode, noise, cfg.shots,
            cfg.seed,
            mode == mgf::SimMode::noisy ? mgf::TraceSource::trotter_noisy
                                        : mgf::TraceSource::trotter_ideal);
    } else {
        std::fprintf(stderr, "unknown engine \"%s\"\n", engine.c_str());
        return 2;
    }

    write_analysis_outputs(out_dir, trace);
    write_file(out_dir / "manifest.json",
               mgf::manifest_json(cfg, "dynamics " + engine + " " + fidelity));
    std::printf("dynamics: %d qubits, %d samples, source %s\n",
                trace.n_qubits(), trace.n_times(),
                mgf::to_string(trace.source).c_str());
    return 0;
}

int run_bdg(const mgf::ExperimentConfig& cfg, const fs::path& out_dir,
            double field) {
    auto profile = cfg.profile();
    if (field >= 0.0) profile.field = field;
    const auto spectrum =
        mgf::bdg_spectrum(mgf::build_bdg(profile, profile.field));
    write_file(out_dir / "modes.csv", mgf::spectrum_to_csv(spectrum));

    const auto jw = mgf::jordan_wigner_check(profile, profile.field);
    nlohmann::json report = {
        {"pauli_algebra_dev", jw.pauli_algebra_dev},
        {"anticommutator_dev", jw.anticommutator_dev},
        {"spin_hamiltonian_dev", jw.spin_hamiltonian_dev},
        {"quadratic_hamiltonian_dev", jw.quadratic_hamiltonian_dev},
        {"ok", jw.ok}};
    write_file(out_dir / "jw_check.json", report.dump(2) + "\n");
    write_file(out_dir / "manifest.json", mgf::manifest_json(cfg, "bdg"));

    for (int c = 0; c < 2 * spectrum.n_sites; ++c) {
        std::printf("mode %d: E = %+.6f  %s  ipr %.3f\n", c,
                    spectrum.eigenvalues(c),
                    mgf::to_string(spectrum.labels[c]).c_str(),
                    spectrum.ipr[c]);
    }
    return jw.ok ? 0 : 3;
}

int run_crosscheck(const mgf::ExperimentConfig& cfg, const fs::path& out_dir,
                   int workers) {
    const auto profile = cfg.profile();
    const std::string init = initial_state(profile.n_sites);

    const auto exact = mgf::evolve_quench(profile, cfg.dt, cfg.n_steps, init);

    auto opt = cfg.optimizer();
    opt.workers = workers;
    const auto layout =
        mgf::build_layout(profile.n_sites, cfg.effective_columns());
    const auto steps = mgf::compile_trajectory_with_layout(
        profile, cfg.dt, cfg.n_steps, layout, opt);
    const auto compiled = mgf::simulate_trace(
        compiled_circuits(steps, layout), profile.n_sites, init, cfg.dt,
        mgf::SimMode::ideal, cfg.noise, cfg.shots, cfg.seed,
        mgf::TraceSource::compiled_ideal);

    double max_dev = 0.0;
    for (int q = 0; q < exact.n_qubits(); ++q) {
        for (int t = 0; t < exact.n_times(); ++t) {
            max_dev = std::max(
                max_dev, std::abs(exact.magnetization[static_cast<std::size_t>(
                                      q)][static_cast<std::size_t>(t)] -
                                  compiled.magnetization[static_cast<std::size_t>(
                                      q)][static_cast<std::size_t>(t)]));
        }
    }
    double worst_residual = 0.0;
    for (const auto& s : steps) worst_residual = std::max(worst_residual, s.residual);

    nlohmann::json report = {{"max_magnetization_deviation", max_dev},
                             {"worst_residual", worst_residual},
                             {"n_steps", cfg.n_steps}};
    write_file(out_dir / "crosscheck.json", report.dump(2) + "\n");
    write_file(out_dir / "manifest.json", mgf::manifest_json(cfg, "crosscheck"));
    std::printf("crosscheck: max |dm| = %.3e, worst residual %.3e\n", max_dev,
                worst_residual);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fixed-depth matchgate circuit laboratory"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    std::string engine = "exact";
    std::string fidelity = "ideal";
    int workers = 0;

    app.add_option("--config", config_path, "JSON experiment config");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--workers", workers,
                   "worker threads (overrides MGF_WORKERS)");

    auto* cmd_compile =
        app.add_subcommand("compile", "compile a circuit per time step");
    auto* cmd_dynamics =
        app.add_subcommand("dynamics", "magnetization dynamics + analysis");
    cmd_dynamics->add_option("--engine", engine, "exact|compiled|trotter");
    cmd_dynamics->add_option("--fidelity", fidelity, "ideal|sampled|noisy");
    double bdg_field = -1.0;
    auto* cmd_bdg =
        app.add_subcommand("bdg", "single-particle modes and fermion checks");
    cmd_bdg->add_option("--field", bdg_field,
                        "override the preset transverse field");
    auto* cmd_cross = app.add_subcommand(
        "crosscheck", "compiled-circuit dynamics against the exact trace");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        mgf::ExperimentConfig cfg;
        if (!config_path.empty()) cfg = mgf::load_config(config_path);
        cfg.validate();

        const int w = resolve_workers(workers);
        apply_workers(w);

        const fs::path out(out_dir);
        fs::create_directories(out);

        if (cmd_compile->parsed()) return run_compile(cfg, out, w);
        if (cmd_dynamics->parsed()) {
            return run_dynamics(cfg, out, engine, fidelity, w);
        }
        if (cmd_bdg->parsed()) return run_bdg(cfg, out, bdg_field);
        if (cmd_cross->parsed()) return run_crosscheck(cfg, out, w);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}
