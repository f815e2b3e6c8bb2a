#include "mgf/compiler.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mgf/kernels.hpp"
#include "mgf/optimize.hpp"

namespace mgf {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Matrix2cd hadamard2() {
    Eigen::Matrix2cd h;
    const double s = 1.0 / std::sqrt(2.0);
    h << s, s, s, -s;
    return h;
}

}  // namespace

std::string to_string(GateFamily f) {
    return f == GateFamily::four_param ? "four_param" : "six_param";
}

int family_width(GateFamily f) {
    return f == GateFamily::four_param ? 4 : 6;
}

CircuitLayout build_layout(int n_qubits, int columns) {
    if (n_qubits < 2) throw std::invalid_argument("build_layout: n_qubits < 2");
    if (columns < 1) throw std::invalid_argument("build_layout: columns < 1");
    CircuitLayout layout;
    layout.n_qubits = n_qubits;
    layout.columns = columns;
    for (int c = 0; c < columns; ++c) {
        const int first = (c % 2 == 0) ? 1 : 2;
        for (int q = first; q + 1 <= n_qubits; q += 2) {
            layout.slots.emplace_back(c, q);
        }
    }
    return layout;
}

Eigen::Matrix4cd slot_gate(GateFamily family, const double* a) {
    MatchgateParams p{{a[0], a[1], a[2], a[3]}};
    Eigen::Matrix4cd g = matchgate_from_params(p).embed();
    if (family == GateFamily::six_param) {
        // leading RZ(a[4]) (x) RZ(a[5]) layer (hi, lo)
        Eigen::Vector4cd d;
        const double se = (a[4] + a[5]) / 2.0, so = (a[4] - a[5]) / 2.0;
        d << std::exp(Complex(0, -se)), std::exp(Complex(0, -so)),
             std::exp(Complex(0, so)), std::exp(Complex(0, se));
        g = g * Eigen::Matrix4cd(d.asDiagonal());
    }
    return g;
}

NativeGateSequence slot_decompose(GateFamily family, const double* a, int q) {
    NativeGateSequence seq;
    seq.n_qubits = q + 1;
    if (family == GateFamily::six_param) {
        seq.ops.push_back(GateOp::rz(q + 1, a[4]));
        seq.ops.push_back(GateOp::rz(q, a[5]));
    }
    seq.append(decompose_native(MatchgateParams{{a[0], a[1], a[2], a[3]}}, q));
    return seq;
}

Matrix circuit_matrix(const CircuitLayout& layout, const Eigen::VectorXd& params,
                      GateFamily family) {
    const int width = family_width(family);
    if (params.size() != static_cast<long>(layout.slots.size()) * width) {
        throw std::invalid_argument("circuit_matrix: expected " +
                                    std::to_string(layout.slots.size() * width) +
                                    " params, got " + std::to_string(params.size()));
    }
    const long dim = 1L << layout.n_qubits;
    Matrix u = Matrix::Identity(dim, dim);
    for (size_t s = 0; s < layout.slots.size(); ++s) {
        apply_two_qubit(u, slot_gate(family, params.data() + s * width),
                        layout.slots[s].second, layout.n_qubits);
    }
    return u;
}

Matrix circuit_matrix(const CircuitLayout& layout,
                      const std::vector<MatchgateParams>& params) {
    Eigen::VectorXd flat(params.size() * 4);
    for (size_t s = 0; s < params.size(); ++s) {
        for (int i = 0; i < 4; ++i) flat(s * 4 + i) = params[s].theta[i];
    }
    return circuit_matrix(layout, flat, GateFamily::four_param);
}

double distance(const Matrix& u, const Matrix& u_target) {
    return phase_distance(u, u_target);
}

Matrix hadamard_frame(const Matrix& u) {
    const long dim = u.rows();
    int n = 0;
    while ((1L << n) < dim) ++n;
    Matrix w = Matrix::Identity(dim, dim);
    // W = H^(x)N assembled bit by bit
    const Eigen::Matrix2cd h = hadamard2();
    for (long col = 0; col < dim; ++col) {
        for (int b = 0; b < n; ++b) {
            const long bit = 1L << b;
            for (long base = 0; base < dim; ++base) {
                if (base & bit) continue;
                const Complex a0 = w(base, col), a1 = w(base | bit, col);
                w(base, col) = h(0, 0) * a0 + h(0, 1) * a1;
                w(base | bit, col) = h(1, 0) * a0 + h(1, 1) * a1;
            }
        }
    }
    return w * u * w;
}

CompiledTimestep optimize_timestep(const CircuitLayout& layout,
                                   const Propagator& target,
                                   const std::optional<Eigen::VectorXd>& warm_start,
                                   const OptimizerConfig& cfg) {
    if (target.matrix.rows() != (1L << layout.n_qubits)) {
        throw std::invalid_argument("optimize_timestep: target dimension mismatch");
    }
    const auto t_start = std::chrono::steady_clock::now();
    const int width = family_width(cfg.family);
    const long n_params = static_cast<long>(layout.slots.size()) * width;

    TimestepObjective obj(layout, hadamard_frame(target.matrix), cfg.family,
                          cfg.use_literal_distance);
    auto f = [&](const Eigen::VectorXd& x) { return obj.value(x); };
    auto g = [&](const Eigen::VectorXd& x, double) {
        return obj.gradient(x, 1e-7);
    };

    MinimizeOptions opts;
    opts.target = cfg.tolerance;
    opts.max_iterations = cfg.max_iterations;

    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> angle(-kPi, kPi);

    MinimizeResult best;
    best.f = 2.0;
    int total_iterations = 0;
    for (int r = 0; r <= cfg.restarts; ++r) {
        Eigen::VectorXd x0(n_params);
        if (r == 0 && warm_start && warm_start->size() == n_params) {
            x0 = *warm_start;
        } else if (r == 0) {
            x0.setZero();
        } else {
            for (long i = 0; i < n_params; ++i) x0(i) = angle(rng);
        }
        auto res = minimize_bfgs(f, g, x0, opts);
        total_iterations += res.iterations;
        if (!res.reached_target && res.f < 1e-2) {
            // polish a near-miss with the derivative-free fallback
            MinimizeOptions nm_opts = opts;
            nm_opts.max_iterations = 500;
            auto nm = minimize_nelder_mead(f, res.x, nm_opts);
            total_iterations += nm.iterations;
            if (nm.f < res.f) res = nm;
        }
        if (res.f < best.f) best = std::move(res);
        if (best.f <= cfg.tolerance) break;
    }

    CompiledTimestep step;
    step.elapsed_time = target.time;
    step.params = best.x;
    step.residual = best.f;
    step.iterations = total_iterations;
    step.family = cfg.family;
    step.accepted = best.f <= cfg.tolerance;
    step.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t_start)
                       .count();
    return step;
}

std::vector<CompiledTimestep> compile_trajectory(const CouplingProfile& profile,
                                                 double dt, int n_steps,
                                                 const OptimizerConfig& cfg) {
    const CircuitLayout layout =
        build_layout(profile.n_sites, profile.n_sites + 1);
    return compile_trajectory_with_layout(profile, dt, n_steps, layout, cfg);
}

std::vector<CompiledTimestep> compile_trajectory_with_layout(
    const CouplingProfile& profile, double dt, int n_steps,
    const CircuitLayout& layout, const OptimizerConfig& cfg) {
    const auto targets = target_unitaries(profile, dt, n_steps);
    std::vector<CompiledTimestep> steps(n_steps);

    if (cfg.parallel) {
#ifdef _OPENMP
        const int workers = cfg.workers > 0 ? cfg.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(workers)
#endif
        for (int k = 1; k <= n_steps; ++k) {
            OptimizerConfig step_cfg = cfg;
            step_cfg.seed = cfg.seed ^ static_cast<unsigned long long>(k);
            steps[k - 1] =
                optimize_timestep(layout, targets[k - 1], std::nullopt, step_cfg);
            steps[k - 1].step_index = k;
        }
    } else {
        std::optional<Eigen::VectorXd> warm;
        for (int k = 1; k <= n_steps; ++k) {
            OptimizerConfig step_cfg = cfg;
            step_cfg.seed = cfg.seed ^ static_cast<unsigned long long>(k);
            steps[k - 1] = optimize_timestep(
                layout, targets[k - 1], cfg.warm_start ? warm : std::nullopt,
                step_cfg);
            steps[k - 1].step_index = k;
            if (steps[k - 1].accepted) warm = steps[k - 1].params;
        }
    }
    return steps;
}

NativeGateSequence emit_circuit(const CompiledTimestep& step,
                                const CircuitLayout& layout) {
    const int width = family_width(step.family);
    NativeGateSequence seq;
    seq.n_qubits = layout.n_qubits;
    for (size_t s = 0; s < layout.slots.size(); ++s) {
        seq.append(slot_decompose(step.family, step.params.data() + s * width,
                                  layout.slots[s].second));
    }
    seq.n_qubits = layout.n_qubits;
    return seq;
}

NativeGateSequence emit_circuit_with_frame(const CompiledTimestep& step,
                                           const CircuitLayout& layout) {
    NativeGateSequence seq;
    seq.n_qubits = layout.n_qubits;
    for (int q = 1; q <= layout.n_qubits; ++q) seq.ops.push_back(GateOp::h(q));
    seq.append(emit_circuit(step, layout));
    for (int q = 1; q <= layout.n_qubits; ++q) seq.ops.push_back(GateOp::h(q));
    return seq;
}

std::string compile_report_csv(const std::vector<CompiledTimestep>& steps) {
    std::ostringstream out;
    out << "step,elapsed_time,residual,iterations,family,wall_ms\n";
    char buf[160];
    for (const auto& s : steps) {
        std::snprintf(buf, sizeof(buf), "%d,%.12g,%.12g,%d,%s,%.3f",
                      s.step_index, s.elapsed_time, s.residual, s.iterations,
                      to_string(s.family).c_str(), s.wall_ms);
        out << buf << "\n";
    }
    return out.str();
}

}  // namespace mgf
