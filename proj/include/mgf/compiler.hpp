#pragma once

#include <Eigen/Dense>
#include <optional>
#include <utility>
#include <vector>

#include "mgf/exact.hpp"
#include "mgf/gates.hpp"
#include "mgf/kernels.hpp"
#include "mgf/matchgate.hpp"
#include "mgf/model.hpp"

namespace mgf {

enum class GateFamily { four_param, six_param };

std::string to_string(GateFamily f);
int family_width(GateFamily f);

// Brickwork arrangement of two-qubit slots: even columns cover the odd bonds
// (1,2),(3,4),..., odd columns the even bonds (2,3),(4,5),...
struct CircuitLayout {
    int n_qubits = 0;
    int columns = 0;
    std::vector<std::pair<int, int>> slots;  // (column, lower qubit of pair)

    int slot_count() const { return static_cast<int>(slots.size()); }
};

CircuitLayout build_layout(int n_qubits, int columns);

struct OptimizerConfig {
    double tolerance = 1e-6;
    int restarts = 4;
    int max_iterations = 2000;
    unsigned long long seed = 0;
    GateFamily family = GateFamily::four_param;
    bool use_literal_distance = false;  // paper's phase-sensitive variant
    bool parallel = false;              // independent per-step optimization
    bool warm_start = true;             // only meaningful in sequential mode
    int workers = 0;                    // 0 = all available threads
};

struct CompiledTimestep {
    int step_index = 0;
    double elapsed_time = 0.0;
    Eigen::VectorXd params;  // family_width angles per slot, slot-major
    double residual = 0.0;
    int iterations = 0;
    GateFamily family = GateFamily::four_param;
    bool accepted = false;
    double wall_ms = 0.0;
};

// Gate of the configured family for one slot's angle block.
Eigen::Matrix4cd slot_gate(GateFamily family, const double* angles);
NativeGateSequence slot_decompose(GateFamily family, const double* angles, int q);

// Composes the slot gates in slot order (no frame layers).
Matrix circuit_matrix(const CircuitLayout& layout, const Eigen::VectorXd& params,
                      GateFamily family = GateFamily::four_param);
Matrix circuit_matrix(const CircuitLayout& layout,
                      const std::vector<MatchgateParams>& params);

// 1 - |tr(U^dag U_T)| / dim (see kernels.hpp for the literal variant).
double distance(const Matrix& u, const Matrix& u_target);

// Conjugation by the global Hadamard layer W = H^(x)N: W U W. The circuit is
// compiled in this frame; executors re-apply W as explicit h gates.
Matrix hadamard_frame(const Matrix& u);

// Objective state for one timestep: distance between the slot-gate circuit and
// a fixed target, with gradients evaluated through prefix/suffix products so a
// central difference touches only one 4x4 gate.
class TimestepObjective {
  public:
    TimestepObjective(const CircuitLayout& layout, Matrix target,
                      GateFamily family, bool literal)
        : layout_(layout),
          target_(std::move(target)),
          family_(family),
          literal_(literal),
          width_(family_width(family)),
          dim_(1L << layout.n_qubits) {}

    double value(const Eigen::VectorXd& x) const {
        Matrix u = Matrix::Identity(dim_, dim_);
        for (size_t s = 0; s < layout_.slots.size(); ++s) {
            apply_two_qubit(u, slot_gate(family_, x.data() + s * width_),
                            layout_.slots[s].second, layout_.n_qubits);
        }
        return from_trace(u.conjugate().cwiseProduct(target_).sum());
    }

    // Central differences with step eps, one slot at a time.
    Eigen::VectorXd gradient(const Eigen::VectorXd& x, double eps) const {
        const size_t n_slots = layout_.slots.size();
        // suffix[s] = (G_{S-1}...G_{s+1})^dag * target
        std::vector<Matrix> suffix(n_slots);
        Matrix t = target_;
        for (size_t s = n_slots; s-- > 0;) {
            suffix[s] = t;
            if (s > 0) {
                const Eigen::Matrix4cd g =
                    slot_gate(family_, x.data() + s * width_);
                apply_two_qubit(t, g.adjoint().eval(), layout_.slots[s].second,
                                layout_.n_qubits);
            }
        }
        Eigen::VectorXd grad(x.size());
        Matrix bdag = Matrix::Identity(dim_, dim_);
        Eigen::VectorXd xp(width_);
        for (size_t s = 0; s < n_slots; ++s) {
            const Matrix m = suffix[s] * bdag;
            const Eigen::Matrix4cd r =
                partial_trace_pair(m, layout_.slots[s].second, layout_.n_qubits);
            for (int i = 0; i < width_; ++i) {
                for (int j = 0; j < width_; ++j) xp(j) = x(s * width_ + j);
                xp(i) += eps;
                const double fp = from_trace(
                    slot_gate(family_, xp.data()).conjugate().cwiseProduct(r).sum());
                xp(i) -= 2.0 * eps;
                const double fm = from_trace(
                    slot_gate(family_, xp.data()).conjugate().cwiseProduct(r).sum());
                grad(s * width_ + i) = (fp - fm) / (2.0 * eps);
            }
            const Eigen::Matrix4cd g = slot_gate(family_, x.data() + s * width_);
            apply_two_qubit_right(bdag, g.adjoint().eval(),
                                  layout_.slots[s].second, layout_.n_qubits);
        }
        return grad;
    }

  private:
    double from_trace(Complex tr) const {
        const double d = static_cast<double>(dim_);
        return literal_ ? 1.0 - tr.real() / d : 1.0 - std::abs(tr) / d;
    }

    const CircuitLayout& layout_;
    Matrix target_;
    GateFamily family_;
    bool literal_;
    int width_;
    long dim_;
};


CompiledTimestep optimize_timestep(const CircuitLayout& layout,
                                   const Propagator& target,
                                   const std::optional<Eigen::VectorXd>& warm_start,
                                   const OptimizerConfig& cfg);

std::vector<CompiledTimestep> compile_trajectory(const CouplingProfile& profile,
                                                 double dt, int n_steps,
                                                 const OptimizerConfig& cfg);

// As compile_trajectory with an explicit layout (e.g. columns = N).
std::vector<CompiledTimestep> compile_trajectory_with_layout(
    const CouplingProfile& profile, double dt, int n_steps,
    const CircuitLayout& layout, const OptimizerConfig& cfg);

// Per-slot native decompositions, concatenated; 2 CNOTs per slot, no frame.
NativeGateSequence emit_circuit(const CompiledTimestep& step,
                                const CircuitLayout& layout);

// emit_circuit wrapped in leading/trailing h layers on every qubit, so the
// composed unitary approximates the unrotated target.
NativeGateSequence emit_circuit_with_frame(const CompiledTimestep& step,
                                           const CircuitLayout& layout);

// CSV: step,elapsed_time,residual,iterations,family,wall_ms
std::string compile_report_csv(const std::vector<CompiledTimestep>& steps);

}  // namespace mgf
