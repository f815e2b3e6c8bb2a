#pragma once

#include <string>
#include <vector>

#include "mgf/model.hpp"

namespace mgf {

struct Propagator {
    Matrix matrix;  // exp(-i H t)
    double time = 0.0;
    std::string hamiltonian_id;
};

enum class TraceSource {
    exact,
    compiled_ideal,
    compiled_noisy,
    trotter_ideal,
    trotter_noisy,
};

std::string to_string(TraceSource s);

struct DynamicsTrace {
    std::vector<double> times;
    // magnetization[i][t] = <Z_{i+1}> at times[t]
    std::vector<std::vector<double>> magnetization;
    TraceSource source = TraceSource::exact;
    bool sampled = false;
    long shots = 0;
    unsigned long long seed = 0;

    int n_qubits() const { return static_cast<int>(magnetization.size()); }
    int n_times() const { return static_cast<int>(times.size()); }
};

// exp(-i H t) via eigendecomposition. Throws if H is not Hermitian.
Propagator propagator(const Matrix& hamiltonian, double t,
                      const std::string& id = "");

// Parses a bitstring label like "00000" (leftmost char = highest qubit,
// matching the flipped-ket convention) into a basis index.
long basis_index(const std::string& label, int n_qubits);

// |initial> evolved under the post-quench Hamiltonian; <Z_i> sampled on the
// grid t = k*dt for k = 0..n_steps.
DynamicsTrace evolve_quench(const CouplingProfile& profile, double dt,
                            int n_steps, const std::string& initial_state);

// Cumulative-time targets U(k*dt) for k = 1..n_steps, one per compiled circuit.
std::vector<Propagator> target_unitaries(const CouplingProfile& profile,
                                         double dt, int n_steps);

// Per-qubit <Z_i> of a statevector, qubit 1 = least-significant bit.
std::vector<double> magnetization_of_state(const Vector& state);

// CSV with header `time,qubit,magnetization`, one row per (t, i).
std::string trace_to_csv(const DynamicsTrace& trace);

}  // namespace mgf
