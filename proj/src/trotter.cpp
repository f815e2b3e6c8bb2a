#include "mgf/trotter.hpp"

#include <stdexcept>

#include "mgf/exact.hpp"

namespace mgf {

NativeGateSequence trotter_step(const CouplingProfile& profile, double dt) {
    if (dt <= 0.0) throw std::invalid_argument("trotter_step: dt must be > 0");
    profile.validate();
    NativeGateSequence seq;
    seq.n_qubits = profile.n_sites;
    // exp(+i J_i dt Z Z) per bond = RZZ(-2 J_i dt) as CNOT RZ CNOT
    for (int b = 0; b < profile.n_sites - 1; ++b) {
        seq.ops.push_back(GateOp::cnot(b + 1, b + 2));
        seq.ops.push_back(GateOp::rz(b + 2, -2.0 * profile.couplings[b] * dt));
        seq.ops.push_back(GateOp::cnot(b + 1, b + 2));
    }
    // exp(+i h dt X) per site = RX(-2 h dt)
    if (profile.field != 0.0) {
        for (int q = 1; q <= profile.n_sites; ++q) {
            seq.ops.push_back(GateOp::rx(q, -2.0 * profile.field * dt));
        }
    }
    return seq;
}

TrotterCircuit trotter_evolution(const CouplingProfile& profile, double dt,
                                 int n_steps) {
    if (n_steps < 0) throw std::invalid_argument("trotter_evolution: n_steps < 0");
    TrotterCircuit circuit;
    circuit.n_steps = n_steps;
    circuit.dt = dt;
    circuit.step_template = trotter_step(profile, dt);
    circuit.full.n_qubits = profile.n_sites;
    for (int k = 0; k < n_steps; ++k) {
        circuit.full.append(circuit.step_template);
    }
    return circuit;
}

Matrix trotter_step_matrix(const CouplingProfile& profile, double dt) {
    // bond layer first, field layer second, matching the gate sequence
    const Matrix h_zz = build_hamiltonian(profile, false);
    Matrix h_x = build_hamiltonian(profile, true) - h_zz;
    return propagator(h_x, dt).matrix * propagator(h_zz, dt).matrix;
}

}  // namespace mgf
