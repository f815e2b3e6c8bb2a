#pragma once

#include "mgf/gates.hpp"
#include "mgf/model.hpp"

namespace mgf {

// First-order split circuit baseline; depth grows linearly with step count.
struct TrotterCircuit {
    int n_steps = 0;
    double dt = 0.0;
    NativeGateSequence step_template;
    NativeGateSequence full;  // n_steps repetitions of the template
};

// One first-order step exp(i sum J_i Z Z dt) * exp(i h sum X dt) realized as
// per-bond CNOT RZ CNOT plus per-site RX.
NativeGateSequence trotter_step(const CouplingProfile& profile, double dt);

TrotterCircuit trotter_evolution(const CouplingProfile& profile, double dt,
                                 int n_steps);

// Dense matrix of the split-operator step (for error analysis).
Matrix trotter_step_matrix(const CouplingProfile& profile, double dt);

}  // namespace mgf
