#pragma once

#include <map>
#include <string>
#include <vector>

#include "mgf/exact.hpp"
#include "mgf/gates.hpp"
#include "mgf/model.hpp"

namespace mgf {

struct NoiseModel {
    double two_qubit_depolarizing_p = 0.01;   // CNOT fidelity 0.99
    double single_qubit_depolarizing_p = 0.001;
    double readout_flip_p = 0.0261;           // readout fidelity 0.9739
    bool enabled = false;

    void validate() const;
};

struct ShotCounts {
    std::map<std::string, long> counts;  // rightmost character = qubit 1
    long shots = 0;
    unsigned long long seed = 0;
    int n_qubits = 0;
};

enum class SimMode { ideal, sampled, noisy };

// Applies the gate sequence to |initial>. Throws on out-of-range qubits.
Vector run_statevector(const NativeGateSequence& seq, int n_qubits,
                       const std::string& initial);

// Monte-Carlo quantum trajectories: after each gate a uniformly random
// non-identity Pauli is applied on the gate's qubit(s) with the corresponding
// depolarizing probability, the final Z measurement is sampled, and each
// recorded bit is flipped with readout_flip_p. One RNG stream per shot.
ShotCounts run_noisy_trajectories(const NativeGateSequence& seq, int n_qubits,
                                  const std::string& initial,
                                  const NoiseModel& noise, long shots,
                                  unsigned long long seed);

std::vector<double> magnetization_from_counts(const ShotCounts& counts);

// One magnetization column per circuit, plus the t=0 column measured directly
// from the initial state.
DynamicsTrace simulate_trace(const std::vector<NativeGateSequence>& circuits,
                             int n_qubits, const std::string& initial, double dt,
                             SimMode mode, const NoiseModel& noise, long shots,
                             unsigned long long seed, TraceSource source);

}  // namespace mgf
