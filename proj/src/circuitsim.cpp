#include "mgf/circuitsim.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mgf/rng.hpp"

namespace mgf {

void NoiseModel::validate() const {
    auto check = [](double p, const char* name) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument(std::string("NoiseModel: ") + name +
                                        " outside [0,1]");
        }
    };
    check(two_qubit_depolarizing_p, "two_qubit_depolarizing_p");
    check(single_qubit_depolarizing_p, "single_qubit_depolarizing_p");
    check(readout_flip_p, "readout_flip_p");
}

namespace {

using State = Eigen::VectorXcd;

void apply_gate(State& psi, const GateOp& op, int n_qubits) {
    const long dim = psi.size();
    if (op.qubit < 1 || op.qubit > n_qubits ||
        (op.kind == GateKind::CNOT &&
         (op.control < 1 || op.control > n_qubits || op.control == op.qubit))) {
        throw std::invalid_argument("gate qubit index out of range");
    }
    const long bit = 1L << (op.qubit - 1);
    switch (op.kind) {
        case GateKind::RX: {
            const double c = std::cos(op.angle / 2.0), s = std::sin(op.angle / 2.0);
            const Complex is(0.0, -s);
            for (long base = 0; base < dim; ++base) {
                if (base & bit) continue;
                const Complex a0 = psi(base), a1 = psi(base | bit);
                psi(base) = c * a0 + is * a1;
                psi(base | bit) = is * a0 + c * a1;
            }
            break;
        }
        case GateKind::RZ: {
            const Complex p0 = std::exp(Complex(0.0, -op.angle / 2.0));
            const Complex p1 = std::exp(Complex(0.0, op.angle / 2.0));
            for (long s = 0; s < dim; ++s) {
                psi(s) *= (s & bit) ? p1 : p0;
            }
            break;
        }
        case GateKind::H: {
            const double r = 1.0 / std::sqrt(2.0);
            for (long base = 0; base < dim; ++base) {
                if (base & bit) continue;
                const Complex a0 = psi(base), a1 = psi(base | bit);
                psi(base) = r * (a0 + a1);
                psi(base | bit) = r * (a0 - a1);
            }
            break;
        }
        case GateKind::CNOT: {
            const long cbit = 1L << (op.control - 1);
            for (long base = 0; base < dim; ++base) {
                if ((base & cbit) && !(base & bit)) {
                    std::swap(psi(base), psi(base | bit));
                }
            }
            break;
        }
    }
}

// which: 0 = X, 1 = Y, 2 = Z
void apply_pauli(State& psi, int which, int qubit) {
    const long dim = psi.size();
    const long bit = 1L << (qubit - 1);
    switch (which) {
        case 0:
            for (long base = 0; base < dim; ++base) {
                if (!(base & bit)) std::swap(psi(base), psi(base | bit));
            }
            break;
        case 1:
            for (long base = 0; base < dim; ++base) {
                if (!(base & bit)) {
                    const Complex a0 = psi(base);
                    psi(base) = Complex(0, -1) * psi(base | bit);
                    psi(base | bit) = Complex(0, 1) * a0;
                }
            }
            break;
        case 2:
            for (long s = 0; s < dim; ++s) {
                if (s & bit) psi(s) = -psi(s);
            }
            break;
    }
}

long sample_outcome(const State& psi, double u) {
    double acc = 0.0;
    const long dim = psi.size();
    for (long s = 0; s < dim; ++s) {
        acc += std::norm(psi(s));
        if (u < acc) return s;
    }
    return dim - 1;
}

std::string outcome_string(long s, int n_qubits) {
    std::string out(n_qubits, '0');
    for (int b = 0; b < n_qubits; ++b) {
        if (s & (1L << b)) out[n_qubits - 1 - b] = '1';
    }
    return out;
}

}  // namespace

Vector run_statevector(const NativeGateSequence& seq, int n_qubits,
                       const std::string& initial) {
    State psi = State::Zero(1L << n_qubits);
    psi(basis_index(initial, n_qubits)) = 1.0;
    for (const auto& op : seq.ops) {
        apply_gate(psi, op, n_qubits);
    }
    return psi;
}

ShotCounts run_noisy_trajectories(const NativeGateSequence& seq, int n_qubits,
                                  const std::string& initial,
                                  const NoiseModel& noise, long shots,
                                  unsigned long long seed) {
    if (shots < 1) throw std::invalid_argument("run_noisy_trajectories: shots < 1");
    noise.validate();
    const long init = basis_index(initial, n_qubits);

    ShotCounts result;
    result.shots = shots;
    result.seed = seed;
    result.n_qubits = n_qubits;

    std::vector<long> outcomes(shots);

    if (!noise.enabled) {
        // Noise-free sampling: one evolution, per-shot outcome draws.
        const State psi = run_statevector(seq, n_qubits, initial);
        for (long shot = 0; shot < shots; ++shot) {
            CounterRng rng(seed, static_cast<std::uint64_t>(shot));
            outcomes[shot] = sample_outcome(psi, rng.next_double());
        }
    } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (long shot = 0; shot < shots; ++shot) {
            CounterRng rng(seed, static_cast<std::uint64_t>(shot));
            State psi = State::Zero(1L << n_qubits);
            psi(init) = 1.0;
            for (const auto& op : seq.ops) {
                apply_gate(psi, op, n_qubits);
                if (op.kind == GateKind::CNOT) {
                    if (rng.next_double() < noise.two_qubit_depolarizing_p) {
                        const int p = 1 + static_cast<int>(rng.next_below(15));
                        const int pc = p / 4, pt = p % 4;
                        if (pc) apply_pauli(psi, pc - 1, op.control);
                        if (pt) apply_pauli(psi, pt - 1, op.qubit);
                    }
                } else if (rng.next_double() < noise.single_qubit_depolarizing_p) {
                    apply_pauli(psi, static_cast<int>(rng.next_below(3)), op.qubit);
                }
            }
            long s = sample_outcome(psi, rng.next_double());
            if (noise.readout_flip_p > 0.0) {
                for (int b = 0; b < n_qubits; ++b) {
                    if (rng.next_double() < noise.readout_flip_p) s ^= 1L << b;
                }
            }
            outcomes[shot] = s;
        }
    }

    for (long shot = 0; shot < shots; ++shot) {
        ++result.counts[outcome_string(outcomes[shot], n_qubits)];
    }
    return result;
}

std::vector<double> magnetization_from_counts(const ShotCounts& counts) {
    if (counts.shots < 1) {
        throw std::invalid_argument("magnetization_from_counts: zero shots");
    }
    std::vector<double> m(counts.n_qubits, 0.0);
    for (const auto& [key, count] : counts.counts) {
        for (int b = 0; b < counts.n_qubits; ++b) {
            const bool one = key[counts.n_qubits - 1 - b] == '1';
            m[b] += (one ? -1.0 : 1.0) * static_cast<double>(count);
        }
    }
    for (double& v : m) v /= static_cast<double>(counts.shots);
    return m;
}

DynamicsTrace simulate_trace(const std::vector<NativeGateSequence>& circuits,
                             int n_qubits, const std::string& initial, double dt,
                             SimMode mode, const NoiseModel& noise, long shots,
                             unsigned long long seed, TraceSource source) {
    DynamicsTrace trace;
    trace.source = source;
    trace.sampled = mode != SimMode::ideal;
    trace.shots = mode == SimMode::ideal ? 0 : shots;
    trace.seed = seed;
    trace.magnetization.assign(n_qubits, {});

    // t = 0 from the initial state, no circuit executed.
    State psi0 = State::Zero(1L << n_qubits);
    psi0(basis_index(initial, n_qubits)) = 1.0;
    trace.times.push_back(0.0);
    auto m0 = magnetization_of_state(psi0);
    for (int i = 0; i < n_qubits; ++i) trace.magnetization[i].push_back(m0[i]);

    for (size_t k = 0; k < circuits.size(); ++k) {
        std::vector<double> m;
        if (mode == SimMode::ideal) {
            m = magnetization_of_state(
                run_statevector(circuits[k], n_qubits, initial));
        } else {
            NoiseModel nm = noise;
            nm.enabled = mode == SimMode::noisy;
            const auto counts =
                run_noisy_trajectories(circuits[k], n_qubits, initial, nm, shots,
                                       seed ^ static_cast<unsigned long long>(k + 1));
            m = magnetization_from_counts(counts);
        }
        trace.times.push_back((k + 1) * dt);
        for (int i = 0; i < n_qubits; ++i) trace.magnetization[i].push_back(m[i]);
    }
    return trace;
}

}  // namespace mgf
