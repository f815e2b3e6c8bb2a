#pragma once

#include <string>
#include <vector>

namespace mgf {

enum class GateKind { RX, RZ, CNOT, H };

struct GateOp {
    GateKind kind;
    int qubit = 0;    // target for single-qubit gates and CNOT
    int control = -1; // CNOT only
    double angle = 0.0;

    static GateOp rx(int q, double theta) { return {GateKind::RX, q, -1, theta}; }
    static GateOp rz(int q, double theta) { return {GateKind::RZ, q, -1, theta}; }
    static GateOp cnot(int control, int target) {
        return {GateKind::CNOT, target, control, 0.0};
    }
    static GateOp h(int q) { return {GateKind::H, q, -1, 0.0}; }
};

struct NativeGateSequence {
    int n_qubits = 0;
    std::vector<GateOp> ops;

    int cnot_count() const;
    void append(const NativeGateSequence& other);
};

// OpenQASM 2.0 over the rx/rz/cx/h subset. Qubit i (1-based, little-endian)
// maps to register slot q[i-1].
std::string to_qasm(const NativeGateSequence& seq);
NativeGateSequence from_qasm(const std::string& text);

}  // namespace mgf
