#include "mgf/gates.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace mgf {

int NativeGateSequence::cnot_count() const {
    int c = 0;
    for (const auto& op : ops) {
        if (op.kind == GateKind::CNOT) ++c;
    }
    return c;
}

void NativeGateSequence::append(const NativeGateSequence& other) {
    if (n_qubits == 0) n_qubits = other.n_qubits;
    if (other.n_qubits > n_qubits) n_qubits = other.n_qubits;
    ops.insert(ops.end(), other.ops.begin(), other.ops.end());
}

std::string to_qasm(const NativeGateSequence& seq) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << seq.n_qubits << "];\n";
    out << "creg c[" << seq.n_qubits << "];\n";
    char buf[64];
    for (const auto& op : seq.ops) {
        switch (op.kind) {
            case GateKind::RX:
                std::snprintf(buf, sizeof(buf), "%.17g", op.angle);
                out << "rx(" << buf << ") q[" << (op.qubit - 1) << "];\n";
                break;
            case GateKind::RZ:
                std::snprintf(buf, sizeof(buf), "%.17g", op.angle);
                out << "rz(" << buf << ") q[" << (op.qubit - 1) << "];\n";
                break;
            case GateKind::CNOT:
                out << "cx q[" << (op.control - 1) << "],q[" << (op.qubit - 1)
                    << "];\n";
                break;
            case GateKind::H:
                out << "h q[" << (op.qubit - 1) << "];\n";
                break;
        }
    }
    for (int i = 0; i < seq.n_qubits; ++i) {
        out << "measure q[" << i << "] -> c[" << i << "];\n";
    }
    return out.str();
}

namespace {

// Parses "q[3]" -> 3.
int parse_qubit(const std::string& tok) {
    auto open = tok.find('[');
    auto close = tok.find(']');
    if (open == std::string::npos || close == std::string::npos || close < open) {
        throw std::invalid_argument("qasm: bad qubit reference '" + tok + "'");
    }
    return std::stoi(tok.substr(open + 1, close - open - 1));
}

}  // namespace

NativeGateSequence from_qasm(const std::string& text) {
    NativeGateSequence seq;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        // strip comments and whitespace
        auto cpos = line.find("//");
        if (cpos != std::string::npos) line.erase(cpos);
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        line = line.substr(b);
        if (line.rfind("OPENQASM", 0) == 0 || line.rfind("include", 0) == 0 ||
            line.rfind("creg", 0) == 0 || line.rfind("measure", 0) == 0 ||
            line.rfind("barrier", 0) == 0) {
            continue;
        }
        if (line.rfind("qreg", 0) == 0) {
            seq.n_qubits = parse_qubit(line);
            continue;
        }
        if (line.rfind("rx(", 0) == 0 || line.rfind("rz(", 0) == 0) {
            auto close = line.find(')');
            if (close == std::string::npos) {
                throw std::invalid_argument("qasm: unterminated angle: " + line);
            }
            double angle = std::stod(line.substr(3, close - 3));
            int q = parse_qubit(line.substr(close + 1)) + 1;
            seq.ops.push_back(line[1] == 'x' ? GateOp::rx(q, angle)
                                             : GateOp::rz(q, angle));
            continue;
        }
        if (line.rfind("cx", 0) == 0) {
            auto comma = line.find(',');
            if (comma == std::string::npos) {
                throw std::invalid_argument("qasm: bad cx: " + line);
            }
            int c = parse_qubit(line.substr(2, comma - 2)) + 1;
            int t = parse_qubit(line.substr(comma + 1)) + 1;
            seq.ops.push_back(GateOp::cnot(c, t));
            continue;
        }
        if (line.rfind("h ", 0) == 0) {
            seq.ops.push_back(GateOp::h(parse_qubit(line) + 1));
            continue;
        }
        throw std::invalid_argument("qasm: unsupported statement: " + line);
    }
    if (seq.n_qubits == 0) {
        throw std::invalid_argument("qasm: missing qreg declaration");
    }
    return seq;
}

}  // namespace mgf
