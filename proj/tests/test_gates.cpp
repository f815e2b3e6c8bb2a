#include <doctest.h>

#include "mgf/gates.hpp"

using namespace mgf;

TEST_SUITE("gates") {

TEST_CASE("cnot counting and append") {
    NativeGateSequence seq;
    seq.n_qubits = 3;
    seq.ops = {GateOp::rx(1, 0.5), GateOp::cnot(1, 2), GateOp::h(3),
               GateOp::cnot(2, 3)};
    CHECK(seq.cnot_count() == 2);

    NativeGateSequence other;
    other.n_qubits = 3;
    other.ops = {GateOp::rz(2, -1.0)};
    seq.append(other);
    CHECK(seq.ops.size() == 5);
    CHECK(seq.cnot_count() == 2);
}

TEST_CASE("qasm emission and parsing agree") {
    NativeGateSequence seq;
    seq.n_qubits = 4;
    seq.ops = {GateOp::h(1), GateOp::rx(2, 0.123456789012345),
               GateOp::cnot(2, 3), GateOp::rz(4, -2.5), GateOp::cnot(4, 1)};
    const std::string qasm = to_qasm(seq);
    CHECK(qasm.find("OPENQASM 2.0") != std::string::npos);
    CHECK(qasm.find("qreg q[4]") != std::string::npos);
    CHECK(qasm.find("cx q[1],q[2]") != std::string::npos);

    const auto parsed = from_qasm(qasm);
    REQUIRE(parsed.n_qubits == 4);
    REQUIRE(parsed.ops.size() == seq.ops.size());
    for (std::size_t i = 0; i < seq.ops.size(); ++i) {
        CHECK(parsed.ops[i].kind == seq.ops[i].kind);
        CHECK(parsed.ops[i].qubit == seq.ops[i].qubit);
        CHECK(parsed.ops[i].control == seq.ops[i].control);
        CHECK(parsed.ops[i].angle == doctest::Approx(seq.ops[i].angle).epsilon(1e-15));
    }
}

TEST_CASE("parser skips non-gate lines") {
    const std::string text =
        "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\ncreg c[2];\n"
        "h q[0];\nbarrier q;\nmeasure q[0] -> c[0];\n";
    const auto parsed = from_qasm(text);
    CHECK(parsed.n_qubits == 2);
    REQUIRE(parsed.ops.size() == 1);
    CHECK(parsed.ops[0].kind == GateKind::H);
    CHECK(parsed.ops[0].qubit == 1);
}

}
