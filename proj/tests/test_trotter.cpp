#include <doctest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include "mgf/circuitsim.hpp"
#include "mgf/exact.hpp"
#include "mgf/kernels.hpp"
#include "mgf/trotter.hpp"
#include "test_helpers.hpp"

using namespace mgf;

namespace {

Matrix sequence_matrix(const NativeGateSequence& seq, int n_qubits) {
    const long dim = 1L << n_qubits;
    Matrix u(dim, dim);
    for (long j = 0; j < dim; ++j) {
        u.col(j) =
            run_statevector(seq, n_qubits, oracle::basis_label(j, n_qubits));
    }
    return u;
}

}  // namespace

TEST_SUITE("trotter") {

TEST_CASE("one step realizes the split propagator exactly") {
    const auto p = preset_profile("mirror5");
    const double dt = 0.13;
    const auto seq = trotter_step(p, dt);
    const Matrix split = trotter_step_matrix(p, dt);
    CHECK(phase_distance(sequence_matrix(seq, 5), split) < 1e-12);

    // the split factors are the exponentials of the two Hamiltonian parts
    const Matrix h_zz = build_hamiltonian(p, false);
    CouplingProfile field_only = p;
    for (auto& j : field_only.couplings) j = 0.0;
    const Matrix h_x = build_hamiltonian(field_only, true);
    const Matrix expected = (Complex(0, -dt) * h_x).exp() *
                            (Complex(0, -dt) * h_zz).exp();
    CHECK((split - expected).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("field-free step needs no single-qubit rotations") {
    auto p = preset_profile("staggered5");
    p.field = 0.0;
    const auto seq = trotter_step(p, 0.1);
    for (const auto& op : seq.ops) CHECK(op.kind != GateKind::RX);
}

TEST_CASE("evolution repeats the template") {
    const auto p = preset_profile("staggered5");
    const auto circuit = trotter_evolution(p, 0.1, 4);
    CHECK(circuit.n_steps == 4);
    CHECK(circuit.full.ops.size() == 4 * circuit.step_template.ops.size());
    const Matrix step = trotter_step_matrix(p, 0.1);
    CHECK(phase_distance(sequence_matrix(circuit.full, 5),
                         Matrix(step * step * step * step)) < 1e-11);
}

TEST_CASE("first-order error halves with the step (Richardson)") {
    const auto p = preset_profile("mirror5");
    const double total = 1.0;
    const Matrix exact =
        (Complex(0, -total) * build_hamiltonian(p, true)).exp();

    auto global_error = [&](double dt) {
        const int n = static_cast<int>(std::lround(total / dt));
        const Matrix step = trotter_step_matrix(p, dt);
        Matrix u = Matrix::Identity(32, 32);
        for (int k = 0; k < n; ++k) u = step * u;
        return (u - exact).norm();
    };

    const double ratio = global_error(0.1) / global_error(0.05);
    MESSAGE("trotter error ratio dt/dt2: ", ratio);
    CHECK(ratio > 1.7);
    CHECK(ratio < 2.3);
}

}
