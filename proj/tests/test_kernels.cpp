#include <doctest.h>

#include <random>

#include "mgf/kernels.hpp"
#include "test_helpers.hpp"

using namespace mgf;

TEST_SUITE("kernels") {

TEST_CASE("two-qubit application agrees with explicit embedding") {
    std::mt19937_64 rng(7);
    for (int n = 2; n <= 5; ++n) {
        for (int q = 1; q <= n - 1; ++q) {
            const Eigen::Matrix4cd gate = oracle::random_unitary(4, rng);
            const Matrix m = oracle::random_unitary(1 << n, rng);
            const Matrix embedded = embed_two_qubit(gate, q, n);

            Matrix left = m;
            apply_two_qubit(left, gate, q, n);
            CHECK((left - embedded * m).cwiseAbs().maxCoeff() < 1e-12);

            Matrix right = m;
            apply_two_qubit_right(right, gate, q, n);
            CHECK((right - m * embedded).cwiseAbs().maxCoeff() < 1e-12);

            Vector v = m.col(0);
            apply_two_qubit(v, gate, q, n);
            CHECK((v - embedded * m.col(0)).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("embedding places the gate on the right bits") {
    // CNOT-like permutation on (q, q+1): |.. b_{q+1} b_q ..> indexing
    Eigen::Matrix4cd cx = Eigen::Matrix4cd::Zero();
    cx(0, 0) = cx(2, 2) = cx(3, 1) = cx(1, 3) = 1.0;  // control = low bit
    const Matrix e = embed_two_qubit(cx, 1, 3);
    // |001> (q1=1, q2=0) -> |011>
    CHECK(std::abs(e(3, 1) - 1.0) < 1e-15);
    // |100> untouched by the pair (1,2) control 0
    CHECK(std::abs(e(4, 4) - 1.0) < 1e-15);
}

TEST_CASE("one-qubit application agrees with Kronecker oracle") {
    std::mt19937_64 rng(9);
    const int n = 4;
    for (int q = 1; q <= n; ++q) {
        const Eigen::Matrix2cd gate = oracle::random_unitary(2, rng);
        Matrix full = Matrix::Identity(1, 1);
        for (int site = 1; site <= n; ++site) {
            full = oracle::kron(
                site == q ? Matrix(gate) : Matrix(Matrix::Identity(2, 2)),
                full);
        }
        Vector v = oracle::random_unitary(1 << n, rng).col(0);
        Vector applied = v;
        apply_one_qubit(applied, gate, q, n);
        CHECK((applied - full * v).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("pair partial trace reproduces the full trace contraction") {
    std::mt19937_64 rng(11);
    const int n = 4;
    for (int q = 1; q <= n - 1; ++q) {
        const Matrix m = oracle::random_unitary(1 << n, rng);
        const Eigen::Matrix4cd gate = oracle::random_unitary(4, rng);
        const Eigen::Matrix4cd r = partial_trace_pair(m, q, n);
        const Complex direct =
            (embed_two_qubit(gate, q, n).adjoint() * m).trace();
        const Complex reduced = (gate.conjugate().cwiseProduct(r)).sum();
        CHECK(std::abs(direct - reduced) < 1e-10);
    }
}

TEST_CASE("distance functions") {
    std::mt19937_64 rng(13);
    const Matrix u = oracle::random_unitary(8, rng);
    const Matrix v = oracle::random_unitary(8, rng);

    CHECK(phase_distance(u, u) < 1e-15);
    CHECK(phase_distance(u, std::exp(Complex(0, 0.7)) * u) < 1e-12);
    CHECK(phase_distance(u, v) > 1e-3);
    CHECK(phase_distance(u, v) <= 1.0 + 1e-12);

    // literal variant is phase sensitive
    CHECK(literal_distance(u, u) < 1e-15);
    CHECK(literal_distance(u, std::exp(Complex(0, 0.7)) * u) > 1e-3);
}

}
