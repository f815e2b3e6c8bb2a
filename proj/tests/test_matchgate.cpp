#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <numbers>
#include <random>

#include "mgf/kernels.hpp"
#include "mgf/matchgate.hpp"
#include "test_helpers.hpp"

using namespace mgf;

namespace {

Eigen::Matrix2cd rz_matrix(double theta) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 0) = std::exp(Complex(0, -theta / 2.0));
    m(1, 1) = std::exp(Complex(0, theta / 2.0));
    return m;
}

Eigen::Matrix2cd rx_matrix(double theta) {
    Eigen::Matrix2cd m;
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    m << c, Complex(0, -s), Complex(0, -s), c;
    return m;
}

// exp(-i H) for Hermitian H via eigendecomposition.
Eigen::Matrix4cd expm_herm(const Eigen::Matrix4cd& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h);
    Eigen::Vector4cd phases;
    for (int i = 0; i < 4; ++i) {
        phases(i) = std::exp(Complex(0, -es.eigenvalues()(i)));
    }
    return es.eigenvectors() * phases.asDiagonal() *
           es.eigenvectors().adjoint();
}

MatchgateParams random_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(-std::numbers::pi,
                                                 std::numbers::pi);
    MatchgateParams p;
    for (auto& t : p.theta) t = angle(rng);
    return p;
}

}  // namespace

TEST_SUITE("matchgate") {

TEST_CASE("parameterized gate matches the matrix-exponential oracle") {
    std::mt19937_64 rng(21);
    const Eigen::Matrix4cd xx =
        oracle::kron(Matrix(oracle::pauli('X')), Matrix(oracle::pauli('X')));
    const Eigen::Matrix4cd yy =
        oracle::kron(Matrix(oracle::pauli('Y')), Matrix(oracle::pauli('Y')));
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = random_params(rng);
        const Eigen::Matrix4cd expected =
            oracle::kron(Matrix(rz_matrix(p.theta[2])),
                         Matrix(rz_matrix(p.theta[3]))) *
            expm_herm(p.theta[0] * xx + p.theta[1] * yy);
        const Eigen::Matrix4cd actual = matchgate_from_params(p).embed();
        CHECK((actual - expected).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("embedding is block diagonal over parity sectors") {
    std::mt19937_64 rng(22);
    const auto g = matchgate_from_params(random_params(rng));
    const Eigen::Matrix4cd e = g.embed();
    CHECK(std::abs(e(0, 1)) == 0.0);
    CHECK(std::abs(e(0, 2)) == 0.0);
    CHECK(std::abs(e(1, 0)) == 0.0);
    CHECK(std::abs(e(1, 3)) == 0.0);
    CHECK(std::abs(e(2, 3)) == 0.0);
    CHECK(std::abs(e(3, 2)) == 0.0);
    CHECK(std::abs(g.outer.determinant() - g.inner.determinant()) < 1e-12);
}

TEST_CASE("validation catches broken blocks") {
    Eigen::Matrix2cd a = Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd b = Eigen::Matrix2cd::Identity();
    CHECK_NOTHROW((void)make_matchgate(a, b));
    b(1, 1) = -1.0;  // det mismatch, still unitary
    CHECK_THROWS_AS((void)make_matchgate(a, b), std::domain_error);
    b(1, 1) = 2.0;  // not unitary
    CHECK_THROWS_AS((void)make_matchgate(a, b), std::invalid_argument);
}

TEST_CASE("closure under composition: 1000 random pairs") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto g1 = matchgate_from_params(random_params(rng));
        const auto g2 = matchgate_from_params(random_params(rng));
        const auto prod = matchgate_product(g1, g2);
        // still a matchgate: unitary blocks with matching determinants
        CHECK_NOTHROW((void)make_matchgate(prod.outer, prod.inner));
        // and the embedding composes in the right order (g2 after g1)
        CHECK((prod.embed() - g2.embed() * g1.embed()).cwiseAbs().maxCoeff() <
              1e-12);
    }
}

TEST_CASE("angle folding keeps the gate up to a global phase") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 20; ++trial) {
        auto p = random_params(rng);
        auto shifted = p;
        shifted.theta[trial % 4] += 2.0 * std::numbers::pi * (1 + trial % 3);
        const auto folded = shifted.canonical();
        for (double t : folded.theta) {
            CHECK(t > -std::numbers::pi - 1e-12);
            CHECK(t <= std::numbers::pi + 1e-12);
        }
        CHECK(phase_distance(Matrix(matchgate_from_params(folded).embed()),
                             Matrix(matchgate_from_params(p).embed())) < 1e-12);
    }
}

TEST_CASE("native two-CNOT decomposition reproduces the gate") {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = random_params(rng);
        const auto seq = decompose_native(p, 1);
        CHECK(seq.cnot_count() == 2);

        Matrix u = Matrix::Identity(4, 4);
        for (const auto& op : seq.ops) {
            Eigen::Matrix4cd full = Eigen::Matrix4cd::Zero();
            switch (op.kind) {
                case GateKind::RX:
                case GateKind::RZ: {
                    const Eigen::Matrix2cd g = op.kind == GateKind::RX
                                                   ? rx_matrix(op.angle)
                                                   : rz_matrix(op.angle);
                    full = op.qubit == 1
                               ? oracle::kron(Matrix(Matrix::Identity(2, 2)),
                                              Matrix(g))
                               : oracle::kron(Matrix(g),
                                              Matrix(Matrix::Identity(2, 2)));
                    break;
                }
                case GateKind::CNOT:
                    // control = qubit 1 (low bit), target = qubit 2
                    REQUIRE(op.control == 1);
                    full(0, 0) = full(1, 3) = full(3, 1) = full(2, 2) = 1.0;
                    break;
                default: REQUIRE(false);
            }
            u = full * u;
        }
        CHECK(phase_distance(u, Matrix(matchgate_from_params(p).embed())) <
              1e-12);
    }
}

TEST_CASE("mirror identity holds for 100 random triples") {
    std::mt19937_64 rng(26);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto r = verify_mirror_identity(
            random_params(rng), random_params(rng), random_params(rng), 1e-8,
            16, 1000 + static_cast<unsigned long long>(trial));
        worst = std::max(worst, r.residual);
        CHECK(r.converged);
        for (const auto& g : r.right) {
            CHECK_NOTHROW((void)make_matchgate(g.outer, g.inner));
        }
    }
    MESSAGE("worst mirror-identity residual: ", worst);
    CHECK(worst <= 1e-8);
}

}
