#include "mgf/matchgate.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "mgf/kernels.hpp"
#include "mgf/optimize.hpp"

namespace mgf {

namespace {

constexpr double kPi = std::numbers::pi;

double fold_angle(double theta) {
    double t = std::remainder(theta, 2.0 * kPi);  // (-pi, pi] up to boundary
    if (t <= -kPi) t += 2.0 * kPi;
    return t;
}

// RX-style SU(2) block exp(-i a X).
Eigen::Matrix2cd xx_block(double a) {
    Eigen::Matrix2cd m;
    m << std::cos(a), Complex(0, -std::sin(a)),
         Complex(0, -std::sin(a)), std::cos(a);
    return m;
}

Eigen::Matrix2cd z_phases(double angle) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 0) = std::exp(Complex(0, -angle / 2.0));
    m(1, 1) = std::exp(Complex(0, angle / 2.0));
    return m;
}

}  // namespace

Eigen::Matrix4cd Matchgate::embed() const {
    Eigen::Matrix4cd g = Eigen::Matrix4cd::Zero();
    // even sector {|00>, |11>} = indices {0, 3}
    g(0, 0) = outer(0, 0);
    g(0, 3) = outer(0, 1);
    g(3, 0) = outer(1, 0);
    g(3, 3) = outer(1, 1);
    // odd sector {|01>, |10>} = indices {1, 2}
    g(1, 1) = inner(0, 0);
    g(1, 2) = inner(0, 1);
    g(2, 1) = inner(1, 0);
    g(2, 2) = inner(1, 1);
    return g;
}

MatchgateParams MatchgateParams::canonical() const {
    MatchgateParams p;
    for (int i = 0; i < 4; ++i) p.theta[i] = fold_angle(theta[i]);
    return p;
}

Matchgate make_matchgate(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    const auto i2 = Eigen::Matrix2cd::Identity();
    if ((a * a.adjoint() - i2).cwiseAbs().maxCoeff() > 1e-10 ||
        (b * b.adjoint() - i2).cwiseAbs().maxCoeff() > 1e-10) {
        throw std::invalid_argument("make_matchgate: block not unitary");
    }
    if (std::abs(a.determinant() - b.determinant()) > 1e-8) {
        throw std::domain_error("make_matchgate: det(A) != det(B)");
    }
    return Matchgate{a, b};
}

Matchgate matchgate_product(const Matchgate& g1, const Matchgate& g2) {
    return Matchgate{g2.outer * g1.outer, g2.inner * g1.inner};
}

Matchgate matchgate_from_params(const MatchgateParams& p) {
    const double t1 = p.theta[0], t2 = p.theta[1], t3 = p.theta[2],
                 t4 = p.theta[3];
    Matchgate g;
    g.outer = z_phases(t3 + t4) * xx_block(t1 - t2);
    g.inner = z_phases(t3 - t4) * xx_block(t1 + t2);
    return g;
}

NativeGateSequence decompose_native(const MatchgateParams& p, int q) {
    const double t1 = p.theta[0], t2 = p.theta[1], t3 = p.theta[2],
                 t4 = p.theta[3];
    const int lo = q, hi = q + 1;
    NativeGateSequence seq;
    seq.n_qubits = hi;
    // exp(-i(t1 XX + t2 YY)) via CX (RX(2 t1) (x) RZ(2 t2)) CX in the
    // RX(pi/2)-rotated frame, then the trailing RZ pair.
    seq.ops = {
        GateOp::rx(lo, -kPi / 2.0), GateOp::rx(hi, -kPi / 2.0),
        GateOp::cnot(lo, hi),
        GateOp::rx(lo, 2.0 * t1),   GateOp::rz(hi, 2.0 * t2),
        GateOp::cnot(lo, hi),
        GateOp::rx(lo, kPi / 2.0),  GateOp::rx(hi, kPi / 2.0),
        GateOp::rz(hi, t3),         GateOp::rz(lo, t4),
    };
    return seq;
}

MirrorIdentityResult verify_mirror_identity(const MatchgateParams& g1,
                                            const MatchgateParams& g2,
                                            const MatchgateParams& g3,
                                            double tol, int restarts,
                                            unsigned long long seed) {
    const int n = 3;
    Matrix lhs = Matrix::Identity(8, 8);
    // (G1 (x) I)(I (x) G2)(G3 (x) I): G3 acts first.
    apply_two_qubit(lhs, matchgate_from_params(g3).embed(), 2, n);
    apply_two_qubit(lhs, matchgate_from_params(g2).embed(), 1, n);
    apply_two_qubit(lhs, matchgate_from_params(g1).embed(), 2, n);

    // det-1 matchgate with z-x-z Euler angles per sector; x(0..3) reuse the
    // 4-angle family meaning, x(4), x(5) are the extra trailing RZ pair.
    auto six_gate = [](const double* t) {
        Matchgate g;
        g.outer = z_phases(t[2] + t[3]) * xx_block(t[0] - t[1]) *
                  z_phases(t[4] + t[5]);
        g.inner = z_phases(t[2] - t[3]) * xx_block(t[0] + t[1]) *
                  z_phases(t[4] - t[5]);
        return g;
    };
    auto rhs = [&](const Eigen::VectorXd& x) {
        Matrix u = Matrix::Identity(8, 8);
        apply_two_qubit(u, six_gate(x.data() + 12).embed(), 1, n);
        apply_two_qubit(u, six_gate(x.data() + 6).embed(), 2, n);
        apply_two_qubit(u, six_gate(x.data()).embed(), 1, n);
        return u;
    };
    auto objective = [&](const Eigen::VectorXd& x) {
        return phase_distance(rhs(x), lhs);
    };

    MinimizeOptions opts;
    opts.target = tol;
    opts.max_iterations = 500;

    MirrorIdentityResult result;
    result.residual = 1.0;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int r = 0; r <= restarts; ++r) {
        Eigen::VectorXd x0(18);
        if (r == 0) {
            // Seed from the inputs: G5 <- G1*G3 fusion guess, G4/G6 near id.
            x0.setZero();
            for (int i = 0; i < 4; ++i) {
                x0(6 + i) = g1.theta[i] + g3.theta[i];
            }
        } else {
            for (int i = 0; i < 18; ++i) x0(i) = angle(rng);
        }
        auto res = minimize_bfgs(objective, nullptr, x0, opts);
        if (!res.reached_target) {
            auto nm = minimize_nelder_mead(objective, res.x, opts);
            if (nm.f < res.f) res = nm;
        }
        if (res.f < result.residual) {
            result.residual = res.f;
            result.right = {six_gate(res.x.data()), six_gate(res.x.data() + 6),
                            six_gate(res.x.data() + 12)};
        }
        if (result.residual <= tol) break;
    }
    result.converged = result.residual <= tol;
    return result;
}

}  // namespace mgf
