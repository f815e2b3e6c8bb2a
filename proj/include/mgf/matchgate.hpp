#pragma once

#include <Eigen/Dense>
#include <array>

#include "mgf/gates.hpp"
#include "mgf/model.hpp"

namespace mgf {

// Two-qubit gate block-diagonal over the parity sectors: A acts on
// span{|00>,|11>}, B on span{|01>,|10>}, with det(A) = det(B).
struct Matchgate {
    Eigen::Matrix2cd outer;  // A
    Eigen::Matrix2cd inner;  // B

    // Embedded 4x4 matrix, indexed by (hi_bit * 2 + lo_bit).
    Eigen::Matrix4cd embed() const;
};

// Angles of the gate family (RZ(t3) (x) RZ(t4)) * exp(-i(t1 XX + t2 YY)).
// RZ(t3) acts on the higher qubit of the pair, RZ(t4) on the lower.
struct MatchgateParams {
    std::array<double, 4> theta = {0.0, 0.0, 0.0, 0.0};

    MatchgateParams canonical() const;  // angles folded into (-pi, pi]
};

// Validates unitarity (1e-10) and the determinant condition (1e-8); throws
// std::invalid_argument / std::domain_error otherwise.
Matchgate make_matchgate(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b);

// Composition with g2 applied after g1.
Matchgate matchgate_product(const Matchgate& g1, const Matchgate& g2);

Matchgate matchgate_from_params(const MatchgateParams& p);

// Exact 2-CNOT realization on qubits (q, q+1), equal to
// matchgate_from_params(p) up to global phase.
NativeGateSequence decompose_native(const MatchgateParams& p, int q = 1);

struct MirrorIdentityResult {
    std::array<Matchgate, 3> right;  // G4, G5, G6
    double residual = 0.0;
    bool converged = false;
};

// Numerically solves (G1 (x) I)(I (x) G2)(G3 (x) I) = (I (x) G4)(G5 (x) I)(I (x) G6)
// on 3 qubits up to global phase. The right-hand gates are searched over all
// determinant-1 matchgates (z-x-z Euler angles per parity sector): the
// 4-angle family alone is too small to absorb a mirrored triple.
MirrorIdentityResult verify_mirror_identity(const MatchgateParams& g1,
                                            const MatchgateParams& g2,
                                            const MatchgateParams& g3,
                                            double tol = 1e-8,
                                            int restarts = 8,
                                            unsigned long long seed = 1);

}  // namespace mgf
