#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <string>

#include "mgf/model.hpp"

// Independent constructions used as oracles; deliberately written with
// Kronecker products instead of the bit-twiddling kernels under test.
namespace oracle {

inline Eigen::Matrix2cd pauli(char which) {
    using C = std::complex<double>;
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    switch (which) {
        case 'I': m.setIdentity(); break;
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, C(0, -1), C(0, 1), 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
        case 'H': m << 1, 1, 1, -1; m /= std::sqrt(2.0); break;
    }
    return m;
}

inline mgf::Matrix kron(const mgf::Matrix& a, const mgf::Matrix& b) {
    mgf::Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i) {
        for (long j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

// factors[i] is the single-qubit factor on qubit i+1; qubit 1 is the
// least-significant bit, so it sits rightmost in the Kronecker chain.
inline mgf::Matrix pauli_string(const std::string& factors) {
    mgf::Matrix op = mgf::Matrix::Identity(1, 1);
    for (char f : factors) {
        op = kron(mgf::Matrix(pauli(f)), op);
    }
    return op;
}

inline mgf::Matrix random_unitary(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    mgf::Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            g(i, j) = mgf::Complex(normal(rng), normal(rng));
        }
    }
    Eigen::HouseholderQR<mgf::Matrix> qr(g);
    mgf::Matrix q = qr.householderQ();
    const mgf::Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {
        q.col(i) *= r(i, i) / std::abs(r(i, i));
    }
    return q;
}

inline mgf::CouplingProfile random_profile(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coupling(0.5, 4.0);
    mgf::CouplingProfile p;
    p.n_sites = n;
    for (int i = 0; i < n - 1; ++i) p.couplings.push_back(coupling(rng));
    p.field = coupling(rng);
    return p;
}

inline std::string basis_label(long index, int n_qubits) {
    std::string label(static_cast<std::size_t>(n_qubits), '0');
    for (int q = 0; q < n_qubits; ++q) {
        if (index >> q & 1) {
            label[static_cast<std::size_t>(n_qubits - 1 - q)] = '1';
        }
    }
    return label;
}

}  // namespace oracle
