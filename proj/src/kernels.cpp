#include "mgf/kernels.hpp"

#include <stdexcept>

namespace mgf {

namespace {

inline void check_pair(int q, int n_qubits) {
    if (q < 1 || q + 1 > n_qubits) {
        throw std::out_of_range("two-qubit gate on qubits (" + std::to_string(q) +
                                "," + std::to_string(q + 1) + ") of " +
                                std::to_string(n_qubits));
    }
}

}  // namespace

void apply_two_qubit(Vector& state, const Eigen::Matrix4cd& gate, int q,
                     int n_qubits) {
    check_pair(q, n_qubits);
    const long dim = 1L << n_qubits;
    const long lo = 1L << (q - 1);
    const long hi = lo << 1;
    for (long base = 0; base < dim; ++base) {
        if (base & (lo | hi)) continue;
        const long i0 = base, i1 = base | lo, i2 = base | hi, i3 = base | lo | hi;
        const Complex a0 = state(i0), a1 = state(i1), a2 = state(i2),
                      a3 = state(i3);
        state(i0) = gate(0, 0) * a0 + gate(0, 1) * a1 + gate(0, 2) * a2 + gate(0, 3) * a3;
        state(i1) = gate(1, 0) * a0 + gate(1, 1) * a1 + gate(1, 2) * a2 + gate(1, 3) * a3;
        state(i2) = gate(2, 0) * a0 + gate(2, 1) * a1 + gate(2, 2) * a2 + gate(2, 3) * a3;
        state(i3) = gate(3, 0) * a0 + gate(3, 1) * a1 + gate(3, 2) * a2 + gate(3, 3) * a3;
    }
}

void apply_two_qubit(Matrix& u, const Eigen::Matrix4cd& gate, int q,
                     int n_qubits) {
    check_pair(q, n_qubits);
    const long dim = 1L << n_qubits;
    const long lo = 1L << (q - 1);
    const long hi = lo << 1;
    for (long col = 0; col < dim; ++col) {
        for (long base = 0; base < dim; ++base) {
            if (base & (lo | hi)) continue;
            const long i0 = base, i1 = base | lo, i2 = base | hi,
                       i3 = base | lo | hi;
            const Complex a0 = u(i0, col), a1 = u(i1, col), a2 = u(i2, col),
                          a3 = u(i3, col);
            u(i0, col) = gate(0, 0) * a0 + gate(0, 1) * a1 + gate(0, 2) * a2 + gate(0, 3) * a3;
            u(i1, col) = gate(1, 0) * a0 + gate(1, 1) * a1 + gate(1, 2) * a2 + gate(1, 3) * a3;
            u(i2, col) = gate(2, 0) * a0 + gate(2, 1) * a1 + gate(2, 2) * a2 + gate(2, 3) * a3;
            u(i3, col) = gate(3, 0) * a0 + gate(3, 1) * a1 + gate(3, 2) * a2 + gate(3, 3) * a3;
        }
    }
}

void apply_one_qubit(Vector& state, const Eigen::Matrix2cd& gate, int q,
                     int n_qubits) {
    if (q < 1 || q > n_qubits) {
        throw std::out_of_range("one-qubit gate on qubit " + std::to_string(q) +
                                " of " + std::to_string(n_qubits));
    }
    const long dim = 1L << n_qubits;
    const long bit = 1L << (q - 1);
    for (long base = 0; base < dim; ++base) {
        if (base & bit) continue;
        const Complex a0 = state(base), a1 = state(base | bit);
        state(base) = gate(0, 0) * a0 + gate(0, 1) * a1;
        state(base | bit) = gate(1, 0) * a0 + gate(1, 1) * a1;
    }
}

void apply_two_qubit_right(Matrix& u, const Eigen::Matrix4cd& gate, int q,
                           int n_qubits) {
    check_pair(q, n_qubits);
    const long dim = 1L << n_qubits;
    const long lo = 1L << (q - 1);
    const long hi = lo << 1;
    for (long row = 0; row < dim; ++row) {
        for (long base = 0; base < dim; ++base) {
            if (base & (lo | hi)) continue;
            const long i0 = base, i1 = base | lo, i2 = base | hi,
                       i3 = base | lo | hi;
            const Complex a0 = u(row, i0), a1 = u(row, i1), a2 = u(row, i2),
                          a3 = u(row, i3);
            u(row, i0) = a0 * gate(0, 0) + a1 * gate(1, 0) + a2 * gate(2, 0) + a3 * gate(3, 0);
            u(row, i1) = a0 * gate(0, 1) + a1 * gate(1, 1) + a2 * gate(2, 1) + a3 * gate(3, 1);
            u(row, i2) = a0 * gate(0, 2) + a1 * gate(1, 2) + a2 * gate(2, 2) + a3 * gate(3, 2);
            u(row, i3) = a0 * gate(0, 3) + a1 * gate(1, 3) + a2 * gate(2, 3) + a3 * gate(3, 3);
        }
    }
}

Matrix embed_two_qubit(const Eigen::Matrix4cd& gate, int q, int n_qubits) {
    Matrix u = Matrix::Identity(1L << n_qubits, 1L << n_qubits);
    apply_two_qubit(u, gate, q, n_qubits);
    return u;
}

Eigen::Matrix4cd partial_trace_pair(const Matrix& m, int q, int n_qubits) {
    check_pair(q, n_qubits);
    const long dim = 1L << n_qubits;
    const long lo = 1L << (q - 1);
    const long hi = lo << 1;
    Eigen::Matrix4cd r = Eigen::Matrix4cd::Zero();
    for (long base = 0; base < dim; ++base) {
        if (base & (lo | hi)) continue;
        const long idx[4] = {base, base | lo, base | hi, base | lo | hi};
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
                r(a, b) += m(idx[a], idx[b]);
            }
        }
    }
    return r;
}

double phase_distance(const Matrix& u, const Matrix& v) {
    if (u.rows() != v.rows() || u.cols() != v.cols()) {
        throw std::invalid_argument("phase_distance: dimension mismatch");
    }
    const Complex tr = (u.adjoint() * v).trace();
    return 1.0 - std::abs(tr) / static_cast<double>(u.rows());
}

double literal_distance(const Matrix& u, const Matrix& v) {
    if (u.rows() != v.rows() || u.cols() != v.cols()) {
        throw std::invalid_argument("literal_distance: dimension mismatch");
    }
    const Complex tr = (u.adjoint() * v).trace();
    return 1.0 - tr.real() / static_cast<double>(u.rows());
}

}  // namespace mgf
