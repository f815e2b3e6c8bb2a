#pragma once

#include <Eigen/Dense>

#include "mgf/model.hpp"

namespace mgf {

// Left-multiplies U by a two-qubit gate acting on qubits (q, q+1),
// q 1-based with qubit 1 on the least-significant bit. The 4x4 gate is
// indexed by (hi_bit * 2 + lo_bit).
void apply_two_qubit(Matrix& u, const Eigen::Matrix4cd& gate, int q, int n_qubits);
void apply_two_qubit(Vector& state, const Eigen::Matrix4cd& gate, int q,
                     int n_qubits);
void apply_one_qubit(Vector& state, const Eigen::Matrix2cd& gate, int q,
                     int n_qubits);

Matrix embed_two_qubit(const Eigen::Matrix4cd& gate, int q, int n_qubits);

// Right-multiplies: U <- U * gate_embed.
void apply_two_qubit_right(Matrix& u, const Eigen::Matrix4cd& gate, int q,
                           int n_qubits);

// Reduces tr(G_embed^dag * M) to a 4x4 form: returns R with
// tr(G_embed^dag M) = sum_{a,b} conj(G[a,b]) * R[a,b].
Eigen::Matrix4cd partial_trace_pair(const Matrix& m, int q, int n_qubits);

// 1 - |tr(U^dag V)| / dim. Phase-invariant distance in [0, 1].
double phase_distance(const Matrix& u, const Matrix& v);

// The paper's literal variant 1 - Re tr(U^dag V)/dim (phase-sensitive).
double literal_distance(const Matrix& u, const Matrix& v);

}  // namespace mgf
