#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "mgf/model.hpp"

namespace mgf {

// Single-particle Bogoliubov-de Gennes blocks for the Jordan-Wigner image of
// the chain: assembled 2N x 2N matrix [[A, B], [-B, -A]] with A real
// symmetric, B real antisymmetric.
struct BdGMatrix {
    int n_sites = 0;
    Eigen::MatrixXd a;
    Eigen::MatrixXd b;

    Eigen::MatrixXd assembled() const;
};

enum class ModeLabel {
    paired_bulk,
    unpaired_zero_mode,
    unpaired_high_energy_point,
    defect_mode,
};

std::string to_string(ModeLabel label);

struct BdGSpectrum {
    int n_sites = 0;
    Eigen::VectorXd eigenvalues;   // ascending; closed under negation
    Eigen::MatrixXd eigenvectors;  // canonicalized columns, Nambu ordering
    std::vector<ModeLabel> labels;
    std::vector<double> ipr;                       // sum w^2 / (sum w)^2
    std::vector<std::vector<double>> site_weights; // w_j = u_j^2 + v_j^2
};

// A_ii = h, A_{i,i+1} = -J_i/2; B_{i,i+1} = -J_i/2 with B antisymmetric.
BdGMatrix build_bdg(const CouplingProfile& profile, double h);

BdGSpectrum bdg_spectrum(const BdGMatrix& m, double zero_tol = 1e-8,
                         double loc_threshold = 0.5);

// Relabels an existing spectrum with different thresholds.
std::vector<ModeLabel> classify_modes(const BdGSpectrum& spec, double zero_tol,
                                      double loc_threshold);

struct JordanWignerReport {
    double pauli_algebra_dev = 0.0;   // JW-built sigma vs Pauli matrices
    double anticommutator_dev = 0.0;  // {c_i, c_j^dag} - delta_ij etc.
    double spin_hamiltonian_dev = 0.0;      // JW-built Pauli assembly vs spin H
    double quadratic_hamiltonian_dev = 0.0; // fermionic H vs Hadamard-frame spin H
    bool ok = false;
};

JordanWignerReport jordan_wigner_check(const CouplingProfile& profile, double h);

// CSV: index,eigenvalue,label,ipr,site_weights...
std::string spectrum_to_csv(const BdGSpectrum& spec);

}  // namespace mgf
