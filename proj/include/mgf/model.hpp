#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace mgf {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Complex = std::complex<double>;

// Ising chain instance: per-bond Z couplings plus a transverse field.
struct CouplingProfile {
    int n_sites = 0;
    std::vector<double> couplings;  // J_i on bond (i, i+1), size n_sites - 1
    double field = 0.0;             // h_x
    std::string name;               // preset label, empty for custom profiles

    void validate() const;
};

// Preset names as exposed on the CLI.
// 5-site: staggered5, mirror5, defect5, uniform5
// 7-site: staggered7, defect-weak7, defect-strong7, uniform7
CouplingProfile preset_profile(const std::string& name);
const std::vector<std::string>& preset_names();

// Maximum chain length for dense matrix construction.
inline constexpr int kDefaultSiteCap = 12;

// H = -sum_i J_i Z_i Z_{i+1} - h_x sum_i X_i on 2^N dimensions.
// Qubit 1 maps to the least-significant bit of basis indices.
Matrix build_hamiltonian(const CouplingProfile& profile, bool include_field,
                         int site_cap = kDefaultSiteCap);

// (H(t<0), H(t>=0)): field off before the quench, on after.
std::pair<Matrix, Matrix> quench_pair(const CouplingProfile& profile,
                                      int site_cap = kDefaultSiteCap);

}  // namespace mgf
