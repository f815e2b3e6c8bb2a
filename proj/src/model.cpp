#include "mgf/model.hpp"

#include <cmath>
#include <stdexcept>

namespace mgf {

void CouplingProfile::validate() const {
    if (n_sites < 2) {
        throw std::invalid_argument("CouplingProfile: need at least 2 sites");
    }
    if (static_cast<int>(couplings.size()) != n_sites - 1) {
        throw std::invalid_argument(
            "CouplingProfile: expected " + std::to_string(n_sites - 1) +
            " couplings, got " + std::to_string(couplings.size()));
    }
    for (double j : couplings) {
        if (!std::isfinite(j)) {
            throw std::invalid_argument("CouplingProfile: non-finite coupling");
        }
    }
    if (!std::isfinite(field)) {
        throw std::invalid_argument("CouplingProfile: non-finite field");
    }
}

namespace {

CouplingProfile make(const std::string& name, std::vector<double> j, double h) {
    CouplingProfile p;
    p.n_sites = static_cast<int>(j.size()) + 1;
    p.couplings = std::move(j);
    p.field = h;
    p.name = name;
    return p;
}

}  // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {
        "staggered5", "mirror5",       "defect5",        "uniform5",
        "staggered7", "defect-weak7",  "defect-strong7", "uniform7",
    };
    return names;
}

CouplingProfile preset_profile(const std::string& name) {
    if (name == "staggered5") return make(name, {2, 4, 2, 4}, 1.0);
    if (name == "mirror5") return make(name, {2, 4, 4, 2}, 1.0);
    if (name == "defect5") return make(name, {4, 2, 2, 4}, 1.0);
    if (name == "uniform5") return make(name, {2, 2, 2, 2}, 1.0);
    if (name == "staggered7") return make(name, {2, 4, 2, 4, 2, 4}, 1.0);
    if (name == "defect-weak7") return make(name, {2, 4, 2, 2, 4, 2}, 1.0);
    if (name == "defect-strong7") return make(name, {4, 2, 4, 4, 2, 4}, 1.0);
    if (name == "uniform7") return make(name, {2, 2, 2, 2, 2, 2}, 1.0);
    throw std::invalid_argument("unknown preset: " + name);
}

Matrix build_hamiltonian(const CouplingProfile& profile, bool include_field,
                         int site_cap) {
    profile.validate();
    const int n = profile.n_sites;
    if (n > site_cap) {
        throw std::length_error("build_hamiltonian: " + std::to_string(n) +
                                " sites exceeds cap " + std::to_string(site_cap));
    }
    const long dim = 1L << n;
    Matrix h = Matrix::Zero(dim, dim);

    // Diagonal ZZ part. Z_i eigenvalue is +1 for bit 0 (|0>), -1 for bit 1.
    for (long s = 0; s < dim; ++s) {
        double e = 0.0;
        for (int b = 0; b < n - 1; ++b) {
            const int z1 = ((s >> b) & 1) ? -1 : 1;
            const int z2 = ((s >> (b + 1)) & 1) ? -1 : 1;
            e -= profile.couplings[b] * z1 * z2;
        }
        h(s, s) = e;
    }

    // Off-diagonal X part connects states differing in one bit.
    if (include_field && profile.field != 0.0) {
        for (long s = 0; s < dim; ++s) {
            for (int b = 0; b < n; ++b) {
                h(s ^ (1L << b), s) -= profile.field;
            }
        }
    }
    return h;
}

std::pair<Matrix, Matrix> quench_pair(const CouplingProfile& profile,
                                      int site_cap) {
    return {build_hamiltonian(profile, false, site_cap),
            build_hamiltonian(profile, true, site_cap)};
}

}  // namespace mgf
