#include "mgf/exact.hpp"

#include <Eigen/Eigenvalues>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace mgf {

std::string to_string(TraceSource s) {
    switch (s) {
        case TraceSource::exact: return "exact";
        case TraceSource::compiled_ideal: return "compiled_ideal";
        case TraceSource::compiled_noisy: return "compiled_noisy";
        case TraceSource::trotter_ideal: return "trotter_ideal";
        case TraceSource::trotter_noisy: return "trotter_noisy";
    }
    return "?";
}

Propagator propagator(const Matrix& hamiltonian, double t,
                      const std::string& id) {
    if (hamiltonian.rows() != hamiltonian.cols()) {
        throw std::invalid_argument("propagator: matrix not square");
    }
    if ((hamiltonian - hamiltonian.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        throw std::invalid_argument("propagator: matrix not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(hamiltonian);
    const Eigen::VectorXd& evals = es.eigenvalues();
    const Matrix& v = es.eigenvectors();
    Vector phases(evals.size());
    for (long k = 0; k < evals.size(); ++k) {
        phases(k) = std::exp(Complex(0.0, -evals(k) * t));
    }
    Propagator p;
    p.matrix = v * phases.asDiagonal() * v.adjoint();
    p.time = t;
    p.hamiltonian_id = id;
    return p;
}

long basis_index(const std::string& label, int n_qubits) {
    if (static_cast<int>(label.size()) != n_qubits) {
        throw std::invalid_argument("basis label '" + label + "' has length " +
                                    std::to_string(label.size()) + ", expected " +
                                    std::to_string(n_qubits));
    }
    long idx = 0;
    // Leftmost character is the highest qubit; qubit 1 is the LSB.
    for (char ch : label) {
        if (ch != '0' && ch != '1') {
            throw std::invalid_argument("basis label must be binary: " + label);
        }
        idx = (idx << 1) | (ch - '0');
    }
    return idx;
}

std::vector<double> magnetization_of_state(const Vector& state) {
    const long dim = state.size();
    int n = 0;
    while ((1L << n) < dim) ++n;
    std::vector<double> m(n, 0.0);
    for (long s = 0; s < dim; ++s) {
        const double p = std::norm(state(s));
        for (int b = 0; b < n; ++b) {
            m[b] += ((s >> b) & 1) ? -p : p;
        }
    }
    return m;
}

DynamicsTrace evolve_quench(const CouplingProfile& profile, double dt,
                            int n_steps, const std::string& initial_state) {
    if (dt <= 0.0) throw std::invalid_argument("evolve_quench: dt must be > 0");
    if (n_steps < 1) throw std::invalid_argument("evolve_quench: n_steps < 1");
    profile.validate();

    const Matrix h_final = build_hamiltonian(profile, true);
    const long dim = h_final.rows();
    Vector psi = Vector::Zero(dim);
    psi(basis_index(initial_state, profile.n_sites)) = 1.0;

    Eigen::SelfAdjointEigenSolver<Matrix> es(h_final);
    const Eigen::VectorXd& evals = es.eigenvalues();
    const Matrix& v = es.eigenvectors();
    const Vector coeffs = v.adjoint() * psi;

    DynamicsTrace trace;
    trace.source = TraceSource::exact;
    trace.sampled = false;
    trace.magnetization.assign(profile.n_sites, {});
    for (int k = 0; k <= n_steps; ++k) {
        const double t = k * dt;
        Vector rotated(dim);
        for (long j = 0; j < dim; ++j) {
            rotated(j) = coeffs(j) * std::exp(Complex(0.0, -evals(j) * t));
        }
        const Vector psi_t = v * rotated;
        const auto m = magnetization_of_state(psi_t);
        trace.times.push_back(t);
        for (int i = 0; i < profile.n_sites; ++i) {
            trace.magnetization[i].push_back(m[i]);
        }
    }
    return trace;
}

std::vector<Propagator> target_unitaries(const CouplingProfile& profile,
                                         double dt, int n_steps) {
    if (dt <= 0.0) throw std::invalid_argument("target_unitaries: dt must be > 0");
    if (n_steps < 1) throw std::invalid_argument("target_unitaries: n_steps < 1");
    const Matrix h_final = build_hamiltonian(profile, true);

    Eigen::SelfAdjointEigenSolver<Matrix> es(h_final);
    const Eigen::VectorXd& evals = es.eigenvalues();
    const Matrix& v = es.eigenvectors();

    std::vector<Propagator> targets;
    targets.reserve(n_steps);
    for (int k = 1; k <= n_steps; ++k) {
        const double t = k * dt;
        Vector phases(evals.size());
        for (long j = 0; j < evals.size(); ++j) {
            phases(j) = std::exp(Complex(0.0, -evals(j) * t));
        }
        Propagator p;
        p.matrix = v * phases.asDiagonal() * v.adjoint();
        p.time = t;
        p.hamiltonian_id = profile.name;
        targets.push_back(std::move(p));
    }
    return targets;
}

std::string trace_to_csv(const DynamicsTrace& trace) {
    std::ostringstream out;
    out << "time,qubit,magnetization\n";
    char buf[64];
    for (int t = 0; t < trace.n_times(); ++t) {
        for (int i = 0; i < trace.n_qubits(); ++i) {
            std::snprintf(buf, sizeof(buf), "%.12g,%d,%.12g", trace.times[t],
                          i + 1, trace.magnetization[i][t]);
            out << buf << "\n";
        }
    }
    return out.str();
}

}  // namespace mgf
