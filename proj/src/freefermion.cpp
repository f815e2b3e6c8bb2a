#include "mgf/freefermion.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "mgf/compiler.hpp"

namespace mgf {

namespace {

// Particle-hole content below this magnitude counts as a Majorana-balanced
// (pairable) mode; the mirror/defect operators sit near 1/2.
constexpr double kAsymThreshold = 0.25;

Eigen::VectorXd asymmetry_operator(int n) {
    Eigen::VectorXd lam(2 * n);
    lam.head(n).setOnes();
    lam.tail(n).setConstant(-1.0);
    return lam;
}

Eigen::VectorXd position_operator(int n) {
    Eigen::VectorXd x(2 * n);
    for (int j = 0; j < n; ++j) {
        x(j) = x(n + j) = static_cast<double>(j + 1);
    }
    return x;
}

// Rotates the columns of block so that diag(weights) becomes diagonal within
// the subspace; ties are broken by the caller via nested rotations.
void rotate_by(Eigen::Ref<Eigen::MatrixXd> block, const Eigen::VectorXd& weights) {
    const Eigen::MatrixXd projected =
        block.transpose() * weights.asDiagonal() * block;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(projected);
    block = block * es.eigenvectors();
}

void fix_signs(Eigen::Ref<Eigen::MatrixXd> block) {
    for (long c = 0; c < block.cols(); ++c) {
        long imax = 0;
        block.col(c).cwiseAbs().maxCoeff(&imax);
        if (block(imax, c) < 0.0) block.col(c) = -block.col(c);
    }
}

}  // namespace

std::string to_string(ModeLabel label) {
    switch (label) {
        case ModeLabel::paired_bulk: return "paired_bulk";
        case ModeLabel::unpaired_zero_mode: return "unpaired_zero_mode";
        case ModeLabel::unpaired_high_energy_point:
            return "unpaired_high_energy_point";
        case ModeLabel::defect_mode: return "defect_mode";
    }
    return "?";
}

Eigen::MatrixXd BdGMatrix::assembled() const {
    const int n = n_sites;
    Eigen::MatrixXd h(2 * n, 2 * n);
    h.topLeftCorner(n, n) = a;
    h.topRightCorner(n, n) = b;
    h.bottomLeftCorner(n, n) = -b;
    h.bottomRightCorner(n, n) = -a;
    return h;
}

BdGMatrix build_bdg(const CouplingProfile& profile, double h) {
    profile.validate();
    const int n = profile.n_sites;
    BdGMatrix m;
    m.n_sites = n;
    m.a = Eigen::MatrixXd::Zero(n, n);
    m.b = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) m.a(i, i) = h;
    for (int i = 0; i < n - 1; ++i) {
        const double half = profile.couplings[i] / 2.0;
        m.a(i, i + 1) = m.a(i + 1, i) = -half;
        // B^T = -B; sign pattern follows the antisymmetric completion of
        // B_{i,i+1} = -J_i/2.
        m.b(i, i + 1) = -half;
        m.b(i + 1, i) = half;
    }
    return m;
}

BdGSpectrum bdg_spectrum(const BdGMatrix& m, double zero_tol,
                         double loc_threshold) {
    const int n = m.n_sites;
    if ((m.a - m.a.transpose()).cwiseAbs().maxCoeff() > 1e-12 ||
        (m.b + m.b.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("bdg_spectrum: blocks violate symmetry");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.assembled());

    BdGSpectrum spec;
    spec.n_sites = n;
    spec.eigenvalues = es.eigenvalues();
    spec.eigenvectors = es.eigenvectors();

    // Canonicalize degenerate subspaces: first separate by particle-hole
    // asymmetry, then localize remaining ties along the chain.
    const double scale = std::max(1.0, spec.eigenvalues.cwiseAbs().maxCoeff());
    const double group_tol = 1e-7 * scale;
    const Eigen::VectorXd lam = asymmetry_operator(n);
    const Eigen::VectorXd pos = position_operator(n);
    long begin = 0;
    while (begin < 2 * n) {
        long end = begin + 1;
        while (end < 2 * n &&
               spec.eigenvalues(end) - spec.eigenvalues(begin) < group_tol) {
            ++end;
        }
        auto block = spec.eigenvectors.middleCols(begin, end - begin);
        if (end - begin > 1) {
            rotate_by(block, lam);
            // localize within near-equal asymmetry clusters
            Eigen::VectorXd asym(end - begin);
            for (long c = 0; c < end - begin; ++c) {
                asym(c) = block.col(c).dot(lam.asDiagonal() * block.col(c));
            }
            long cb = 0;
            while (cb < end - begin) {
                long ce = cb + 1;
                while (ce < end - begin && asym(ce) - asym(cb) < 1e-6) ++ce;
                if (ce - cb > 1) {
                    rotate_by(block.middleCols(cb, ce - cb), pos);
                }
                cb = ce;
            }
        }
        fix_signs(block);
        begin = end;
    }

    spec.site_weights.resize(2 * n);
    spec.ipr.resize(2 * n);
    for (int c = 0; c < 2 * n; ++c) {
        auto& w = spec.site_weights[c];
        w.assign(n, 0.0);
        double sum = 0.0, sum2 = 0.0;
        for (int j = 0; j < n; ++j) {
            w[j] = spec.eigenvectors(j, c) * spec.eigenvectors(j, c) +
                   spec.eigenvectors(n + j, c) * spec.eigenvectors(n + j, c);
            sum += w[j];
            sum2 += w[j] * w[j];
        }
        spec.ipr[c] = sum > 0.0 ? sum2 / (sum * sum) : 0.0;
    }
    spec.labels = classify_modes(spec, zero_tol, loc_threshold);
    return spec;
}

std::vector<ModeLabel> classify_modes(const BdGSpectrum& spec, double zero_tol,
                                      double loc_threshold) {
    (void)loc_threshold;  // localized character is reported via ipr
    const int n = spec.n_sites;
    const Eigen::VectorXd lam = asymmetry_operator(n);
    const double e_max = spec.eigenvalues.cwiseAbs().maxCoeff();

    std::vector<ModeLabel> labels(2 * n, ModeLabel::paired_bulk);
    for (int c = 0; c < 2 * n; ++c) {
        const double e = spec.eigenvalues(c);
        if (std::abs(e) <= zero_tol) {
            labels[c] = ModeLabel::unpaired_zero_mode;
            continue;
        }
        const double asym = std::abs(
            spec.eigenvectors.col(c).dot(lam.asDiagonal() * spec.eigenvectors.col(c)));
        if (asym >= kAsymThreshold) {
            const bool extremal = std::abs(std::abs(e) - e_max) < 1e-6 * e_max;
            labels[c] = extremal ? ModeLabel::unpaired_high_energy_point
                                 : ModeLabel::defect_mode;
        }
    }
    return labels;
}

namespace {

Eigen::Matrix2cd pauli(char which) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    switch (which) {
        case 'I': m.setIdentity(); break;
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, Complex(0, -1), Complex(0, 1), 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
        case '-': m << 0, 1, 0, 0; break;  // sigma^- = |0><1|
    }
    return m;
}

// Operator with the given single-qubit factor at each site; site 1 is the
// least-significant bit, so site 1's factor is the rightmost Kronecker factor.
Matrix site_operator(const std::string& factors) {
    const int n = static_cast<int>(factors.size());
    Matrix op = Matrix::Identity(1, 1);
    for (int site = 1; site <= n; ++site) {
        const Eigen::Matrix2cd local = pauli(factors[site - 1]);
        Matrix next(op.rows() * 2, op.cols() * 2);
        next.topLeftCorner(op.rows(), op.cols()) = local(0, 0) * op;
        next.topRightCorner(op.rows(), op.cols()) = local(0, 1) * op;
        next.bottomLeftCorner(op.rows(), op.cols()) = local(1, 0) * op;
        next.bottomRightCorner(op.rows(), op.cols()) = local(1, 1) * op;
        op = std::move(next);
    }
    return op;
}

Matrix jw_annihilation(int site, int n) {
    std::string factors(n, 'I');
    for (int k = 1; k < site; ++k) factors[k - 1] = 'Z';
    factors[site - 1] = '-';
    return site_operator(factors);
}

}  // namespace

JordanWignerReport jordan_wigner_check(const CouplingProfile& profile, double h) {
    profile.validate();
    const int n = profile.n_sites;
    if (n > 10) {
        throw std::length_error("jordan_wigner_check: N > 10");
    }
    const long dim = 1L << n;
    const Matrix id = Matrix::Identity(dim, dim);

    std::vector<Matrix> c(n);
    for (int i = 0; i < n; ++i) c[i] = jw_annihilation(i + 1, n);

    JordanWignerReport report;

    // {c_i, c_j^dag} = delta_ij, {c_i, c_j} = 0
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Matrix acdag = c[i] * c[j].adjoint() + c[j].adjoint() * c[i];
            const Matrix acc = c[i] * c[j] + c[j] * c[i];
            report.anticommutator_dev = std::max(
                report.anticommutator_dev,
                (acdag - (i == j ? id : Matrix::Zero(dim, dim).eval()))
                    .cwiseAbs()
                    .maxCoeff());
            report.anticommutator_dev =
                std::max(report.anticommutator_dev, acc.cwiseAbs().maxCoeff());
        }
    }

    // JW strings reproduce the Pauli algebra: sigma^z = 1 - 2n,
    // string * (c^dag + c) = sigma^x, string * (c^dag - c) = -i sigma^y.
    for (int i = 0; i < n; ++i) {
        std::string zf(n, 'I'), xf(n, 'I'), yf(n, 'I');
        zf[i] = 'Z';
        xf[i] = 'X';
        yf[i] = 'Y';
        Matrix string = id;
        for (int k = 0; k < i; ++k) {
            std::string sf(n, 'I');
            sf[k] = 'Z';
            string = string * site_operator(sf);
        }
        const Matrix num = c[i].adjoint() * c[i];
        report.pauli_algebra_dev = std::max(
            report.pauli_algebra_dev,
            (id - 2.0 * num - site_operator(zf)).cwiseAbs().maxCoeff());
        report.pauli_algebra_dev = std::max(
            report.pauli_algebra_dev,
            (string * (c[i].adjoint() + c[i]) - site_operator(xf))
                .cwiseAbs()
                .maxCoeff());
        report.pauli_algebra_dev = std::max(
            report.pauli_algebra_dev,
            (string * (c[i].adjoint() - c[i]) -
             Complex(0, -1) * site_operator(yf))
                .cwiseAbs()
                .maxCoeff());
    }

    // Spin Hamiltonian assembled from JW-built Pauli operators.
    Matrix h_spin = Matrix::Zero(dim, dim);
    for (int i = 0; i < n - 1; ++i) {
        std::string zz(n, 'I');
        zz[i] = zz[i + 1] = 'Z';
        h_spin -= profile.couplings[i] * site_operator(zz);
    }
    for (int i = 0; i < n; ++i) {
        std::string x(n, 'I');
        x[i] = 'X';
        h_spin -= h * site_operator(x);
    }
    CouplingProfile with_field = profile;
    with_field.field = h;
    const Matrix h_ref = build_hamiltonian(with_field, true);
    report.spin_hamiltonian_dev = (h_spin - h_ref).cwiseAbs().maxCoeff();

    // Quadratic fermionic form; its spin image is the Hadamard-frame chain
    // (couplings on sigma^x, field on sigma^z under this JW dictionary).
    Matrix h_ferm = Matrix::Zero(dim, dim);
    for (int i = 0; i < n - 1; ++i) {
        const Matrix hop = c[i].adjoint() * c[i + 1] +
                           c[i].adjoint() * c[i + 1].adjoint();
        h_ferm -= profile.couplings[i] * (hop + hop.adjoint());
    }
    for (int i = 0; i < n; ++i) {
        h_ferm += h * (2.0 * c[i].adjoint() * c[i] - id);
    }
    report.quadratic_hamiltonian_dev =
        (h_ferm - hadamard_frame(h_ref)).cwiseAbs().maxCoeff();

    report.ok = report.pauli_algebra_dev < 1e-10 &&
                report.anticommutator_dev < 1e-10 &&
                report.spin_hamiltonian_dev < 1e-10 &&
                report.quadratic_hamiltonian_dev < 1e-10;
    return report;
}

std::string spectrum_to_csv(const BdGSpectrum& spec) {
    std::ostringstream out;
    out << "index,eigenvalue,label,ipr";
    for (int j = 1; j <= spec.n_sites; ++j) out << ",w" << j;
    out << "\n";
    char buf[64];
    for (int c = 0; c < 2 * spec.n_sites; ++c) {
        std::snprintf(buf, sizeof(buf), "%d,%.12g,", c,
                      spec.eigenvalues(c));
        out << buf << to_string(spec.labels[c]);
        std::snprintf(buf, sizeof(buf), ",%.12g", spec.ipr[c]);
        out << buf;
        for (int j = 0; j < spec.n_sites; ++j) {
            std::snprintf(buf, sizeof(buf), ",%.12g", spec.site_weights[c][j]);
            out << buf;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace mgf
