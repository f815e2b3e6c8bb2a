#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <numeric>
#include <random>

#include "mgf/freefermion.hpp"
#include "test_helpers.hpp"

using namespace mgf;

TEST_SUITE("freefermion") {

TEST_CASE("block structure follows the element rules") {
    CouplingProfile p;
    p.n_sites = 3;
    p.couplings = {2.0, 4.0};
    const auto m = build_bdg(p, 1.5);
    Eigen::Matrix3d a;
    a << 1.5, -1.0, 0.0,
         -1.0, 1.5, -2.0,
         0.0, -2.0, 1.5;
    Eigen::Matrix3d b;
    b << 0.0, -1.0, 0.0,
         1.0, 0.0, -2.0,
         0.0, 2.0, 0.0;
    CHECK((m.a - a).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((m.b - b).cwiseAbs().maxCoeff() < 1e-15);
    const auto h = m.assembled();
    CHECK((h - h.transpose()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("spectrum is particle-hole symmetric for random chains") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = oracle::random_profile(3 + trial % 4, rng);
        const auto spec = bdg_spectrum(build_bdg(p, p.field));
        std::vector<double> e(spec.eigenvalues.data(),
                              spec.eigenvalues.data() + spec.eigenvalues.size());
        auto neg = e;
        for (auto& x : neg) x = -x;
        std::sort(neg.begin(), neg.end());
        for (std::size_t i = 0; i < e.size(); ++i) {
            CHECK(std::abs(e[i] - neg[i]) < 1e-10);
        }
        // eigenvectors stay orthonormal after canonicalization
        const Eigen::MatrixXd gram =
            spec.eigenvectors.transpose() * spec.eigenvectors;
        CHECK((gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols()))
                  .cwiseAbs()
                  .maxCoeff() < 1e-10);
    }
}

TEST_CASE("many-body spectrum equals occupation sums of single-particle levels") {
    // The 2^N spin spectrum must match { -sum eps + 2 * sum_{occupied} eps }
    // over all occupation subsets; the factor 2 is the level-to-gap scale.
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 6; ++trial) {
        const auto p = oracle::random_profile(3 + trial % 3, rng);
        const int n = p.n_sites;
        const auto spec = bdg_spectrum(build_bdg(p, p.field));
        std::vector<double> eps;  // nonnegative half of the spectrum
        for (int i = n; i < 2 * n; ++i) eps.push_back(spec.eigenvalues(i));

        std::vector<double> predicted;
        const double ground =
            -std::accumulate(eps.begin(), eps.end(), 0.0);
        for (long mask = 0; mask < (1L << n); ++mask) {
            double e = ground;
            for (int k = 0; k < n; ++k) {
                if (mask >> k & 1) e += 2.0 * eps[static_cast<std::size_t>(k)];
            }
            predicted.push_back(e);
        }
        std::sort(predicted.begin(), predicted.end());

        Eigen::SelfAdjointEigenSolver<Matrix> es(build_hamiltonian(p, true));
        for (long i = 0; i < (1L << n); ++i) {
            CHECK(es.eigenvalues()(i) ==
                  doctest::Approx(predicted[static_cast<std::size_t>(i)])
                      .epsilon(1e-8));
        }
    }
}

TEST_CASE("mirror and defect chains at zero field") {
    for (const char* name : {"mirror5", "defect5"}) {
        const auto spec = bdg_spectrum(build_bdg(preset_profile(name), 0.0));
        int zeros = 0;
        for (int i = 0; i < 10; ++i) {
            if (std::abs(spec.eigenvalues(i)) <= 1e-8) ++zeros;
        }
        CHECK(zeros == 2);
        // level sets {0, 2, 4} with the outer pair twice the inner
        for (double e : {2.0, 4.0}) {
            int count = 0;
            for (int i = 0; i < 10; ++i) {
                if (std::abs(spec.eigenvalues(i) - e) < 1e-9) ++count;
            }
            CHECK(count == 2);
        }
        for (int i = 0; i < 10; ++i) {
            const bool zero_labeled_bulk =
                spec.labels[i] == ModeLabel::paired_bulk &&
                std::abs(spec.eigenvalues(i)) <= 1e-8;
            CHECK(!zero_labeled_bulk);
        }
    }
}

TEST_CASE("zero modes localize on the chain ends") {
    const auto spec = bdg_spectrum(build_bdg(preset_profile("mirror5"), 0.0));
    std::vector<int> zero_cols;
    for (int i = 0; i < 10; ++i) {
        if (spec.labels[i] == ModeLabel::unpaired_zero_mode) {
            zero_cols.push_back(i);
        }
    }
    REQUIRE(zero_cols.size() == 2);
    // one mode on each end, >= 90% of its weight there
    const auto& w_left = spec.site_weights[static_cast<std::size_t>(zero_cols[0])];
    const auto& w_right = spec.site_weights[static_cast<std::size_t>(zero_cols[1])];
    const bool left_first = w_left[0] > w_right[0];
    CHECK((left_first ? w_left[0] : w_right[0]) >= 0.9);
    CHECK((left_first ? w_right[4] : w_left[4]) >= 0.9);
}

TEST_CASE("defect chain reports a center-site mode") {
    const auto spec = bdg_spectrum(build_bdg(preset_profile("defect5"), 0.0));
    bool found = false;
    for (int i = 0; i < 10; ++i) {
        if (spec.labels[i] == ModeLabel::defect_mode) {
            const auto& w = spec.site_weights[static_cast<std::size_t>(i)];
            CHECK(w[2] >= *std::max_element(w.begin(), w.end()) - 1e-12);
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("jordan-wigner construction is exact for small chains") {
    std::mt19937_64 rng(53);
    for (int n = 2; n <= 5; ++n) {
        const auto p = oracle::random_profile(n, rng);
        const auto report = jordan_wigner_check(p, p.field);
        CHECK(report.ok);
        CHECK(report.pauli_algebra_dev < 1e-12);
        CHECK(report.anticommutator_dev < 1e-12);
        CHECK(report.spin_hamiltonian_dev < 1e-12);
        CHECK(report.quadratic_hamiltonian_dev < 1e-12);
    }
}

TEST_CASE("spectrum csv format") {
    const auto spec = bdg_spectrum(build_bdg(preset_profile("mirror5"), 0.0));
    const auto csv = spectrum_to_csv(spec);
    CHECK(csv.rfind("index,eigenvalue,label,ipr,w1,w2,w3,w4,w5\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);
    CHECK(csv.find("unpaired_zero_mode") != std::string::npos);
}

}
