#include <doctest.h>

#include <random>

#include "mgf/optimize.hpp"

using namespace mgf;

TEST_SUITE("optimize") {

TEST_CASE("bfgs minimizes a shifted quadratic") {
    Eigen::VectorXd center(3);
    center << 1.0, -2.0, 0.5;
    ObjectiveFn f = [&](const Eigen::VectorXd& x) {
        return (x - center).squaredNorm();
    };
    MinimizeOptions opts;
    opts.target = 1e-14;
    const auto res = minimize_bfgs(f, nullptr, Eigen::VectorXd::Zero(3), opts);
    CHECK(res.reached_target);
    CHECK((res.x - center).norm() < 1e-6);
}

TEST_CASE("bfgs handles the Rosenbrock valley") {
    ObjectiveFn f = [](const Eigen::VectorXd& x) {
        const double a = 1.0 - x(0);
        const double b = x(1) - x(0) * x(0);
        return a * a + 100.0 * b * b;
    };
    MinimizeOptions opts;
    opts.target = 1e-10;
    opts.max_iterations = 5000;
    Eigen::VectorXd x0(2);
    x0 << -1.2, 1.0;
    const auto res = minimize_bfgs(f, nullptr, x0, opts);
    CHECK(res.f < 1e-8);
}

TEST_CASE("explicit gradient is used when provided") {
    int grad_calls = 0;
    ObjectiveFn f = [](const Eigen::VectorXd& x) { return x.squaredNorm(); };
    GradientFn g = [&](const Eigen::VectorXd& x, double) {
        ++grad_calls;
        return Eigen::VectorXd(2.0 * x);
    };
    MinimizeOptions opts;
    opts.target = 1e-12;
    const auto res = minimize_bfgs(f, g, Eigen::VectorXd::Ones(4), opts);
    CHECK(res.reached_target);
    CHECK(grad_calls > 0);
}

TEST_CASE("nelder-mead reaches a quadratic minimum") {
    Eigen::VectorXd center(2);
    center << 3.0, -1.0;
    ObjectiveFn f = [&](const Eigen::VectorXd& x) {
        return (x - center).squaredNorm();
    };
    MinimizeOptions opts;
    opts.target = 1e-12;
    opts.max_iterations = 5000;
    const auto res = minimize_nelder_mead(f, Eigen::VectorXd::Zero(2), opts);
    CHECK(res.f < 1e-10);
}

TEST_CASE("stall detection stops on a flat objective") {
    ObjectiveFn f = [](const Eigen::VectorXd&) { return 1.0; };
    MinimizeOptions opts;
    opts.max_iterations = 100000;
    const auto res = minimize_bfgs(f, nullptr, Eigen::VectorXd::Zero(2), opts);
    CHECK(res.iterations < 1000);
    CHECK(!res.reached_target);
}

}
