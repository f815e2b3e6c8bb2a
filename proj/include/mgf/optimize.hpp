#pragma once

#include <Eigen/Dense>
#include <functional>

namespace mgf {

using ObjectiveFn = std::function<double(const Eigen::VectorXd&)>;
using GradientFn =
    std::function<Eigen::VectorXd(const Eigen::VectorXd&, double f_at_x)>;

struct MinimizeOptions {
    double target = 0.0;        // stop as soon as f <= target
    int max_iterations = 2000;
    double grad_step = 1e-7;    // central-difference step for the default gradient
    double stall_rel = 1e-12;   // relative improvement considered a stall
    int stall_window = 50;      // iterations without improvement before stopping
};

struct MinimizeResult {
    Eigen::VectorXd x;
    double f = 0.0;
    int iterations = 0;
    bool reached_target = false;
};

// Dense BFGS with backtracking line search. The gradient callback receives the
// objective value at x so implementations can reuse cached state; pass nullptr
// to fall back to generic central differences.
MinimizeResult minimize_bfgs(const ObjectiveFn& f, const GradientFn& grad,
                             const Eigen::VectorXd& x0,
                             const MinimizeOptions& opts);

// Nelder-Mead simplex, used as a fallback when BFGS stalls above target.
MinimizeResult minimize_nelder_mead(const ObjectiveFn& f,
                                    const Eigen::VectorXd& x0,
                                    const MinimizeOptions& opts);

}  // namespace mgf
