#include "mgf/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <vector>

namespace mgf {

namespace {

Eigen::VectorXd central_difference(const ObjectiveFn& f, const Eigen::VectorXd& x,
                                   double step) {
    Eigen::VectorXd g(x.size());
    Eigen::VectorXd xp = x;
    for (long i = 0; i < x.size(); ++i) {
        const double orig = xp(i);
        xp(i) = orig + step;
        const double fp = f(xp);
        xp(i) = orig - step;
        const double fm = f(xp);
        xp(i) = orig;
        g(i) = (fp - fm) / (2.0 * step);
    }
    return g;
}

}  // namespace

MinimizeResult minimize_bfgs(const ObjectiveFn& f, const GradientFn& grad,
                             const Eigen::VectorXd& x0,
                             const MinimizeOptions& opts) {
    const long n = x0.size();
    Eigen::VectorXd x = x0;
    double fx = f(x);
    Eigen::MatrixXd h_inv = Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd g = grad ? grad(x, fx)
                             : central_difference(f, x, opts.grad_step);

    MinimizeResult result;
    std::deque<double> history;  // best f, one entry per iteration
    double best = fx;

    int iter = 0;
    for (; iter < opts.max_iterations && fx > opts.target; ++iter) {
        Eigen::VectorXd dir = -(h_inv * g);
        double slope = g.dot(dir);
        if (slope >= 0.0) {  // not a descent direction, reset to steepest
            h_inv.setIdentity();
            dir = -g;
            slope = g.dot(dir);
            if (slope >= 0.0) break;  // gradient numerically zero
        }

        // Backtracking Armijo line search.
        double alpha = 1.0;
        const double c1 = 1e-4;
        double f_new = fx;
        Eigen::VectorXd x_new = x;
        bool accepted = false;
        for (int ls = 0; ls < 40; ++ls) {
            x_new = x + alpha * dir;
            f_new = f(x_new);
            if (f_new <= fx + c1 * alpha * slope) {
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted) break;

        Eigen::VectorXd g_new = grad ? grad(x_new, f_new)
                                     : central_difference(f, x_new, opts.grad_step);
        const Eigen::VectorXd s = x_new - x;
        const Eigen::VectorXd y = g_new - g;
        const double sy = s.dot(y);
        if (sy > 1e-14) {
            const double rho = 1.0 / sy;
            const Eigen::VectorXd hy = h_inv * y;
            // Sherman-Morrison form of the BFGS inverse update.
            h_inv += (sy + y.dot(hy)) * rho * rho * (s * s.transpose());
            h_inv -= rho * (hy * s.transpose() + s * hy.transpose());
        }
        x = std::move(x_new);
        fx = f_new;
        g = std::move(g_new);

        best = std::min(best, fx);
        history.push_back(best);
        if (static_cast<int>(history.size()) > opts.stall_window) {
            const double old = history.front();
            history.pop_front();
            if (old - best < opts.stall_rel * std::max(1.0, std::abs(old))) {
                break;
            }
        }
    }

    result.x = x;
    result.f = fx;
    result.iterations = iter;
    result.reached_target = fx <= opts.target;
    return result;
}

MinimizeResult minimize_nelder_mead(const ObjectiveFn& f,
                                    const Eigen::VectorXd& x0,
                                    const MinimizeOptions& opts) {
    const long n = x0.size();
    std::vector<Eigen::VectorXd> pts(n + 1, x0);
    std::vector<double> vals(n + 1);
    for (long i = 0; i < n; ++i) {
        pts[i + 1](i) += 0.1;
    }
    for (long i = 0; i <= n; ++i) vals[i] = f(pts[i]);

    auto order = [&] {
        std::vector<long> idx(n + 1);
        for (long i = 0; i <= n; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(),
                  [&](long a, long b) { return vals[a] < vals[b]; });
        std::vector<Eigen::VectorXd> p2(n + 1);
        std::vector<double> v2(n + 1);
        for (long i = 0; i <= n; ++i) {
            p2[i] = pts[idx[i]];
            v2[i] = vals[idx[i]];
        }
        pts = std::move(p2);
        vals = std::move(v2);
    };

    int iter = 0;
    for (; iter < opts.max_iterations; ++iter) {
        order();
        if (vals[0] <= opts.target) break;
        if (vals[n] - vals[0] < 1e-14 * std::max(1.0, std::abs(vals[0]))) break;

        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
        for (long i = 0; i < n; ++i) centroid += pts[i];
        centroid /= static_cast<double>(n);

        const Eigen::VectorXd refl = centroid + (centroid - pts[n]);
        const double f_refl = f(refl);
        if (f_refl < vals[0]) {
            const Eigen::VectorXd exp_pt = centroid + 2.0 * (centroid - pts[n]);
            const double f_exp = f(exp_pt);
            if (f_exp < f_refl) {
                pts[n] = exp_pt;
                vals[n] = f_exp;
            } else {
                pts[n] = refl;
                vals[n] = f_refl;
            }
        } else if (f_refl < vals[n - 1]) {
            pts[n] = refl;
            vals[n] = f_refl;
        } else {
            const Eigen::VectorXd contr = centroid + 0.5 * (pts[n] - centroid);
            const double f_contr = f(contr);
            if (f_contr < vals[n]) {
                pts[n] = contr;
                vals[n] = f_contr;
            } else {
                for (long i = 1; i <= n; ++i) {
                    pts[i] = pts[0] + 0.5 * (pts[i] - pts[0]);
                    vals[i] = f(pts[i]);
                }
            }
        }
    }
    order();

    MinimizeResult result;
    result.x = pts[0];
    result.f = vals[0];
    result.iterations = iter;
    result.reached_target = vals[0] <= opts.target;
    return result;
}

}  // namespace mgf
