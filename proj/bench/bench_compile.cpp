// Compares the two trajectory-compilation strategies and the trajectory
// sampler at different worker counts.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mgf/circuitsim.hpp"
#include "mgf/compiler.hpp"
#include "mgf/trotter.hpp"

using namespace mgf;

namespace {

double run_compile(const CouplingProfile& profile, int n_steps, bool parallel) {
    OptimizerConfig cfg;
    cfg.seed = 1;
    cfg.parallel = parallel;
    const auto t0 = std::chrono::steady_clock::now();
    const auto steps = compile_trajectory(profile, 0.1, n_steps, cfg);
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    double worst = 0.0;
    for (const auto& st : steps) worst = std::max(worst, st.residual);
    std::printf("  %-28s %6.2f s  worst residual %.2e\n",
                parallel ? "parallel (independent steps)"
                         : "sequential (warm start)",
                s, worst);
    return s;
}

double run_sampling(const CouplingProfile& profile, long shots, int threads) {
#ifdef _OPENMP
    omp_set_num_threads(threads);
#endif
    NoiseModel noise;
    noise.enabled = true;
    const auto circuit = trotter_evolution(profile, 0.1, 50).full;
    const auto t0 = std::chrono::steady_clock::now();
    (void)run_noisy_trajectories(circuit, profile.n_sites, "00000", noise,
                                 shots, 7);
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    std::printf("  %2d thread(s)                 %6.2f s\n", threads, s);
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    const int n_steps = argc > 1 ? std::atoi(argv[1]) : 25;
    const long shots = argc > 2 ? std::atol(argv[2]) : 2048;
    const auto profile = preset_profile("staggered5");

    std::printf("trajectory compilation (%d steps, staggered5):\n", n_steps);
    const double seq = run_compile(profile, n_steps, false);
    const double par = run_compile(profile, n_steps, true);
    std::printf("  speedup parallel/sequential: %.2fx\n\n", seq / par);

    std::printf("noisy trajectory sampling (%ld shots, 50-step circuit):\n",
                shots);
    const double one = run_sampling(profile, shots, 1);
#ifdef _OPENMP
    const int max_threads = omp_get_max_threads();
#else
    const int max_threads = 1;
#endif
    if (max_threads > 1) {
        const double many = run_sampling(profile, shots, max_threads);
        std::printf("  speedup: %.2fx\n", one / many);
    } else {
        std::printf("  single hardware thread available; no parallel run\n");
    }
    return 0;
}
