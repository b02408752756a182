// Serial vs OpenMP throughput on the two hot paths: lattice-wide pair-field
// assembly and Monte Carlo replica batches.  Not part of ctest.
#include <omp.h>

#include <cstdio>

#include "contact/evolution2.hpp"
#include "contact/simulator.hpp"

using namespace contact;

namespace {

double time_k2(const SecondOrderProblem& prob, Backend backend, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const double t0 = omp_get_wtime();
        volatile double sink = k2_closed(prob, 2.0, backend).k_pp.constant;
        (void)sink;
        best = std::min(best, omp_get_wtime() - t0);
    }
    return best;
}

double time_replicas(const ModelParams& params, const SimConfig& cfg, Backend backend) {
    const double t0 = omp_get_wtime();
    volatile double sink = run_replicas(params, 0.0, 2.0, cfg, backend).snapshots.back().density_minus;
    (void)sink;
    return omp_get_wtime() - t0;
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());

    const Kernel g(KernelFamily::gaussian, 1.0, 3);
    const ModelParams params = make_params(1.0, 0.5, 0.5, g, g, g);
    const FourierGrid grid(3, 64, 40.0);
    FirstOrderInit init1;
    init1.c_plus = 1.0;
    init1.c_minus = 2.0;
    SecondOrderInit init2;
    init2.c_pp = 1.0;
    init2.c_pm = 2.0;
    init2.c_mm = 4.0;
    const auto prob = SecondOrderProblem::prepare(params, init1, init2, grid);

    const double ks = time_k2(prob, Backend::serial, 3);
    const double kp = time_k2(prob, Backend::openmp, 3);
    std::printf("pair-field assembly, n=64^3: serial %.3fs  openmp %.3fs  speedup %.2fx\n", ks, kp,
                ks / kp);

    ModelParams sim_params = make_params(0.0, 0.9, 0.0, g, Kernel(KernelFamily::gaussian, 0.5, 3), g);
    SimConfig cfg;
    cfg.box_length = 7.0;
    cfg.t_end = 2.0;
    cfg.snapshot_times = {2.0};
    cfg.replicas = 200;
    cfg.seed = 11;
    const double rs = time_replicas(sim_params, cfg, Backend::serial);
    const double rp = time_replicas(sim_params, cfg, Backend::openmp);
    std::printf("replica batch, 200 runs: serial %.3fs  openmp %.3fs  speedup %.2fx\n", rs, rp,
                rs / rp);
    return 0;
}
