// Benchmark: serial reference vs OpenMP trial loop on one sweep cell.
// The two modes must produce identical summaries; the table reports the
// throughput of each and the resulting speedup.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "crn/harness.hpp"
#include "crn/results_io.hpp"

using namespace crn;

namespace {

double time_run(const SweepConfig& cfg, RunMode mode, SweepSummary& out) {
    const auto start = std::chrono::steady_clock::now();
    out = run_sweep(cfg, mode);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    long long trials = 20000;
    if (argc > 1) trials = std::atoll(argv[1]);

    SweepConfig cfg;
    cfg.m_values = {10};
    cfg.n_values = {4};
    cfg.trials = trials;
    cfg.base_seed = 7;

#ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif
    std::printf("cell M=10 N=4, %d thread(s)\n", threads);
    std::printf("%-10s %12s %10s %14s\n", "mode", "trials", "seconds", "trials/s");

    SweepSummary serial;
    SweepSummary parallel;
    double t_serial = 0.0;
    double t_parallel = 0.0;
    for (long long size : {trials / 4, trials}) {
        if (size < 1) continue;
        cfg.trials = size;
        t_serial = time_run(cfg, RunMode::serial, serial);
        std::printf("%-10s %12lld %10.3f %14.0f\n", "serial", size, t_serial, size / t_serial);
        t_parallel = time_run(cfg, RunMode::parallel, parallel);
        std::printf("%-10s %12lld %10.3f %14.0f\n", "parallel", size, t_parallel,
                    size / t_parallel);
    }
    std::printf("speedup at %lld trials: %.2fx\n", trials, t_serial / t_parallel);

    std::ostringstream a;
    std::ostringstream b;
    write_results_csv(serial, a);
    write_results_csv(parallel, b);
    if (a.str() != b.str()) {
        std::fprintf(stderr, "mismatch: serial and parallel summaries differ\n");
        return 1;
    }
    std::printf("serial and parallel summaries are identical\n");
    return 0;
}
