// Compares the serial reference trial loop against the OpenMP one: same
// samples, wall-clock for each, speedup. Not a correctness test (the test
// suite asserts bit-identity); this is the place to look when changing the
// parallel layout.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mimocap/montecarlo.hpp"

using namespace mimocap;

namespace {

double run_ms(const ScenarioConfig& cfg, double snr_db, ExecMode mode, ScenarioResult& out) {
    const auto t0 = std::chrono::steady_clock::now();
    out = run_scenario(cfg, snr_db, mode);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    long long trials = 20000;
    if (argc > 1) trials = std::stoll(argv[1]);

#ifdef _OPENMP
    std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
    std::printf("openmp: disabled at build time\n");
#endif
    std::printf("%-8s %-8s %10s %12s %12s %9s %10s\n", "system", "kind", "trials", "serial_ms",
                "parallel_ms", "speedup", "identical");

    struct Case {
        int n;
        ChannelKind kind;
        double m;
    };
    const Case cases[] = {
        {4, ChannelKind::GaussianKronecker, 1.0},
        {8, ChannelKind::GaussianKronecker, 1.0},
        {4, ChannelKind::NakagamiKronecker, 3.0},
        {8, ChannelKind::NakagamiKronecker, 3.0},
    };

    for (const Case& c : cases) {
        ScenarioConfig cfg;
        cfg.nt = c.n;
        cfg.nr = c.n;
        cfg.kind = c.kind;
        cfg.m = c.m;
        cfg.rho_tx = 0.2;
        cfg.rho_rx = 0.2;
        cfg.trials = trials;
        cfg.seed = 99;

        ScenarioResult serial, parallel;
        const double ts = run_ms(cfg, 10.0, ExecMode::Serial, serial);
        const double tp = run_ms(cfg, 10.0, ExecMode::Parallel, parallel);
        const bool same =
            serial.zf.values == parallel.zf.values && serial.mmse.values == parallel.mmse.values;
        std::printf("%dx%-6d %-8s %10lld %12.1f %12.1f %8.2fx %10s\n", c.n, c.n,
                    c.kind == ChannelKind::GaussianKronecker ? "gauss" : "nakagami", trials, ts,
                    tp, ts / tp, same ? "yes" : "NO");
        if (!same) return 1;
    }
    return 0;
}
