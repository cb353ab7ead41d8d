// Benchmark: OpenMP stepper kernel against the serial path on identical
// inputs. The interior update is an independent per-vertex map, so the two
// must agree bitwise; this tool verifies that and reports the speedup.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sgdec/analytic.hpp"
#include "sgdec/model.hpp"
#include "sgdec/stepper.hpp"

using namespace sgdec;

namespace {

double run_case(int nx_scale, bool parallel, std::int64_t nsteps, std::vector<double>& out_phi) {
    SpacetimeGrid grid = build_grid(100.0 * nx_scale, 0.05, 0.04, -50.0 * nx_scale);
    PhysicsModel model;
    Coefficients coeffs = evaluate_coefficients(model, grid);
    InitialCondition ic = analytic::Kink{0.0, 0.55, 0, +1};
    Stepper stepper(grid, coeffs, BoundarySpec{}, seed_initial_layer(ic, grid, coeffs));
    stepper.set_parallel(parallel);
    const auto t0 = std::chrono::steady_clock::now();
    stepper.advance(nsteps);
    const auto t1 = std::chrono::steady_clock::now();
    out_phi = stepper.state().varphi;
    return std::chrono::duration<double>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    const int scale = argc > 1 ? std::atoi(argv[1]) : 8;
    const std::int64_t nsteps = argc > 2 ? std::atoll(argv[2]) : 2000;
#ifdef _OPENMP
    std::printf("OpenMP: %d threads\n", omp_get_max_threads());
#else
    std::printf("OpenMP: not enabled\n");
#endif
    std::vector<double> serial_phi, parallel_phi;
    const double ts = run_case(scale, false, nsteps, serial_phi);
    const double tp = run_case(scale, true, nsteps, parallel_phi);
    const bool identical =
        serial_phi.size() == parallel_phi.size() &&
        std::memcmp(serial_phi.data(), parallel_phi.data(), serial_phi.size() * sizeof(double)) == 0;
    const double updates = static_cast<double>(serial_phi.size()) * static_cast<double>(nsteps);
    std::printf("grid %zu vertices, %lld steps\n", serial_phi.size(), static_cast<long long>(nsteps));
    std::printf("serial   %8.3f s  (%.1f Mupd/s)\n", ts, updates / ts / 1e6);
    std::printf("parallel %8.3f s  (%.1f Mupd/s)  speedup %.2fx\n", tp, updates / tp / 1e6, ts / tp);
    std::printf("bitwise identical: %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
