#ifndef SGDEC_SIMULATE_HPP
#define SGDEC_SIMULATE_HPP

#include <string>
#include <vector>

#include "sgdec/config.hpp"
#include "sgdec/diagnostics.hpp"
#include "sgdec/output.hpp"
#include "sgdec/reference.hpp"
#include "sgdec/state.hpp"
#include "sgdec/stepper.hpp"

namespace sgdec {

enum class Method { dec, euler, crank_nicolson };

struct RunOptions {
    Method method = Method::dec;
    bool parallel = true;
    bool audit = false;       // per-step face-residual audit (dec only)
    bool write_outputs = true; // honor config.output when dir is set
};

struct RunResult {
    std::vector<Series> probes;
    std::vector<TrackSample> track; // dominant-kink track when requested
    double worst_face_residual = 0.0;
    std::int64_t steps = 0;
    double wall_seconds = 0.0;
    FieldState final_state;              // dec
    SecondOrderState final_state_second; // euler / cn
    Coefficients coeffs;
};

/// Runs one simulation to config.T (rounded down to a whole number of steps,
/// with a warning to stderr when T is not a multiple of dt). Memory stays
/// O(nx); snapshots stream to disk per the output plan. Probe series are
/// collected in memory and also written as CSV when outputs are enabled.
RunResult run_simulation(const SimulationConfig& cfg, const RunOptions& opts = {});

/// Runtime table row for the method comparison.
struct ProfileRow {
    double dx = 0.0, dt = 0.0;
    std::int64_t nx = 0, nsteps = 0;
    double seconds_dec = 0.0, seconds_euler = 0.0, seconds_cn = 0.0; // cn < 0 when skipped
};

/// Times the integrators on the given config at several resolutions (dt/dx
/// kept fixed). Runs single-threaded so the scaling stays clean.
std::vector<ProfileRow> profile_runtimes(const SimulationConfig& base, const std::vector<double>& dxs,
                                         double T, bool include_cn = false);

} // namespace sgdec

#endif
