#ifndef SGDEC_DIAGNOSTICS_HPP
#define SGDEC_DIAGNOSTICS_HPP

#include <optional>
#include <span>
#include <vector>

#include "sgdec/grid.hpp"
#include "sgdec/model.hpp"
#include "sgdec/state.hpp"

namespace sgdec {

struct EnergyBreakdown {
    double t = 0.0;
    double gradient = 0.0;  // sum phi_x^2/(2 dx)
    double kinetic = 0.0;   // sum dx*(phi_t_in + phi_t_out)^2/(8 dt^2)
    double potential = 0.0; // sum dx*[mu*(1 - cos phi) + (mass2 - g^2)/2 * phi^2]
    double field = 0.0;     // sum dx*(g*phi + F)^2/2 (only when g != 0)
    double total = 0.0;
};

/// Discrete Hamiltonian at the slice carried by `varphi`/`phi_x`, with the
/// kinetic term built from the temporal edges entering (`phi_t_in`) and
/// leaving (`phi_t_out`) the slice. Restricting to [a, b] weights the spatial
/// edges by their overlap with the window.
EnergyBreakdown total_energy(const SpacetimeGrid& grid, const Coefficients& coeffs,
                             std::span<const double> varphi, std::span<const double> phi_x,
                             std::span<const double> phi_t_in, std::span<const double> phi_t_out,
                             double t);
EnergyBreakdown windowed_energy(const SpacetimeGrid& grid, const Coefficients& coeffs,
                                std::span<const double> varphi, std::span<const double> phi_x,
                                std::span<const double> phi_t_in, std::span<const double> phi_t_out,
                                double t, double a, double b);

/// Verbatim transcription of the reference Hamiltonian as printed, with the
/// dx/(4 dt^2) prefactor and the unsquared edge average. Kept for comparison;
/// it is dimensionally inconsistent and not conserved.
double hdec_as_printed(const SpacetimeGrid& grid, const Coefficients& coeffs,
                       std::span<const double> varphi, std::span<const double> phi_x,
                       std::span<const double> phi_t_in, std::span<const double> phi_t_out);

/// Max |oriented edge sum| over the faces between two consecutive layers.
double face_residual_max(const SpacetimeGrid& grid, const FieldState& before, const FieldState& after);

struct Observables {
    std::vector<double> rho; // -g*phi_x/dx at spatial edges
    std::vector<double> J;   // g*phi_t/dt at vertices
    std::vector<double> E;   // g*phi + F at vertices
    double Q = 0.0;          // -g*(phi(x_max) - phi(x_min))
};
Observables observables(const SpacetimeGrid& grid, const Coefficients& coeffs, const FieldState& st);

struct KinkSighting {
    double position = 0.0;
    int polarity = 0;   // +1 kink, -1 antikink
    bool resolved = true; // false when crossings overlap within the merge radius
};

/// Locates kink centers as sub-cell crossings of phi through odd multiples of
/// pi. Crossings closer than merge_radius are clustered; a cluster reports a
/// kink only when its net winding is a single crossing, otherwise it is
/// flagged unresolved (collision in progress) or dropped (breather).
std::vector<KinkSighting> locate_kinks(const SpacetimeGrid& grid, std::span<const double> varphi,
                                       double merge_radius = 2.0);

struct TrackSample {
    double t;
    double position;
    int polarity;
};

/// Streaming single-soliton tracker + boundary collision counter. Feed the
/// dominant kink sighting once per sampling interval; collisions are velocity
/// sign reversals within `zone` of a boundary, debounced so one bounce counts
/// once (the tracker must leave the zone before re-arming).
class CollisionCounter {
public:
    CollisionCounter(double x_left, double x_right, double zone);
    void feed(double t, double position);
    int collisions() const { return count_; }

private:
    double xl_, xr_, zone_;
    int count_ = 0;
    double last_pos_ = 0.0;
    bool have_last_ = false;
    int dir_ = 0;
    bool armed_left_ = false, armed_right_ = false;
};

/// Boundary-collision count for a complete track history (convenience wrapper
/// around CollisionCounter).
int count_boundary_collisions(std::span<const TrackSample> track, const SpacetimeGrid& grid,
                              double kink_width);

/// Per-period angular frequencies from successive upward zero crossings with
/// sub-sample linear interpolation. Returns (t_of_period_start, 2*pi/period).
struct PeriodSample {
    double t;
    double omega;
};
std::vector<PeriodSample> oscillation_frequency(std::span<const double> t, std::span<const double> y);

/// Log-log slope of envelope peak amplitudes vs time over [t_begin, t_end].
/// Peaks are beat maxima: the largest |y| within a sliding window of
/// peak_scale time units, kept when the maximum falls in the window core.
/// Returns nullopt when the envelope is not meaningfully decaying (fitted
/// exponent above -0.05) or too few peaks exist.
std::optional<double> envelope_decay_exponent(std::span<const double> t, std::span<const double> y,
                                              double t_begin, double t_end, double peak_scale);

/// Least-squares line fit; returns (slope, intercept, r_squared).
struct LineFit {
    double slope = 0.0, intercept = 0.0, r2 = 0.0;
};
LineFit fit_line(std::span<const double> x, std::span<const double> y);

} // namespace sgdec

#endif
