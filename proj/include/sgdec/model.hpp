#ifndef SGDEC_MODEL_HPP
#define SGDEC_MODEL_HPP

#include <vector>

#include "sgdec/grid.hpp"

namespace sgdec {

/// Delta-function enhancement of the critical current at x_s. Discretized as a
/// unit-area spike mu_s/dx at the nearest vertex, so the energy contribution
/// mu_s*(1 - cos(phi(x_s))) is preserved under refinement.
struct Microshort {
    double x_s = 0.0;
    double mu_s = 0.0;
};

/// Region of enhanced critical current mu_cs over |x - center| < length/2 with
/// linear tapers of width `taper` down to the bulk value on both sides.
struct Constriction {
    double center = 0.0;
    double length = 0.0;
    double taper = 0.0;
    double mu_cs = 1.0;
};

enum class SourceKind {
    none,
    bias,         // s(x,t) = -beta, uniform external current
    capacitor,    // F(x) = Q*[Theta(x + Lc/2) - Theta(x - Lc/2)], s = -g*F
    point_charge, // F(x) = -Q*Theta(x - x_c) (F -> 0 as x -> -inf), s = -g*F
};

/// Coefficients of the generalized equation of motion
///   phi_tt - phi_xx + alpha*phi_t + mass2*phi + mu(x)*sin(phi) = s(x,t),
/// which specializes to the perturbed sine-Gordon equation (mass2 = 0,
/// s = -beta), the massless bosonized Schwinger model (mu = 0, mass2 = g^2),
/// and the normalized massive model (mu = 1, mass2 = g^2).
struct PhysicsModel {
    double alpha = 0.0; // resistive loss
    double mass2 = 0.0; // dynamical mass-gap coefficient (g^2 for Schwinger models)
    double g = 0.0;     // coupling, kept separate so observables never take sqrt(mass2)
    double mu0 = 1.0;   // bulk critical current (0 for the massless model)
    std::vector<Constriction> constrictions;
    std::vector<Microshort> microshorts;

    SourceKind source = SourceKind::none;
    double beta = 0.0;      // bias amplitude
    double source_Q = 0.0;  // capacitor plate charge / fixed point charge
    double source_Lc = 0.0; // capacitor plate separation
    double source_xc = 0.0; // point-charge location

    /// Critical-current profile without the microshort spikes.
    double mu(double x) const;
    /// Background field F(x); step discontinuities take the midpoint value.
    double F(double x) const;
};

/// Per-vertex samples of the model on a grid; the stepper's kernel inputs.
struct Coefficients {
    double alpha = 0.0;
    double mass2 = 0.0;
    double g = 0.0;
    std::vector<double> mu;  // nx, includes microshort spikes mu_s/dx
    std::vector<double> F;   // nx, background field (all zero when unused)
    std::vector<double> src; // nx, static source term s(x)
};

/// Samples mu, F and the static source at the vertices. Microshorts become
/// nearest-vertex spikes of height mu_s/dx. Throws if a microshort lies
/// outside the domain.
Coefficients evaluate_coefficients(const PhysicsModel& model, const SpacetimeGrid& grid);

/// Variable rescaling for the massive Schwinger model: with lambda =
/// sqrt(2*pi*kappa), the normalized field is 2*sqrt(pi) times the physical
/// one, normalized (x,t) are lambda times physical, and g divides by lambda.
struct SchwingerScaling {
    double lambda;       // space-time scale
    double field_scale;  // 2*sqrt(pi)
    double g_normalized; // g_physical / lambda
};
SchwingerScaling normalize_schwinger(double kappa, double g_physical);
double denormalize_schwinger_g(const SchwingerScaling& s);

} // namespace sgdec

#endif
