#ifndef SGDEC_BOUNDARY_HPP
#define SGDEC_BOUNDARY_HPP

#include <functional>
#include <variant>

namespace sgdec {

enum class Side { left, right };

/// Pins the boundary vertex: phi(boundary, t) = value(t). With hold = true the
/// vertex keeps its seeded value and `value` is ignored.
struct DirichletBc {
    std::function<double(double)> value;
    bool hold = false;
};

/// External magnetic field eta and injected side current xi:
/// d(phi)/dx = eta + xi at the left end, eta - xi at the right end. Realized as
/// a Dirichlet condition on the boundary spatial edge, which the compatibility
/// identity carries to the boundary vertex.
struct NeumannBias {
    double eta = 0.0;
    double xi = 0.0;
};

/// Magnetic drive d(phi)/dx = H(t)*sin(omega*t) at one end. H is a square
/// envelope of amplitude A with Gaussian rise/fall edges; the flat top spans
/// [3*sigma_rise, T_p - 3*sigma_fall] and H = 0 after T_p + 3*sigma_fall.
struct PulseBc {
    double A = 0.0;
    double omega = 0.0;
    double sigma_rise = 1.0;
    double sigma_fall = 1.0;
    double T_p = 0.0;
};

/// Radiative closure from the dispersion expansion of
/// phi_tt - phi_xx + U*phi = 0 around the boundary vacuum.
/// Order 0: d(phi)/dx = +-d(phi)/dt. Order 1 adds the U/2 correction and
/// linearizes about the field value the boundary holds at seeding time
/// (phi_ref), so solitonic vacua at 2*pi*n are handled. U < 0 means "derive
/// from the model": U = mass2 + mu(boundary).
struct OutgoingBc {
    int order = 1;
    double U = -1.0;
};

using BcSpec = std::variant<DirichletBc, NeumannBias, PulseBc, OutgoingBc>;

struct BoundarySpec {
    BcSpec left = NeumannBias{};
    BcSpec right = NeumannBias{};
};

double pulse_envelope(const PulseBc& p, double t);
double pulse_edge_slope(const PulseBc& p, double t); // H(t)*sin(omega*t)

/// Prescribed boundary-edge slope d(phi)/dx for a Neumann bias on a given side.
double neumann_edge_slope(const NeumannBias& b, Side side);

} // namespace sgdec

#endif
