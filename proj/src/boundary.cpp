#include "sgdec/boundary.hpp"

#include <cmath>
#include <stdexcept>

namespace sgdec {

double pulse_envelope(const PulseBc& p, double t) {
    if (!(p.sigma_rise > 0.0) || !(p.sigma_fall > 0.0))
        throw std::invalid_argument("pulse_envelope: sigma must be positive");
    const double t_r = 3.0 * p.sigma_rise;
    const double t_f = 3.0 * p.sigma_fall;
    if (t > p.T_p + t_f) return 0.0;
    if (t < t_r) {
        const double d = t - t_r;
        return p.A * std::exp(-d * d / (2.0 * p.sigma_rise * p.sigma_rise));
    }
    if (t <= p.T_p - t_f) return p.A;
    const double d = t - (p.T_p - t_f);
    return p.A * std::exp(-d * d / (2.0 * p.sigma_fall * p.sigma_fall));
}

double pulse_edge_slope(const PulseBc& p, double t) {
    return pulse_envelope(p, t) * std::sin(p.omega * t);
}

double neumann_edge_slope(const NeumannBias& b, Side side) {
    return side == Side::left ? b.eta + b.xi : b.eta - b.xi;
}

} // namespace sgdec
