#include "sgdec/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sgdec::analytic {

namespace {
double lorentz_width(double u) {
    if (!(std::fabs(u) < 1.0)) throw std::invalid_argument("analytic: |u| must be < 1");
    return std::sqrt(1.0 - u * u);
}
} // namespace

double kink(double x, double t, const Kink& k) {
    const double w = lorentz_width(k.u);
    return k.polarity * 4.0 * std::atan(std::exp((x - k.x0 - k.u * t) / w)) +
           2.0 * std::numbers::pi * k.n;
}

double kink_dt(double x, double t, const Kink& k) {
    const double w = lorentz_width(k.u);
    const double s = (x - k.x0 - k.u * t) / w;
    // d/dt 4*atan(e^s) = 4 e^s/(1+e^2s) * ds/dt = (2/cosh(s)) * (-u/w)
    return k.polarity * 2.0 / std::cosh(s) * (-k.u / w);
}

double kink_antikink(double x, double t, const KinkAntikink& p) {
    if (p.u == 0.0) throw std::invalid_argument("kink_antikink: u must be nonzero");
    const double w = lorentz_width(p.u);
    // atan2 keeps phi continuous in x at fixed t; for u > 0 the denominator is
    // positive and this reduces to the principal branch.
    const double num = std::sinh((p.u * t - p.d / 2.0) / w);
    const double den = p.u * std::cosh((x - p.x0) / w);
    return -4.0 * std::atan2(num, den);
}

double breather(double x, double t, const Breather& b) {
    if (!(b.nu > 0.0) || !(b.nu < std::numbers::pi / 2.0))
        throw std::invalid_argument("breather: nu must lie in (0, pi/2)");
    double xr = x, tr = t;
    if (b.u != 0.0) {
        const double gamma = 1.0 / lorentz_width(b.u);
        xr = gamma * (x - b.u * t);
        tr = gamma * (t - b.u * x);
    }
    const double num = std::tan(b.nu) * std::sin(std::cos(b.nu) * (tr - b.t0));
    const double den = std::cosh(std::sin(b.nu) * (xr - b.x0));
    return 4.0 * std::atan(num / den);
}

double kink_energy(double u) { return 8.0 / lorentz_width(u); }

} // namespace sgdec::analytic
