#include "sgdec/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sgdec {

double PhysicsModel::mu(double x) const {
    double m = mu0;
    for (const auto& c : constrictions) {
        const double r = std::fabs(x - c.center);
        if (r < c.length / 2.0) {
            m = std::max(m, c.mu_cs);
        } else if (r < c.length / 2.0 + c.taper) {
            const double f = (r - c.length / 2.0) / c.taper;
            m = std::max(m, c.mu_cs + (mu0 - c.mu_cs) * f);
        }
    }
    return m;
}

double PhysicsModel::F(double x) const {
    auto step = [](double s) { return s > 0.0 ? 1.0 : (s < 0.0 ? 0.0 : 0.5); };
    switch (source) {
    case SourceKind::capacitor:
        return source_Q * (step(x + source_Lc / 2.0) - step(x - source_Lc / 2.0));
    case SourceKind::point_charge:
        return -source_Q * step(x - source_xc);
    default:
        return 0.0;
    }
}

Coefficients evaluate_coefficients(const PhysicsModel& model, const SpacetimeGrid& grid) {
    Coefficients c;
    c.alpha = model.alpha;
    c.mass2 = model.mass2;
    c.g = model.g;
    c.mu.resize(grid.nx);
    c.F.resize(grid.nx);
    c.src.resize(grid.nx);
    for (int i = 0; i < grid.nx; ++i) {
        const double x = grid.x(i);
        c.mu[i] = model.mu(x);
        c.F[i] = model.F(x);
        switch (model.source) {
        case SourceKind::none: c.src[i] = 0.0; break;
        case SourceKind::bias: c.src[i] = -model.beta; break;
        default: c.src[i] = -model.g * c.F[i]; break;
        }
    }
    for (const auto& s : model.microshorts) {
        if (!grid.contains(s.x_s))
            throw std::invalid_argument("evaluate_coefficients: microshort at x=" + std::to_string(s.x_s) +
                                        " lies outside the domain");
        c.mu[grid.nearest_vertex(s.x_s)] += s.mu_s / grid.dx;
    }
    return c;
}

SchwingerScaling normalize_schwinger(double kappa, double g_physical) {
    if (!(kappa > 0.0)) throw std::invalid_argument("normalize_schwinger: kappa must be positive");
    SchwingerScaling s;
    s.lambda = std::sqrt(2.0 * std::numbers::pi * kappa);
    s.field_scale = 2.0 * std::sqrt(std::numbers::pi);
    s.g_normalized = g_physical / s.lambda;
    return s;
}

double denormalize_schwinger_g(const SchwingerScaling& s) { return s.g_normalized * s.lambda; }

} // namespace sgdec
