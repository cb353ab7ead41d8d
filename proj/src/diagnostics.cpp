#include "sgdec/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sgdec {

namespace {
constexpr double kPi = std::numbers::pi;

EnergyBreakdown energy_impl(const SpacetimeGrid& grid, const Coefficients& coeffs,
                            std::span<const double> varphi, std::span<const double> phi_x,
                            std::span<const double> phi_t_in, std::span<const double> phi_t_out,
                            double t, double a, double b) {
    EnergyBreakdown e;
    e.t = t;
    const double dx = grid.dx, dt = grid.dt;
    const double g = coeffs.g;
    const double m2_extra = coeffs.mass2 - g * g; // zero for the Schwinger models
    const double lo_clip = std::max(a, grid.x_min);
    const double hi_clip = std::min(b, grid.x_max());
    for (int i = 0; i + 1 < grid.nx; ++i) {
        const double lo = grid.x(i), hi = grid.x(i + 1);
        const double w = std::max(0.0, std::min(hi, hi_clip) - std::max(lo, lo_clip)) / dx;
        if (w > 0.0) e.gradient += w * phi_x[i] * phi_x[i] / (2.0 * dx);
    }
    for (int i = 0; i < grid.nx; ++i) {
        // vertex weight = overlap of its dual cell with the window; boundary
        // vertices carry half cells, so the closed-domain sum is trapezoidal
        const double cl = grid.x(i) - dx / 2.0, ch = grid.x(i) + dx / 2.0;
        const double w = std::max(0.0, std::min(ch, hi_clip) - std::max(cl, lo_clip)) / dx;
        if (w <= 0.0) continue;
        const double avg = phi_t_in[i] + phi_t_out[i];
        e.kinetic += w * dx * avg * avg / (8.0 * dt * dt);
        e.potential += w * dx * (coeffs.mu[i] * (1.0 - std::cos(varphi[i])) +
                                 0.5 * m2_extra * varphi[i] * varphi[i]);
        if (g != 0.0) {
            const double ef = g * varphi[i] + coeffs.F[i];
            e.field += w * dx * ef * ef / 2.0;
        }
    }
    e.total = e.gradient + e.kinetic + e.potential + e.field;
    return e;
}
} // namespace

EnergyBreakdown total_energy(const SpacetimeGrid& grid, const Coefficients& coeffs,
                             std::span<const double> varphi, std::span<const double> phi_x,
                             std::span<const double> phi_t_in, std::span<const double> phi_t_out,
                             double t) {
    return energy_impl(grid, coeffs, varphi, phi_x, phi_t_in, phi_t_out, t, grid.x_min - 1.0,
                       grid.x_max() + 1.0);
}

EnergyBreakdown windowed_energy(const SpacetimeGrid& grid, const Coefficients& coeffs,
                                std::span<const double> varphi, std::span<const double> phi_x,
                                std::span<const double> phi_t_in, std::span<const double> phi_t_out,
                                double t, double a, double b) {
    if (!(a < b)) throw std::invalid_argument("windowed_energy: empty window");
    return energy_impl(grid, coeffs, varphi, phi_x, phi_t_in, phi_t_out, t, a, b);
}

double hdec_as_printed(const SpacetimeGrid& grid, const Coefficients& coeffs,
                       std::span<const double> varphi, std::span<const double> phi_x,
                       std::span<const double> phi_t_in, std::span<const double> phi_t_out) {
    const double dx = grid.dx, dt = grid.dt;
    double h = 0.0;
    for (int i = 0; i + 1 < grid.nx; ++i) h += phi_x[i] * phi_x[i] / (2.0 * dx);
    for (int i = 0; i < grid.nx; ++i) {
        h += dx / (4.0 * dt * dt) * (phi_t_in[i] + phi_t_out[i]);
        const double ef = coeffs.g * varphi[i] + coeffs.F[i];
        h += dx * ef * ef / 2.0;
    }
    return h;
}

double face_residual_max(const SpacetimeGrid& grid, const FieldState& before, const FieldState& after) {
    double worst = 0.0;
    for (int i = 0; i + 1 < grid.nx; ++i) {
        const double r = before.phi_x[i] + after.phi_t[i + 1] - after.phi_x[i] - after.phi_t[i];
        worst = std::max(worst, std::fabs(r));
    }
    return worst;
}

Observables observables(const SpacetimeGrid& grid, const Coefficients& coeffs, const FieldState& st) {
    Observables o;
    const double g = coeffs.g;
    o.rho.resize(grid.nx - 1);
    o.J.resize(grid.nx);
    o.E.resize(grid.nx);
    for (int i = 0; i + 1 < grid.nx; ++i) o.rho[i] = -g * st.phi_x[i] / grid.dx;
    for (int i = 0; i < grid.nx; ++i) {
        o.J[i] = g * st.phi_t[i] / grid.dt;
        o.E[i] = g * st.varphi[i] + coeffs.F[i];
    }
    o.Q = -g * (st.varphi[grid.nx - 1] - st.varphi[0]);
    return o;
}

std::vector<KinkSighting> locate_kinks(const SpacetimeGrid& grid, std::span<const double> varphi,
                                       double merge_radius) {
    struct Crossing {
        double x;
        int pol;
    };
    std::vector<Crossing> crossings;
    for (int i = 0; i + 1 < grid.nx; ++i) {
        const double a = varphi[i], b = varphi[i + 1];
        if (a == b) continue;
        const double lo = std::min(a, b), hi = std::max(a, b);
        // odd multiples (2m+1)*pi strictly inside (lo, hi)
        const int mlo = static_cast<int>(std::ceil((lo / kPi - 1.0) / 2.0));
        const int mhi = static_cast<int>(std::floor((hi / kPi - 1.0) / 2.0));
        for (int m = mlo; m <= mhi; ++m) {
            const double level = (2.0 * m + 1.0) * kPi;
            if (level <= lo || level >= hi) continue;
            crossings.push_back({grid.x(i) + grid.dx * (level - a) / (b - a), b > a ? +1 : -1});
        }
    }
    std::vector<KinkSighting> out;
    std::size_t k = 0;
    while (k < crossings.size()) {
        std::size_t e = k + 1;
        while (e < crossings.size() && crossings[e].x - crossings[e - 1].x < merge_radius) ++e;
        int winding = 0;
        double xsum = 0.0;
        for (std::size_t q = k; q < e; ++q) {
            winding += crossings[q].pol;
            xsum += crossings[q].x;
        }
        if (e - k == 1) {
            out.push_back({crossings[k].x, crossings[k].pol, true});
        } else if (winding != 0) {
            out.push_back({xsum / static_cast<double>(e - k), winding > 0 ? +1 : -1, false});
        }
        // net-zero clusters (breather innards) are not kinks
        k = e;
    }
    return out;
}

CollisionCounter::CollisionCounter(double x_left, double x_right, double zone)
    : xl_(x_left), xr_(x_right), zone_(zone) {}

void CollisionCounter::feed(double t, double position) {
    (void)t;
    const double p = position;
    if (have_last_) {
        const double dp = p - last_pos_;
        const double deadband = 0.02;
        const int d = dp > deadband ? 1 : (dp < -deadband ? -1 : 0);
        if (d != 0) {
            if (dir_ == 1 && d == -1 && p > xr_ - zone_ && armed_right_) {
                ++count_;
                armed_right_ = false;
            }
            if (dir_ == -1 && d == 1 && p < xl_ + zone_ && armed_left_) {
                ++count_;
                armed_left_ = false;
            }
            dir_ = d;
        }
        if (p > xr_ - zone_) {
            if (dir_ == 1) armed_right_ = true;
        } else {
            armed_right_ = true;
        }
        if (p < xl_ + zone_) {
            if (dir_ == -1) armed_left_ = true;
        } else {
            armed_left_ = true;
        }
    }
    last_pos_ = p;
    have_last_ = true;
}

int count_boundary_collisions(std::span<const TrackSample> track, const SpacetimeGrid& grid,
                              double kink_width) {
    CollisionCounter c(grid.x_min, grid.x_max(), 5.0 * kink_width);
    for (const auto& s : track) c.feed(s.t, s.position);
    return c.collisions();
}

std::vector<PeriodSample> oscillation_frequency(std::span<const double> t, std::span<const double> y) {
    std::vector<double> crossings;
    for (std::size_t k = 1; k < y.size(); ++k) {
        if (y[k - 1] < 0.0 && y[k] >= 0.0) {
            const double f = -y[k - 1] / (y[k] - y[k - 1]);
            crossings.push_back(t[k - 1] + f * (t[k] - t[k - 1]));
        }
    }
    if (crossings.size() < 3)
        throw std::invalid_argument("oscillation_frequency: need at least 3 upward zero crossings");
    std::vector<PeriodSample> out;
    out.reserve(crossings.size() - 1);
    for (std::size_t k = 0; k + 1 < crossings.size(); ++k)
        out.push_back({crossings[k], 2.0 * kPi / (crossings[k + 1] - crossings[k])});
    return out;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t k = 0; k < n; ++k) {
        sx += x[k];
        sy += y[k];
        sxx += x[k] * x[k];
        sxy += x[k] * y[k];
        syy += y[k] * y[k];
    }
    LineFit f;
    const double nn = static_cast<double>(n);
    const double den = nn * sxx - sx * sx;
    f.slope = (nn * sxy - sx * sy) / den;
    f.intercept = (sy - f.slope * sx) / nn;
    const double vary = nn * syy - sy * sy;
    f.r2 = vary > 0.0 ? (nn * sxy - sx * sy) * (nn * sxy - sx * sy) / (den * vary) : 1.0;
    return f;
}

std::optional<double> envelope_decay_exponent(std::span<const double> t, std::span<const double> y,
                                              double t_begin, double t_end, double peak_scale) {
    // envelope samples: the largest |y| in each half-overlapping window of
    // width peak_scale, deduplicated when neighbouring windows agree
    std::vector<double> pt, pa;
    double last_peak_t = -1e300;
    std::size_t k = 0;
    while (k < t.size() && t[k] < t_begin) ++k;
    while (k < t.size() && t[k] <= t_end) {
        const double w0 = t[k];
        double best = -1.0, best_t = 0.0;
        std::size_t e = k;
        while (e < t.size() && t[e] < w0 + peak_scale && t[e] <= t_end) {
            if (std::fabs(y[e]) > best) {
                best = std::fabs(y[e]);
                best_t = t[e];
            }
            ++e;
        }
        if (best > 0.0 && best_t != last_peak_t) {
            pt.push_back(std::log(best_t));
            pa.push_back(std::log(best));
            last_peak_t = best_t;
        }
        const double next = w0 + peak_scale / 2.0;
        while (k < t.size() && t[k] < next) ++k;
    }
    if (pt.size() < 4) return std::nullopt;
    const LineFit f = fit_line(pt, pa);
    if (f.slope >= -0.05) return std::nullopt; // flat or growing: not a decay law
    return f.slope;
}

} // namespace sgdec
