#include "sgdec/reference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sgdec {

namespace {
constexpr int kParallelThreshold = 1500;

std::vector<double> sample_layer(const InitialCondition& ic, const SpacetimeGrid& grid,
                                 const Coefficients& coeffs, double t, bool second_layer) {
    FieldState seed = seed_initial_layer(ic, grid, coeffs, t);
    std::vector<double> out = seed.varphi;
    if (second_layer) {
        const std::vector<double> fwd = leading_temporal_edge(ic, grid, coeffs, t);
        for (int i = 0; i < grid.nx; ++i) out[i] += fwd[i];
    }
    return out;
}
} // namespace

EulerStepper::EulerStepper(const SpacetimeGrid& grid, Coefficients coeffs, const BoundarySpec& bc,
                           const InitialCondition& ic, double t0)
    : grid_(grid), coeffs_(std::move(coeffs)) {
    st_.j = 1; // varphi_curr sits at t0 + dt
    st_.t0 = t0;
    st_.varphi_prev = sample_layer(ic, grid, coeffs_, t0, false);
    st_.varphi_curr = sample_layer(ic, grid, coeffs_, t0, true);
    next_.assign(grid.nx, 0.0);
    linear_ = true;
    for (double m : coeffs_.mu)
        if (m != 0.0) linear_ = false;
    left_.spec = bc.left;
    right_.spec = bc.right;
    auto resolve = [&](BcRuntime& rt, int ivert) {
        rt.phi_ref = st_.varphi_prev[ivert];
        if (const auto* o = std::get_if<OutgoingBc>(&rt.spec))
            rt.U = o->U >= 0.0 ? o->U : coeffs_.mass2 + coeffs_.mu[ivert];
    };
    resolve(left_, 0);
    resolve(right_, grid.nx - 1);
}

void EulerStepper::apply_boundary(std::vector<double>& next, const BcRuntime& rt, Side side,
                                  double t_next) {
    const int n = grid_.nx;
    const int b = side == Side::left ? 0 : n - 1;
    const int in = side == Side::left ? 1 : n - 2;
    const double dt = grid_.dt, dx = grid_.dx;
    const auto& cur = st_.varphi_curr;
    const auto& prev = st_.varphi_prev;

    std::visit(
        [&](const auto& spec) {
            using T = std::decay_t<decltype(spec)>;
            if constexpr (std::is_same_v<T, DirichletBc>) {
                next[b] = spec.hold ? cur[b] : spec.value(t_next);
            } else if constexpr (std::is_same_v<T, NeumannBias> || std::is_same_v<T, PulseBc>) {
                double slope;
                if constexpr (std::is_same_v<T, NeumannBias>)
                    slope = neumann_edge_slope(spec, side);
                else
                    slope = pulse_edge_slope(spec, t_next);
                next[b] = side == Side::left ? next[in] - dx * slope : next[in] + dx * slope;
            } else if constexpr (std::is_same_v<T, OutgoingBc>) {
                // boundary spatial difference taken toward the interior
                const double dcur = side == Side::left ? cur[1] - cur[0] : cur[n - 1] - cur[n - 2];
                const double sgn = side == Side::left ? 1.0 : -1.0;
                if (spec.order == 0) {
                    next[b] = cur[b] + sgn * (dt / dx) * dcur;
                } else {
                    const double dprev = side == Side::left ? prev[1] - prev[0] : prev[n - 1] - prev[n - 2];
                    next[b] = cur[b] + (cur[b] - prev[b]) + sgn * (dt / dx) * (dcur - dprev) -
                              0.5 * dt * dt * rt.U * (cur[b] - rt.phi_ref);
                }
            }
        },
        rt.spec);
}

void EulerStepper::step() {
    const int n = grid_.nx;
    const double dt = grid_.dt, dx = grid_.dx;
    const double dt2 = dt * dt;
    const double inv_dx2 = 1.0 / (dx * dx);
    const double denom = 1.0 + coeffs_.alpha * dt / 2.0;
    const double cm = 1.0 - coeffs_.alpha * dt / 2.0;
    const double t_next = time() + dt;

    const double* cur = st_.varphi_curr.data();
    const double* prev = st_.varphi_prev.data();
    double* next = next_.data();
    const double* mu = coeffs_.mu.data();
    const double* src = coeffs_.src.data();
    const double m2 = coeffs_.mass2;
    const bool par = parallel_ && n >= kParallelThreshold;

    const auto body_full = [&](int i) {
        const double lap = (cur[i + 1] - 2.0 * cur[i] + cur[i - 1]) * inv_dx2;
        next[i] = (2.0 * cur[i] - cm * prev[i] +
                   dt2 * (lap - m2 * cur[i] - mu[i] * std::sin(cur[i]) + src[i])) /
                  denom;
        return next[i];
    };
    const auto body_linear = [&](int i) {
        const double lap = (cur[i + 1] - 2.0 * cur[i] + cur[i - 1]) * inv_dx2;
        next[i] = (2.0 * cur[i] - cm * prev[i] + dt2 * (lap - m2 * cur[i] + src[i])) / denom;
        return next[i];
    };
    double acc = 0.0;
    if (par) {
        if (linear_) {
#pragma omp parallel for schedule(static) reduction(+ : acc)
            for (int i = 1; i < n - 1; ++i) acc += body_linear(i);
        } else {
#pragma omp parallel for schedule(static) reduction(+ : acc)
            for (int i = 1; i < n - 1; ++i) acc += body_full(i);
        }
    } else if (linear_) {
        for (int i = 1; i < n - 1; ++i) acc += body_linear(i);
    } else {
        for (int i = 1; i < n - 1; ++i) acc += body_full(i);
    }
    if (!std::isfinite(acc))
        throw BlowupError(st_.j + 1, "non-finite field at step " + std::to_string(st_.j + 1));

    apply_boundary(next_, left_, Side::left, t_next);
    apply_boundary(next_, right_, Side::right, t_next);

    st_.varphi_prev.swap(st_.varphi_curr);
    st_.varphi_curr.swap(next_);
    st_.j += 1;
}

void EulerStepper::advance(std::int64_t nsteps) {
    for (std::int64_t k = 0; k < nsteps; ++k) step();
}

EnergyBreakdown EulerStepper::energy_backward(const Coefficients& coeffs) const {
    const int n = grid_.nx;
    EnergyBreakdown e;
    e.t = time();
    const double dx = grid_.dx, dt = grid_.dt;
    const double g = coeffs.g;
    const double m2_extra = coeffs.mass2 - g * g;
    for (int i = 0; i + 1 < n; ++i) {
        const double d = st_.varphi_curr[i + 1] - st_.varphi_curr[i];
        e.gradient += d * d / (2.0 * dx);
    }
    for (int i = 0; i < n; ++i) {
        const double v = (st_.varphi_curr[i] - st_.varphi_prev[i]) / dt;
        e.kinetic += dx * v * v / 2.0;
        e.potential += dx * (coeffs.mu[i] * (1.0 - std::cos(st_.varphi_curr[i])) +
                             0.5 * m2_extra * st_.varphi_curr[i] * st_.varphi_curr[i]);
        if (g != 0.0) {
            const double ef = g * st_.varphi_curr[i] + coeffs.F[i];
            e.field += dx * ef * ef / 2.0;
        }
    }
    e.total = e.gradient + e.kinetic + e.potential + e.field;
    return e;
}

void thomas_solve(std::vector<double>& lower, std::vector<double>& diag, std::vector<double>& upper,
                  std::vector<double>& rhs, std::vector<double>& out) {
    const std::size_t n = diag.size();
    out.resize(n);
    static thread_local std::vector<double> cw, dw;
    cw.resize(n);
    dw.resize(n);
    cw[0] = upper[0] / diag[0];
    dw[0] = rhs[0] / diag[0];
    for (std::size_t i = 1; i < n; ++i) {
        const double m = diag[i] - lower[i] * cw[i - 1];
        cw[i] = upper[i] / m;
        dw[i] = (rhs[i] - lower[i] * dw[i - 1]) / m;
    }
    out[n - 1] = dw[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) out[i] = dw[i] - cw[i] * out[i + 1];
}

CrankNicolson::CrankNicolson(const SpacetimeGrid& grid, Coefficients coeffs, const BoundarySpec& bc,
                             const InitialCondition& ic, double t0)
    : grid_(grid), coeffs_(std::move(coeffs)) {
    for (double m : coeffs_.mu)
        if (m != 0.0)
            throw std::invalid_argument("CrankNicolson: only the linear massless model (mu == 0) is supported");
    st_.t0 = t0;
    st_.j = 1;
    st_.varphi_prev = sample_layer(ic, grid, coeffs_, t0, false);
    st_.varphi_curr = sample_layer(ic, grid, coeffs_, t0, true);
    prev2_.assign(grid.nx, 0.0);

    const int n = grid.nx;
    const double inv_dt2 = 1.0 / (grid.dt * grid.dt);
    const double inv_dx2 = 1.0 / (grid.dx * grid.dx);
    const double m2 = coeffs_.mass2;
    lower_.assign(n, -0.5 * inv_dx2);
    upper_.assign(n, -0.5 * inv_dx2);
    diag_.assign(n, inv_dt2 + 0.5 * (m2 + 2.0 * inv_dx2));
    rhs_.assign(n, 0.0);

    auto fold = [&](Side side) {
        const int b = side == Side::left ? 0 : n - 1;
        const auto& spec = side == Side::left ? bc.left : bc.right;
        if (const auto* d = std::get_if<DirichletBc>(&spec)) {
            (side == Side::left ? dirichlet_left_ : dirichlet_right_) = true;
            const double held = st_.varphi_prev[b];
            auto fn = d->hold ? std::function<double(double)>([held](double) { return held; }) : d->value;
            (side == Side::left ? dirichlet_left_value_ : dirichlet_right_value_) = std::move(fn);
            lower_[b] = 0.0;
            upper_[b] = 0.0;
            diag_[b] = 1.0;
        } else if (const auto* nb = std::get_if<NeumannBias>(&spec)) {
            // ghost mirror: lap(b) = 2*(phi(in) - phi(b))/dx^2 -+ 2*slope/dx
            (side == Side::left ? bc_slope_left_ : bc_slope_right_) = neumann_edge_slope(*nb, side);
            diag_[b] = inv_dt2 + 0.5 * (m2 + 2.0 * inv_dx2);
            (side == Side::left ? upper_[b] : lower_[b]) = -inv_dx2;
        } else {
            throw std::invalid_argument("CrankNicolson: boundary must be Dirichlet or Neumann");
        }
    };
    fold(Side::left);
    fold(Side::right);
}

void CrankNicolson::step() {
    const int n = grid_.nx;
    const double dt = grid_.dt, dx = grid_.dx;
    const double inv_dt2 = 1.0 / (dt * dt);
    const double inv_dx2 = 1.0 / (dx * dx);
    const double m2 = coeffs_.mass2;
    const auto& cur = st_.varphi_curr;
    const auto& prev = st_.varphi_prev;

    for (int i = 1; i < n - 1; ++i) {
        const double lap_prev = (prev[i + 1] - 2.0 * prev[i] + prev[i - 1]) * inv_dx2;
        rhs_[i] = (2.0 * cur[i] - prev[i]) * inv_dt2 + 0.5 * (lap_prev - m2 * prev[i]) + coeffs_.src[i];
    }
    const double t_next = time() + dt;
    if (dirichlet_left_) {
        rhs_[0] = dirichlet_left_value_(t_next);
    } else {
        const double lap_prev = 2.0 * (prev[1] - prev[0]) * inv_dx2 - 2.0 * bc_slope_left_ / dx;
        rhs_[0] = (2.0 * cur[0] - prev[0]) * inv_dt2 + 0.5 * (lap_prev - m2 * prev[0]) + coeffs_.src[0] -
                  bc_slope_left_ / dx;
    }
    if (dirichlet_right_) {
        rhs_[n - 1] = dirichlet_right_value_(t_next);
    } else {
        const double lap_prev = 2.0 * (prev[n - 2] - prev[n - 1]) * inv_dx2 + 2.0 * bc_slope_right_ / dx;
        rhs_[n - 1] = (2.0 * cur[n - 1] - prev[n - 1]) * inv_dt2 + 0.5 * (lap_prev - m2 * prev[n - 1]) +
                      coeffs_.src[n - 1] + bc_slope_right_ / dx;
    }

    static thread_local std::vector<double> next;
    thomas_solve(lower_, diag_, upper_, rhs_, next);

    prev2_ = st_.varphi_prev;
    st_.varphi_prev = st_.varphi_curr;
    st_.varphi_curr = next;
    st_.j += 1;
}

void CrankNicolson::advance(std::int64_t nsteps) {
    for (std::int64_t k = 0; k < nsteps; ++k) step();
}

EnergyBreakdown CrankNicolson::energy_centered(const Coefficients& coeffs) const {
    const int n = grid_.nx;
    EnergyBreakdown e;
    e.t = time() - grid_.dt;
    const double dx = grid_.dx, dt = grid_.dt;
    const double g = coeffs.g;
    const auto& mid = st_.varphi_prev;
    for (int i = 0; i + 1 < n; ++i) {
        const double d = mid[i + 1] - mid[i];
        e.gradient += d * d / (2.0 * dx);
    }
    for (int i = 0; i < n; ++i) {
        const double v = (st_.varphi_curr[i] - prev2_[i]) / (2.0 * dt);
        e.kinetic += dx * v * v / 2.0;
        if (g != 0.0) {
            const double ef = g * mid[i] + coeffs.F[i];
            e.field += dx * ef * ef / 2.0;
        }
        e.potential += dx * 0.5 * (coeffs.mass2 - g * g) * mid[i] * mid[i];
    }
    e.total = e.gradient + e.kinetic + e.potential + e.field;
    return e;
}

} // namespace sgdec
