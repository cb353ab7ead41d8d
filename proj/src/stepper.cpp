#include "sgdec/stepper.hpp"

#include <cmath>

namespace sgdec {

namespace {

// Below this many vertices the parallel-for overhead dominates; results are
// bitwise identical either way, so this is purely a scheduling choice.
constexpr int kParallelThreshold = 1500;

double sample_ic(const InitialCondition& ic, double x, double t) {
    return std::visit(
        [&](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ZeroIc>) {
                return 0.0;
            } else if constexpr (std::is_same_v<T, analytic::Kink>) {
                return analytic::kink(x, t, v);
            } else if constexpr (std::is_same_v<T, analytic::KinkAntikink>) {
                return analytic::kink_antikink(x, t, v);
            } else if constexpr (std::is_same_v<T, analytic::Breather>) {
                return analytic::breather(x, t, v);
            } else {
                return v.phi0 ? v.phi0(x) : 0.0;
            }
        },
        ic);
}

} // namespace

FieldState seed_initial_layer(const InitialCondition& ic, const SpacetimeGrid& grid,
                              const Coefficients& coeffs, double t0) {
    FieldState st;
    st.j = 0;
    st.t0 = t0;
    st.varphi.resize(grid.nx);
    st.phi_x.resize(grid.nx - 1);
    st.phi_t.resize(grid.nx);

    for (int i = 0; i < grid.nx; ++i) st.varphi[i] = sample_ic(ic, grid.x(i), t0);

    // phi_t holds the edge entering the seeded layer, phi(t0) - phi(t0 - dt);
    // seeding the trailing edge (rather than the leading one) keeps the
    // two-layer recurrence second-order from the first step
    if (const auto* c = std::get_if<CustomIc>(&ic)) {
        // backward Taylor; phi0'' by central differences (dropped at the two
        // boundary vertices, where the boundary condition takes over anyway)
        const double dt = grid.dt, dx = grid.dx;
        for (int i = 0; i < grid.nx; ++i) {
            double lap = 0.0;
            if (i > 0 && i < grid.nx - 1)
                lap = (st.varphi[i + 1] - 2.0 * st.varphi[i] + st.varphi[i - 1]) / (dx * dx);
            const double v0 = c->v0 ? c->v0(grid.x(i)) : 0.0;
            const double acc = lap - coeffs.alpha * v0 - coeffs.mass2 * st.varphi[i] -
                               coeffs.mu[i] * std::sin(st.varphi[i]) + coeffs.src[i];
            st.phi_t[i] = dt * v0 - 0.5 * dt * dt * acc;
        }
    } else {
        for (int i = 0; i < grid.nx; ++i)
            st.phi_t[i] = st.varphi[i] - sample_ic(ic, grid.x(i), t0 - grid.dt);
    }
    for (int i = 0; i + 1 < grid.nx; ++i) st.phi_x[i] = st.varphi[i + 1] - st.varphi[i];
    return st;
}

std::vector<double> leading_temporal_edge(const InitialCondition& ic, const SpacetimeGrid& grid,
                                          const Coefficients& coeffs, double t0) {
    std::vector<double> out(grid.nx);
    if (const auto* c = std::get_if<CustomIc>(&ic)) {
        const double dt = grid.dt, dx = grid.dx;
        std::vector<double> phi0(grid.nx);
        for (int i = 0; i < grid.nx; ++i) phi0[i] = c->phi0 ? c->phi0(grid.x(i)) : 0.0;
        for (int i = 0; i < grid.nx; ++i) {
            double lap = 0.0;
            if (i > 0 && i < grid.nx - 1) lap = (phi0[i + 1] - 2.0 * phi0[i] + phi0[i - 1]) / (dx * dx);
            const double v0 = c->v0 ? c->v0(grid.x(i)) : 0.0;
            const double acc = lap - coeffs.alpha * v0 - coeffs.mass2 * phi0[i] -
                               coeffs.mu[i] * std::sin(phi0[i]) + coeffs.src[i];
            out[i] = dt * v0 + 0.5 * dt * dt * acc;
        }
    } else {
        for (int i = 0; i < grid.nx; ++i)
            out[i] = sample_ic(ic, grid.x(i), t0 + grid.dt) - sample_ic(ic, grid.x(i), t0);
    }
    return out;
}

Stepper::Stepper(const SpacetimeGrid& grid, Coefficients coeffs, const BoundarySpec& bc, FieldState initial)
    : grid_(grid), coeffs_(std::move(coeffs)), st_(std::move(initial)) {
    phi_t_new_.assign(grid_.nx, 0.0);
    phi_t_old_ = st_.phi_t;
    linear_ = true;
    for (double m : coeffs_.mu)
        if (m != 0.0) linear_ = false;
    left_.spec = bc.left;
    right_.spec = bc.right;
    auto resolve = [&](BcRuntime& rt, int ivert) {
        rt.phi_ref = st_.varphi[ivert];
        if (const auto* o = std::get_if<OutgoingBc>(&rt.spec))
            rt.U = o->U >= 0.0 ? o->U : coeffs_.mass2 + coeffs_.mu[ivert];
    };
    resolve(left_, 0);
    resolve(right_, grid_.nx - 1);
}

void Stepper::apply_boundary(BcRuntime& rt, Side side, double t_now, double t_next) {
    const int n = grid_.nx;
    const int b = side == Side::left ? 0 : n - 1;
    const int edge = side == Side::left ? 0 : n - 2; // boundary spatial edge
    const double dt = grid_.dt, dx = grid_.dx;
    auto& nt = phi_t_new_;

    std::visit(
        [&](const auto& spec) {
            using T = std::decay_t<decltype(spec)>;
            if constexpr (std::is_same_v<T, DirichletBc>) {
                nt[b] = spec.hold ? 0.0 : spec.value(t_next) - st_.varphi[b];
            } else if constexpr (std::is_same_v<T, NeumannBias> || std::is_same_v<T, PulseBc>) {
                double slope;
                if constexpr (std::is_same_v<T, NeumannBias>)
                    slope = neumann_edge_slope(spec, side);
                else
                    slope = pulse_edge_slope(spec, t_next);
                const double edge_value = dx * slope;
                // Forces the new boundary spatial edge to edge_value exactly;
                // the boundary vertex follows from compatibility.
                if (side == Side::left)
                    nt[b] = st_.phi_x[0] + nt[1] - edge_value;
                else
                    nt[b] = -st_.phi_x[n - 2] + nt[n - 2] + edge_value;
            } else if constexpr (std::is_same_v<T, OutgoingBc>) {
                const double sgn = side == Side::left ? 1.0 : -1.0;
                if (spec.order == 0 || !rt.have_prev) {
                    nt[b] = sgn * (dt / dx) * st_.phi_x[edge];
                } else {
                    nt[b] = st_.phi_t[b] + sgn * (dt / dx) * (st_.phi_x[edge] - rt.prev_edge) -
                            0.5 * dt * dt * rt.U * (st_.varphi[b] - rt.phi_ref);
                }
            }
        },
        rt.spec);
    (void)t_now;
    rt.prev_edge = st_.phi_x[edge];
    rt.have_prev = true;
}

void Stepper::step() {
    const int n = grid_.nx;
    const double dt = grid_.dt, dx = grid_.dx;
    const double dt2 = dt * dt;
    const double inv_dx2 = 1.0 / (dx * dx);
    const double lead = dt2 / (1.0 + coeffs_.alpha * dt / 2.0);
    const double c_prev = 1.0 / dt2 - coeffs_.alpha / (2.0 * dt);
    const double t_now = time();
    const double t_next = t_now + dt;

    const double* src = coeffs_.src.data();
    if (time_source_) {
        src_now_.resize(n);
        for (int i = 0; i < n; ++i) src_now_[i] = coeffs_.src[i] + time_source_(grid_.x(i), t_now);
        src = src_now_.data();
    }

    double* nt = phi_t_new_.data();
    double* phi = st_.varphi.data();
    double* px = st_.phi_x.data();
    double* pt = st_.phi_t.data();
    const double* mu = coeffs_.mu.data();
    const double m2 = coeffs_.mass2;
    // entering an OpenMP region costs about a microsecond even with one
    // thread, so small grids take explicit serial paths (bitwise identical)
    const bool par = parallel_ && n >= kParallelThreshold;

    const auto interior_full = [&](int i) {
        nt[i] = lead * ((px[i] - px[i - 1]) * inv_dx2 + c_prev * pt[i] - m2 * phi[i] -
                        mu[i] * std::sin(phi[i]) + src[i]);
    };
    const auto interior_linear = [&](int i) {
        nt[i] = lead * ((px[i] - px[i - 1]) * inv_dx2 + c_prev * pt[i] - m2 * phi[i] + src[i]);
    };
    if (par) {
        if (linear_) {
#pragma omp parallel for schedule(static)
            for (int i = 1; i < n - 1; ++i) interior_linear(i);
        } else {
#pragma omp parallel for schedule(static)
            for (int i = 1; i < n - 1; ++i) interior_full(i);
        }
    } else if (linear_) {
        for (int i = 1; i < n - 1; ++i) interior_linear(i);
    } else {
        for (int i = 1; i < n - 1; ++i) interior_full(i);
    }

    apply_boundary(left_, Side::left, t_now, t_next);
    apply_boundary(right_, Side::right, t_now, t_next);

    phi_t_old_.swap(st_.phi_t);
    // phi_t_new_ becomes the state's phi_t; keep the buffer for the next step
    std::swap(phi_t_new_, st_.phi_t);
    nt = st_.phi_t.data();

    double acc = 0.0;
    double worst = 0.0;
    if (par) {
#pragma omp parallel for schedule(static) reduction(+ : acc)
        for (int i = 0; i < n; ++i) {
            phi[i] += nt[i];
            acc += nt[i];
        }
        if (audit_) {
#pragma omp parallel for schedule(static) reduction(max : worst)
            for (int i = 0; i < n - 1; ++i) {
                const double fresh = phi[i + 1] - phi[i];
                const double r = std::fabs(px[i] + nt[i + 1] - fresh - nt[i]);
                px[i] = fresh;
                if (r > worst) worst = r;
            }
        } else {
#pragma omp parallel for schedule(static)
            for (int i = 0; i < n - 1; ++i) px[i] = phi[i + 1] - phi[i];
        }
    } else {
        // fused sweep: update the vertex, then close the edge behind it
        double prev_v = phi[0] + nt[0];
        phi[0] = prev_v;
        acc = nt[0];
        for (int i = 1; i < n; ++i) {
            const double v = phi[i] + nt[i];
            phi[i] = v;
            acc += nt[i];
            const double fresh = v - prev_v;
            if (audit_) {
                const double r = std::fabs(px[i - 1] + nt[i] - fresh - nt[i - 1]);
                if (r > worst) worst = r;
            }
            px[i - 1] = fresh;
            prev_v = v;
        }
    }
    if (!std::isfinite(acc))
        throw BlowupError(st_.j + 1, "non-finite field at step " + std::to_string(st_.j + 1));
    if (audit_) {
        last_residual_ = worst;
        if (worst > worst_residual_) worst_residual_ = worst;
    }

    st_.j += 1;
}

void Stepper::advance(std::int64_t nsteps) {
    for (std::int64_t k = 0; k < nsteps; ++k) step();
}

FieldState reversed(const FieldState& s) {
    FieldState r;
    r.j = 0;
    r.t0 = 0.0;
    const int n = static_cast<int>(s.varphi.size());
    r.varphi.resize(n);
    r.phi_t.resize(n);
    r.phi_x.resize(n - 1);
    for (int i = 0; i < n; ++i) {
        r.varphi[i] = s.varphi[i] - s.phi_t[i];
        r.phi_t[i] = -s.phi_t[i];
    }
    for (int i = 0; i + 1 < n; ++i) r.phi_x[i] = r.varphi[i + 1] - r.varphi[i];
    return r;
}

} // namespace sgdec
