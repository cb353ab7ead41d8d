#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "sgdec/analytic.hpp"
#include "sgdec/diagnostics.hpp"
#include "sgdec/stepper.hpp"

using namespace sgdec;

namespace {
constexpr double kPi = std::numbers::pi;

struct KinkRun {
    SpacetimeGrid grid;
    Coefficients coeffs;
    Stepper stepper;
    std::vector<double> varphi_j, phi_x_j;
    KinkRun(double u, double g_coupling = 0.0)
        : grid(build_grid(100.0, 0.05, 0.04, -50.0)),
          coeffs([&] {
              PhysicsModel m;
              m.g = g_coupling;
              return evaluate_coefficients(m, grid);
          }()),
          stepper(grid, coeffs, BoundarySpec{},
                  seed_initial_layer(InitialCondition{analytic::Kink{0.0, u, 0, +1}}, grid, coeffs)) {
        varphi_j = stepper.state().varphi;
        phi_x_j = stepper.state().phi_x;
        stepper.step(); // expose both temporal edges around layer j
    }
    EnergyBreakdown energy() const {
        return total_energy(grid, coeffs, varphi_j, phi_x_j, stepper.phi_t_prev_layer(),
                            stepper.state().phi_t, 0.0);
    }
};
} // namespace

TEST_CASE("energies of simple states") {
    SpacetimeGrid g = build_grid(20.0, 0.1, 0.08, -10.0);
    PhysicsModel m;
    Coefficients c = evaluate_coefficients(m, g);
    std::vector<double> zero_v(g.nx, 0.0), zero_e(g.nx - 1, 0.0);
    EnergyBreakdown e = total_energy(g, c, zero_v, zero_e, zero_v, zero_v, 0.0);
    CHECK(e.total == 0.0);
    CHECK(e.gradient == 0.0);
    CHECK(e.kinetic == 0.0);
    CHECK(e.potential == 0.0);

    KinkRun rest(0.0);
    CHECK(rest.energy().total == doctest::Approx(8.0).epsilon(5e-3));

    KinkRun moving(0.55);
    CHECK(moving.energy().total == doctest::Approx(8.0 / std::sqrt(1.0 - 0.3025)).epsilon(5e-3));

    // total equals the sum of the parts
    EnergyBreakdown em = moving.energy();
    CHECK(em.total == em.gradient + em.kinetic + em.potential + em.field);
}

TEST_CASE("windowed energy reduces to the total on the full domain") {
    KinkRun r(0.55);
    EnergyBreakdown full = r.energy();
    EnergyBreakdown win =
        windowed_energy(r.grid, r.coeffs, r.varphi_j, r.phi_x_j, r.stepper.phi_t_prev_layer(),
                        r.stepper.state().phi_t, 0.0, r.grid.x_min, r.grid.x_max());
    CHECK(win.total == doctest::Approx(full.total).epsilon(1e-12));
    CHECK_THROWS_AS(windowed_energy(r.grid, r.coeffs, r.varphi_j, r.phi_x_j,
                                    r.stepper.phi_t_prev_layer(), r.stepper.state().phi_t, 0.0, 5.0,
                                    -5.0),
                    std::invalid_argument);
    // half the domain holds roughly half of a centered kink's energy
    EnergyBreakdown half =
        windowed_energy(r.grid, r.coeffs, r.varphi_j, r.phi_x_j, r.stepper.phi_t_prev_layer(),
                        r.stepper.state().phi_t, 0.0, 0.0, r.grid.x_max());
    CHECK(half.total == doctest::Approx(full.total / 2.0).epsilon(0.05));
}

TEST_CASE("observables and total charge") {
    KinkRun r(0.55, 0.3);
    Observables o = observables(r.grid, r.coeffs, r.stepper.state());
    CHECK(o.Q == doctest::Approx(-0.3 * 2.0 * kPi).epsilon(1e-6)); // winding 2*pi
    // rho integrates to the boundary difference
    double acc = 0.0;
    for (double v : o.rho) acc += v * r.grid.dx;
    CHECK(acc == doctest::Approx(o.Q).epsilon(1e-9));

    // neutral pair: zero charge
    SpacetimeGrid g = r.grid;
    PhysicsModel m;
    m.g = 0.3;
    Coefficients c = evaluate_coefficients(m, g);
    FieldState pair =
        seed_initial_layer(InitialCondition{analytic::KinkAntikink{0.0, 0.55, 40.0}}, g, c);
    CHECK(observables(g, c, pair).Q == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("kink location and polarity") {
    SpacetimeGrid g = build_grid(100.0, 0.05, 0.04, -50.0);
    std::vector<double> phi(g.nx);
    for (int i = 0; i < g.nx; ++i) phi[i] = analytic::kink(g.x(i), 0.0, {7.3, 0.0, 0, +1});
    auto kinks = locate_kinks(g, phi);
    REQUIRE(kinks.size() == 1);
    CHECK(std::fabs(kinks[0].position - 7.3) < g.dx / 2.0);
    CHECK(kinks[0].polarity == +1);

    for (int i = 0; i < g.nx; ++i)
        phi[i] = analytic::kink(g.x(i), 0.0, {-12.0, 0.0, 0, -1}) +
                 analytic::kink(g.x(i), 0.0, {20.0, 0.0, 0, +1});
    kinks = locate_kinks(g, phi);
    REQUIRE(kinks.size() == 2);
    CHECK(kinks[0].polarity == -1);
    CHECK(kinks[1].polarity == +1);

    // a breather of amplitude below pi never crosses the tracking levels
    for (int i = 0; i < g.nx; ++i) {
        const double t_peak = (kPi / 2.0) / std::cos(0.6);
        phi[i] = analytic::breather(g.x(i), t_peak, {0.6, 0.0, 0.0, 0.0});
    }
    CHECK(locate_kinks(g, phi).empty());

    // vacuum: nothing to report
    std::fill(phi.begin(), phi.end(), 0.0);
    CHECK(locate_kinks(g, phi).empty());
}

TEST_CASE("tracked velocity matches the boost") {
    SpacetimeGrid g = build_grid(100.0, 0.05, 0.04, -50.0);
    PhysicsModel m;
    Coefficients c = evaluate_coefficients(m, g);
    Stepper s(g, c, BoundarySpec{},
              seed_initial_layer(InitialCondition{analytic::Kink{0.0, 0.55, 0, +1}}, g, c));
    std::vector<double> ts, xs;
    for (int k = 0; k < 100; ++k) {
        s.step();
        auto kinks = locate_kinks(g, s.state().varphi);
        REQUIRE(kinks.size() == 1);
        ts.push_back(s.time());
        xs.push_back(kinks[0].position);
    }
    CHECK(fit_line(ts, xs).slope == doctest::Approx(0.55).epsilon(0.01));
}

TEST_CASE("collision counter handles bounces and ignores interior turning points") {
    SpacetimeGrid g = build_grid(100.0, 0.05, 0.04, -50.0);
    // synthetic reflected ray: |triangle wave| bouncing between the walls
    CollisionCounter counter(g.x_min, g.x_max(), 5.0);
    int expected = 0;
    double x = 0.0, v = 0.55;
    for (double t = 0.0; t < 2000.0; t += 1.0) {
        counter.feed(t, x);
        x += v;
        if (x >= 50.0) {
            x = 100.0 - x;
            v = -v;
            ++expected;
        } else if (x <= -50.0) {
            x = -100.0 - x;
            v = -v;
            ++expected;
        }
    }
    CHECK(counter.collisions() == expected);

    // a mid-domain reversal (microshort bounce) must not count
    CollisionCounter mid(g.x_min, g.x_max(), 5.0);
    for (double t = 0.0; t < 400.0; t += 1.0) {
        const double p = -10.0 + 15.0 * std::fabs(std::sin(t / 40.0));
        mid.feed(t, p);
    }
    CHECK(mid.collisions() == 0);
}

TEST_CASE("per-period frequency extraction") {
    std::vector<double> t, y;
    for (double tt = 0.0; tt < 100.0; tt += 0.01) {
        t.push_back(tt);
        y.push_back(std::sin(1.2 * tt));
    }
    auto periods = oscillation_frequency(t, y);
    REQUIRE(periods.size() > 10);
    for (const auto& p : periods) CHECK(p.omega == doctest::Approx(1.2).epsilon(1e-3));

    // chirp: instantaneous frequency t/100 rises monotonically
    t.clear();
    y.clear();
    for (double tt = 20.0; tt < 300.0; tt += 0.01) {
        t.push_back(tt);
        y.push_back(std::sin(tt * tt / 200.0));
    }
    periods = oscillation_frequency(t, y);
    for (std::size_t k = 1; k < periods.size(); ++k) CHECK(periods[k].omega > periods[k - 1].omega);

    std::vector<double> flat_t = {0.0, 1.0, 2.0}, flat_y = {1.0, 1.0, 1.0};
    CHECK_THROWS_AS(oscillation_frequency(flat_t, flat_y), std::invalid_argument);
}

TEST_CASE("envelope decay exponent") {
    std::vector<double> t, y;
    for (double tt = 1.0; tt < 4000.0; tt += 0.05) {
        t.push_back(tt);
        y.push_back(std::sin(1.2 * tt) / std::sqrt(tt));
    }
    auto slope = envelope_decay_exponent(t, y, 500.0, 4000.0, 42.0);
    REQUIRE(slope.has_value());
    CHECK(*slope == doctest::Approx(-0.5).epsilon(0.1));

    // constant amplitude: flagged, no exponent
    for (auto& v : y) v = std::sin(1.2 * (&v - y.data()) * 0.05);
    std::vector<double> yc;
    for (double tt : t) yc.push_back(std::sin(1.2 * tt));
    CHECK(!envelope_decay_exponent(t, yc, 500.0, 4000.0, 42.0).has_value());

    // growing amplitude: also refused
    std::vector<double> yg;
    for (double tt : t) yg.push_back(std::sqrt(tt) * std::sin(1.2 * tt));
    CHECK(!envelope_decay_exponent(t, yg, 500.0, 4000.0, 42.0).has_value());
}

TEST_CASE("line fit") {
    std::vector<double> x = {1.0, 2.0, 3.0, 4.0}, y = {3.0, 5.0, 7.0, 9.0};
    LineFit f = fit_line(x, y);
    CHECK(f.slope == doctest::Approx(2.0));
    CHECK(f.intercept == doctest::Approx(1.0));
    CHECK(f.r2 == doctest::Approx(1.0));
}

TEST_CASE("printed-form hamiltonian differs from the squared form") {
    KinkRun r(0.55);
    const double printed = hdec_as_printed(r.grid, r.coeffs, r.varphi_j, r.phi_x_j,
                                           r.stepper.phi_t_prev_layer(), r.stepper.state().phi_t);
    CHECK(printed != doctest::Approx(r.energy().total).epsilon(1e-3));
}
