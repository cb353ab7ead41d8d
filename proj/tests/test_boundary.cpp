#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>

#include "sgdec/analytic.hpp"
#include "sgdec/diagnostics.hpp"
#include "sgdec/stepper.hpp"

using namespace sgdec;

namespace {

Stepper kink_run(const BoundarySpec& bc, double L = 100.0, double dx = 0.05, double u = 0.55) {
    SpacetimeGrid g = build_grid(L, dx, 0.8 * dx, -L / 2.0);
    PhysicsModel m;
    Coefficients c = evaluate_coefficients(m, g);
    InitialCondition ic = analytic::Kink{0.0, u, 0, +1};
    return Stepper(g, c, bc, seed_initial_layer(ic, g, c));
}

} // namespace

TEST_CASE("pulse envelope shape") {
    PulseBc p{1.4, 0.6, 10.0, 10.0, 70.0};
    CHECK(pulse_envelope(p, 30.0) == doctest::Approx(1.4));                  // flat top starts at 3*sigma
    CHECK(pulse_envelope(p, 40.0) == doctest::Approx(1.4));                  // T_p - 3*sigma
    CHECK(pulse_envelope(p, 0.0) == doctest::Approx(1.4 * std::exp(-4.5))); // rise tail
    CHECK(pulse_envelope(p, 101.0) == 0.0);                                  // beyond T_p + 3*sigma
    CHECK(pulse_envelope(p, 99.0) < 0.01 * 1.4);
    CHECK_THROWS_AS(pulse_envelope(PulseBc{1, 1, 0.0, 1, 10}, 0.0), std::invalid_argument);
}

TEST_CASE("neumann edge slopes encode eta and xi") {
    NeumannBias b{0.002, 0.006};
    CHECK(neumann_edge_slope(b, Side::left) == doctest::Approx(0.008));
    CHECK(neumann_edge_slope(b, Side::right) == doctest::Approx(-0.004));
}

TEST_CASE("forced boundary edges carry the prescribed values") {
    BoundarySpec bc;
    bc.left = NeumannBias{0.002, 0.006};
    bc.right = NeumannBias{0.002, 0.006};
    Stepper s = kink_run(bc);
    s.advance(200);
    // dx*(eta+xi) = 4e-4 on the left, dx*(eta-xi) = -2e-4 on the right
    CHECK(s.state().phi_x.front() == doctest::Approx(0.05 * 0.008).epsilon(1e-9));
    CHECK(s.state().phi_x.back() == doctest::Approx(-0.05 * 0.004).epsilon(1e-9));
}

TEST_CASE("closed walls keep the boundary edges at zero") {
    Stepper s = kink_run(BoundarySpec{});
    s.advance(300);
    CHECK(std::fabs(s.state().phi_x.front()) < 1e-14);
    CHECK(std::fabs(s.state().phi_x.back()) < 1e-14);
}

TEST_CASE("zero-amplitude pulse runs bitwise like an unbiased wall") {
    BoundarySpec pulse_bc;
    pulse_bc.left = PulseBc{0.0, 0.8, 10.0, 10.0, 100.0};
    Stepper a = kink_run(pulse_bc, 40.0);
    Stepper b = kink_run(BoundarySpec{}, 40.0);
    a.advance(250);
    b.advance(250);
    CHECK(std::memcmp(a.state().varphi.data(), b.state().varphi.data(),
                      a.state().varphi.size() * sizeof(double)) == 0);
}

TEST_CASE("kink reflects into an antikink with its speed preserved") {
    Stepper s = kink_run(BoundarySpec{});
    const SpacetimeGrid& g = s.grid();
    // run past the first bounce (wall hit near t = 50/0.55 ~ 91)
    std::vector<TrackSample> track;
    const std::int64_t n = static_cast<std::int64_t>(std::llround(160.0 / g.dt));
    for (std::int64_t k = 0; k <= n; ++k) {
        if (k % 25 == 0) {
            auto kinks = locate_kinks(g, s.state().varphi);
            if (kinks.size() == 1)
                track.push_back({s.time(), kinks[0].position, kinks[0].polarity});
        }
        s.step();
    }
    CHECK(track.back().polarity == -1); // antifluxon after the bounce
    // fitted speed over the last stretch
    std::vector<double> ts, xs;
    for (const auto& smp : track)
        if (smp.t > 120.0) {
            ts.push_back(smp.t);
            xs.push_back(smp.position);
        }
    const LineFit f = fit_line(ts, xs);
    CHECK(std::fabs(f.slope) == doctest::Approx(0.55).epsilon(0.005));
}

TEST_CASE("outgoing boundaries leave a quiescent field alone") {
    for (int order : {0, 1}) {
        SpacetimeGrid g = build_grid(20.0, 0.1, 0.08, -10.0);
        PhysicsModel m;
        m.mu0 = 0.0;
        m.g = 1.2;
        m.mass2 = 1.44;
        Coefficients c = evaluate_coefficients(m, g);
        BoundarySpec bc;
        bc.left = OutgoingBc{order, -1.0};
        bc.right = OutgoingBc{order, -1.0};
        Stepper s(g, c, bc, seed_initial_layer(ZeroIc{}, g, c));
        s.advance(200);
        for (double v : s.state().varphi) CHECK(v == 0.0);
    }
}

TEST_CASE("outgoing order 1 falls back to order 0 on the first step") {
    SpacetimeGrid g = build_grid(40.0, 0.05, 0.04, -20.0);
    PhysicsModel m;
    m.mu0 = 0.0;
    m.g = 1.2;
    m.mass2 = 1.44;
    Coefficients c = evaluate_coefficients(m, g);
    CustomIc ic;
    ic.phi0 = [](double x) { return std::exp(-x * x / 8.0); };
    ic.v0 = [](double) { return 0.0; };
    BoundarySpec bc0, bc1;
    bc0.left = OutgoingBc{0, -1.0};
    bc0.right = OutgoingBc{0, -1.0};
    bc1.left = OutgoingBc{1, -1.0};
    bc1.right = OutgoingBc{1, -1.0};
    Stepper a(g, c, bc0, seed_initial_layer(InitialCondition{ic}, g, c));
    Stepper b(g, c, bc1, seed_initial_layer(InitialCondition{ic}, g, c));
    a.step();
    b.step();
    CHECK(a.state().phi_t.front() == b.state().phi_t.front());
    CHECK(a.state().phi_t.back() == b.state().phi_t.back());
    a.step();
    b.step(); // second step diverges
    CHECK(a.state().phi_t.front() != b.state().phi_t.front());
}

TEST_CASE("outgoing order 1 references the seeded vacuum") {
    // with the balancing point charge, an antikink's right vacuum sits at
    // -2*pi; the boundary must hold there instead of relaxing toward zero
    SpacetimeGrid g = build_grid(60.0, 0.05, 0.04, -30.0);
    PhysicsModel m;
    m.g = 0.3;
    m.mass2 = 0.09;
    m.source = SourceKind::point_charge;
    m.source_Q = -2.0 * std::numbers::pi * 0.3;
    Coefficients c = evaluate_coefficients(m, g);
    BoundarySpec bc;
    bc.left = OutgoingBc{1, -1.0};
    bc.right = OutgoingBc{1, -1.0};
    InitialCondition ic = analytic::Kink{0.0, 0.0, 0, -1};
    Stepper s(g, c, bc, seed_initial_layer(ic, g, c));
    s.advance(5000);
    CHECK(std::fabs(s.state().varphi.back() + 2.0 * std::numbers::pi) < 0.03);
    CHECK(std::fabs(s.state().varphi.front()) < 0.03);
}

TEST_CASE("windowed energy does not grow once radiation exits") {
    // gaussian burst in the massless model radiating through order-1 ends
    SpacetimeGrid g = build_grid(100.0, 0.05, 0.04, -50.0);
    PhysicsModel m;
    m.mu0 = 0.0;
    m.g = 1.2;
    m.mass2 = 1.44;
    Coefficients c = evaluate_coefficients(m, g);
    CustomIc ic;
    ic.phi0 = [](double x) { return std::exp(-x * x / 18.0); };
    ic.v0 = [](double) { return 0.0; };
    BoundarySpec bc;
    bc.left = OutgoingBc{1, -1.0};
    bc.right = OutgoingBc{1, -1.0};
    Stepper s(g, c, bc, seed_initial_layer(InitialCondition{ic}, g, c));
    std::vector<double> varphi_prev, phi_x_prev;
    double last = -1.0;
    bool monotone = true;
    for (int k = 0; k < 5000; ++k) {
        varphi_prev = s.state().varphi;
        phi_x_prev = s.state().phi_x;
        s.step();
        if (k % 250 == 0 && s.time() > 100.0) { // after the packet has left the window
            const double e = total_energy(g, c, varphi_prev, phi_x_prev, s.phi_t_prev_layer(),
                                          s.state().phi_t, s.time())
                                 .total;
            if (last >= 0.0 && e > last + 250.0 * 1e-6) monotone = false;
            last = e;
        }
    }
    CHECK(monotone);
}
