#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sgdec/grid.hpp"

using namespace sgdec;

TEST_CASE("build_grid reference dimensions") {
    SpacetimeGrid g = build_grid(100.0, 0.05, 0.04, 0.0);
    CHECK(g.nx == 2001);
    CHECK(g.courant() == doctest::Approx(0.8));
    CHECK(g.x(0) == 0.0);
    CHECK(g.x(2000) == doctest::Approx(100.0));
    CHECK(g.spatial_edges() == 2000);
    CHECK(g.faces_per_step() == 2000);

    SpacetimeGrid tiny = build_grid(1.0, 0.5, 0.4, 0.0);
    CHECK(tiny.nx == 3);
    CHECK(tiny.faces_per_step() == 2);
}

TEST_CASE("build_grid rejects bad parameters") {
    CHECK_THROWS_AS(build_grid(100.0, 0.05, 0.06, 0.0), std::invalid_argument); // courant >= 1
    CHECK_THROWS_AS(build_grid(100.0, 0.05, 0.05, 0.0), std::invalid_argument); // dt == dx
    CHECK_THROWS_AS(build_grid(100.0, -0.05, 0.04, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(build_grid(100.0, 0.05, -0.04, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(build_grid(0.08, 0.05, 0.04, 0.0), std::invalid_argument); // too short
}

TEST_CASE("vertex coordinate round trip") {
    SpacetimeGrid g = build_grid(100.0, 0.05, 0.04, -50.0);
    for (int i : {0, 1, 700, 1999, 2000}) CHECK(g.nearest_vertex(g.x(i)) == i);
    CHECK(g.nearest_vertex(-1e9) == 0);
    CHECK(g.nearest_vertex(1e9) == g.nx - 1);
}

TEST_CASE("face boundary traversal") {
    SpacetimeGrid g = build_grid(1.0, 0.5, 0.4, 0.0);
    auto edges = face_boundary(g, FaceId{0, 0});
    CHECK(edges[0].edge == EdgeId{EdgeKind::spatial, 0, 0});
    CHECK(edges[0].orientation == 1);
    CHECK(edges[1].edge == EdgeId{EdgeKind::temporal, 1, 0});
    CHECK(edges[1].orientation == 1);
    CHECK(edges[2].edge == EdgeId{EdgeKind::spatial, 0, 1});
    CHECK(edges[2].orientation == -1);
    CHECK(edges[3].edge == EdgeId{EdgeKind::temporal, 0, 0});
    CHECK(edges[3].orientation == -1);
    CHECK_THROWS_AS(face_boundary(g, FaceId{2, 0}), std::out_of_range);
    CHECK_THROWS_AS(face_boundary(g, FaceId{-1, 0}), std::out_of_range);
}

TEST_CASE("oriented boundary sum telescopes for difference-defined edge fields") {
    // edge fields from an arbitrary vertex scalar: the oriented face sum is a
    // pure cancellation, a few eps at double precision
    SpacetimeGrid g = build_grid(20.0, 0.5, 0.4, 0.0);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    std::vector<std::vector<double>> phi(3, std::vector<double>(g.nx));
    for (auto& layer : phi)
        for (double& v : layer) v = dist(rng);

    auto edge_value = [&](const EdgeId& e) {
        if (e.kind == EdgeKind::spatial) return phi[e.j][e.i + 1] - phi[e.j][e.i];
        return phi[e.j + 1][e.i] - phi[e.j][e.i];
    };
    for (std::int64_t j = 0; j < 2; ++j) {
        for (int i = 0; i < g.faces_per_step(); ++i) {
            double sum = 0.0;
            for (const auto& oe : face_boundary(g, FaceId{i, j}))
                sum += oe.orientation * edge_value(oe.edge);
            CHECK(std::fabs(sum) <= 5e-13);
        }
    }
}
