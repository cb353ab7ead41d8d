#include "sgdec/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sgdec {

int SpacetimeGrid::nearest_vertex(double xq) const {
    double f = std::round((xq - x_min) / dx);
    if (f < 0.0) f = 0.0;
    if (f > nx - 1) f = static_cast<double>(nx - 1);
    return static_cast<int>(f);
}

SpacetimeGrid build_grid(double L, double dx, double dt, double x_min) {
    if (!(dx > 0.0)) throw std::invalid_argument("build_grid: dx must be positive");
    if (!(dt > 0.0)) throw std::invalid_argument("build_grid: dt must be positive");
    if (L < 2.0 * dx - 1e-12 * dx)
        throw std::invalid_argument("build_grid: domain must span at least two cells (L >= 2*dx)");
    if (!(dt < dx))
        throw std::invalid_argument("build_grid: dt must be less than dx (courant = dt/dx < 1); got dt=" +
                                    std::to_string(dt) + " dx=" + std::to_string(dx));
    SpacetimeGrid g;
    g.nx = static_cast<int>(std::lround(L / dx)) + 1;
    g.dx = dx;
    g.dt = dt;
    g.x_min = x_min;
    return g;
}

std::array<OrientedEdge, 4> face_boundary(const SpacetimeGrid& grid, FaceId f) {
    if (f.i < 0 || f.i >= grid.nx - 1) throw std::out_of_range("face_boundary: face index out of range");
    return {{
        {{EdgeKind::spatial, f.i, f.j}, +1},
        {{EdgeKind::temporal, f.i + 1, f.j}, +1},
        {{EdgeKind::spatial, f.i, f.j + 1}, -1},
        {{EdgeKind::temporal, f.i, f.j}, -1},
    }};
}

} // namespace sgdec
