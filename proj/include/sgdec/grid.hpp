#ifndef SGDEC_GRID_HPP
#define SGDEC_GRID_HPP

#include <array>
#include <cstdint>

namespace sgdec {

/// Uniform 1+1D space-time primal grid. Vertices are indexed 0..nx-1 per time
/// slice, x(i) = x_min + i*dx. The circumcentric dual is never materialized:
/// on a uniform rectangular grid the dual-face area is dx*dt and the dual edge
/// lengths are dx and dt, so the stepper uses those constants directly.
struct SpacetimeGrid {
    int nx = 0;
    double dx = 0.0;
    double dt = 0.0;
    double x_min = 0.0;

    double courant() const { return dt / dx; }
    double x(int i) const { return x_min + i * dx; }
    double x_max() const { return x_min + (nx - 1) * dx; }
    double length() const { return (nx - 1) * dx; }
    int spatial_edges() const { return nx - 1; }
    int temporal_edges() const { return nx; }
    int faces_per_step() const { return nx - 1; }
    int nearest_vertex(double xq) const;
    bool contains(double xq) const { return xq >= x_min && xq <= x_max(); }
};

/// Construct a grid covering [x_min, x_min + L]. nx = round(L/dx) + 1.
/// Rejects non-positive spacings, L < 2*dx, and dt >= dx (explicit stencil
/// stability; reference runs use dt = 0.8*dx).
SpacetimeGrid build_grid(double L, double dx, double dt, double x_min = 0.0);

enum class EdgeKind { spatial, temporal };

/// e_x(i,j): edge (i,j)->(i+1,j), i in [0,nx-2].
/// e_t(i,j): edge (i,j)->(i,j+1), i in [0,nx-1].
struct EdgeId {
    EdgeKind kind;
    int i;
    std::int64_t j;
    bool operator==(const EdgeId&) const = default;
};

/// Primal face with corners (i,j),(i+1,j),(i,j+1),(i+1,j+1); i in [0,nx-2].
struct FaceId {
    int i;
    std::int64_t j;
};

struct OrientedEdge {
    EdgeId edge;
    int orientation; // +1 or -1
};

/// Counterclockwise boundary of a face: +e_x bottom, +e_t right, -e_x top,
/// -e_t left. With edge fields defined as vertex differences the oriented sum
/// telescopes to zero. Throws on an out-of-range face.
std::array<OrientedEdge, 4> face_boundary(const SpacetimeGrid& grid, FaceId f);

} // namespace sgdec

#endif
