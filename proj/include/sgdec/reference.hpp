#ifndef SGDEC_REFERENCE_HPP
#define SGDEC_REFERENCE_HPP

#include <vector>

#include "sgdec/boundary.hpp"
#include "sgdec/diagnostics.hpp"
#include "sgdec/grid.hpp"
#include "sgdec/model.hpp"
#include "sgdec/stepper.hpp"

namespace sgdec {

/// Two consecutive scalar layers of a second-order integrator.
struct SecondOrderState {
    std::int64_t j = 0; // index of varphi_curr
    double t0 = 0.0;
    std::vector<double> varphi_prev;
    std::vector<double> varphi_curr;
    double time(double dt) const { return t0 + static_cast<double>(j) * dt; }
};

/// Explicit central-difference integrator on the second-order equation
/// ("Euler method" in the comparison literature; the update is
///   phi(j+1) = [2 phi(j) - (1 - alpha dt/2) phi(j-1)
///               + dt^2 (lap - mass2 phi - mu sin phi + s)] / (1 + alpha dt/2),
/// which is leapfrog). Boundary conditions mirror the DEC module via ghost
/// relations on the scalar layers.
class EulerStepper {
public:
    EulerStepper(const SpacetimeGrid& grid, Coefficients coeffs, const BoundarySpec& bc,
                 const InitialCondition& ic, double t0 = 0.0);

    void step();
    void advance(std::int64_t nsteps);

    const SecondOrderState& state() const { return st_; }
    const SpacetimeGrid& grid() const { return grid_; }
    double time() const { return st_.time(grid_.dt); }
    void set_parallel(bool on) { parallel_ = on; }

    /// Energy at the current slice with the kinetic term from the backward
    /// time difference (phi^j - phi^{j-1})/dt, the estimate a second-order
    /// scalar integrator has in hand at step j. Micro-oscillates at O(dt).
    EnergyBreakdown energy_backward(const Coefficients& coeffs) const;

private:
    struct BcRuntime {
        BcSpec spec;
        double phi_ref = 0.0;
        double U = 0.0;
    };
    void apply_boundary(std::vector<double>& next, const BcRuntime& rt, Side side, double t_next);

    SpacetimeGrid grid_;
    Coefficients coeffs_;
    SecondOrderState st_;
    std::vector<double> next_;
    BcRuntime left_, right_;
    bool parallel_ = true;
    bool linear_ = false;
};

/// Crank-Nicolson for the linear massless model (mu == 0): three-level scheme
/// with the spatial operator time-averaged between layers j+1 and j-1
/// (theta = 1/2), solved per step with the Thomas algorithm. Dirichlet and
/// Neumann conditions are folded into the tridiagonal matrix. Refuses
/// nonlinear models. Unconditionally stable.
class CrankNicolson {
public:
    CrankNicolson(const SpacetimeGrid& grid, Coefficients coeffs, const BoundarySpec& bc,
                  const InitialCondition& ic, double t0 = 0.0);

    void step();
    void advance(std::int64_t nsteps);

    const SecondOrderState& state() const { return st_; }
    double time() const { return st_.time(grid_.dt); }

    /// Energy at slice j-1 (one step behind) with the centered time
    /// difference (phi^j - phi^{j-2})/(2 dt): the fairest estimate available
    /// for an implicit method. Valid after the second step.
    EnergyBreakdown energy_centered(const Coefficients& coeffs) const;
    bool energy_ready() const { return st_.j >= 2; }

private:
    SpacetimeGrid grid_;
    Coefficients coeffs_;
    SecondOrderState st_;
    std::vector<double> prev2_; // varphi at j-2, for centered energies
    std::vector<double> diag_, lower_, upper_, rhs_;
    double bc_slope_left_ = 0.0, bc_slope_right_ = 0.0;
    bool dirichlet_left_ = false, dirichlet_right_ = false;
    std::function<double(double)> dirichlet_left_value_, dirichlet_right_value_;
};

/// Solves a tridiagonal system in place (Thomas algorithm). `lower[0]` and
/// `upper[n-1]` are ignored.
void thomas_solve(std::vector<double>& lower, std::vector<double>& diag, std::vector<double>& upper,
                  std::vector<double>& rhs, std::vector<double>& out);

} // namespace sgdec

#endif
