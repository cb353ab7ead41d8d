#ifndef SGDEC_STATE_HPP
#define SGDEC_STATE_HPP

#include <cstdint>
#include <vector>

namespace sgdec {

/// One temporal layer of a simulation. varphi holds the vertex scalar at time
/// index j, phi_x the spatial edge fields of that layer, and phi_t the
/// temporal edge fields that advanced the state into layer j. The
/// compatibility identity phi_x[i] == varphi[i+1] - varphi[i] holds bitwise:
/// phi_x is always assigned as that difference, never recomputed another way.
struct FieldState {
    std::int64_t j = 0;
    double t0 = 0.0; // physical time of index 0
    std::vector<double> varphi; // nx
    std::vector<double> phi_x;  // nx-1
    std::vector<double> phi_t;  // nx

    double time(double dt) const { return t0 + static_cast<double>(j) * dt; }
};

} // namespace sgdec

#endif
