#ifndef IMLAB_ENERGY_HPP
#define IMLAB_ENERGY_HPP

#include "imlab/state.hpp"

namespace imlab {

// E(v) = 1/2 int (dv/dt)^2 + 1/2 int |Dv|^2 + 1/4 int v^4 over R^3.
// Kinetic and gradient parts are coefficient sums (docs/normalization.md);
// the quartic part is a dealiased physical-space quadrature.
struct EnergyBreakdown {
    double kinetic = 0.0;
    double gradient = 0.0;
    double quartic = 0.0;
    double total() const { return kinetic + gradient + quartic; }
};

EnergyBreakdown energy(const WaveState& state, std::size_t pad_factor = 2);

// Energy of the smoothed state (multiplier applied to both slots).
EnergyBreakdown mollified_energy(const WaveState& state, double cutoff, double regularity,
                                 std::size_t pad_factor = 2);

// |u(T)|_{H^s}^2 + |du/dt(T)|_{H^{s-1}}^2.
double hs_pair_norm(const WaveState& state, double s);

} // namespace imlab

#endif
