#ifndef IMLAB_STATE_HPP
#define IMLAB_STATE_HPP

#include "imlab/field.hpp"

namespace imlab {

// (position, velocity) pair at a time stamp; position holds the sine
// coefficients of w = r*u, velocity those of dw/dt.
struct WaveState {
    double time = 0.0;
    SpectralField position;
    SpectralField velocity;

    WaveState(double t, SpectralField pos, SpectralField vel);

    const RadialGrid& grid() const { return position.grid(); }
    const GridPtr& grid_ptr() const { return position.grid_ptr(); }
    std::size_t modes() const { return position.modes(); }
};

WaveState zero_state(GridPtr grid);

// Fraction of the per-mode linear energy density rho_k^2 c_k^2 + cdot_k^2
// carried by the top 10% of modes.  States above the configured threshold
// are treated as under-resolved by the drivers.
double tail_energy_fraction(const WaveState& state);

bool under_resolved(const WaveState& state, double threshold);

} // namespace imlab

#endif
