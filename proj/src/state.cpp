#include "imlab/state.hpp"

#include <stdexcept>
#include <utility>

namespace imlab {

WaveState::WaveState(double t, SpectralField pos, SpectralField vel)
    : time(t), position(std::move(pos)), velocity(std::move(vel)) {
    if (position.grid() != velocity.grid()) {
        throw std::invalid_argument("WaveState: position and velocity on different grids");
    }
}

WaveState zero_state(GridPtr grid) {
    return WaveState(0.0, SpectralField::zero(grid), SpectralField::zero(grid));
}

double tail_energy_fraction(const WaveState& state) {
    const std::size_t m = state.modes();
    const std::size_t tail_start = m - m / 10;
    double total = 0.0;
    double tail = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        const double rho = state.grid().frequency(k);
        const double c = state.position.coeff(k);
        const double cdot = state.velocity.coeff(k);
        const double density = rho * rho * c * c + cdot * cdot;
        total += density;
        if (k >= tail_start) tail += density;
    }
    if (total == 0.0) return 0.0;
    return tail / total;
}

bool under_resolved(const WaveState& state, double threshold) {
    return tail_energy_fraction(state) > threshold;
}

} // namespace imlab
