#include "imlab/energy.hpp"

#include "imlab/multiplier.hpp"
#include "imlab/norms.hpp"

#include <cmath>
#include <numbers>

namespace imlab {

EnergyBreakdown energy(const WaveState& state, std::size_t pad_factor) {
    EnergyBreakdown e;
    const double planch = plancherel_factor(state.grid());
    double kin = 0.0, grad = 0.0;
    for (std::size_t k = 0; k < state.modes(); ++k) {
        const double rho = state.grid().frequency(k);
        const double c = state.position.coeff(k);
        const double cdot = state.velocity.coeff(k);
        kin += cdot * cdot;
        grad += rho * rho * c * c;
    }
    e.kinetic = 0.5 * planch * kin;
    e.gradient = 0.5 * planch * grad;

    // 1/4 * 4pi * int u^4 r^2 dr  =  pi * int w^4 / r^2 dr
    const PhysicalView view = physical_view(state.position, pad_factor);
    double quart = 0.0;
    for (std::size_t j = 0; j < view.nodes; ++j) {
        const double w2 = view.w[j] * view.w[j];
        quart += w2 * w2 / (view.r[j] * view.r[j]);
    }
    e.quartic = std::numbers::pi * view.spacing * quart;
    return e;
}

EnergyBreakdown mollified_energy(const WaveState& state, double cutoff, double regularity,
                                 std::size_t pad_factor) {
    const MultiplierSpec smoother = MultiplierSpec::smoothing_i(cutoff, regularity);
    WaveState smoothed(state.time, apply_multiplier(state.position, smoother),
                       apply_multiplier(state.velocity, smoother));
    return energy(smoothed, pad_factor);
}

double hs_pair_norm(const WaveState& state, double s) {
    const double a = sobolev_norm(state.position, s, false);
    const double b = sobolev_norm(state.velocity, s - 1.0, false);
    return a * a + b * b;
}

} // namespace imlab
