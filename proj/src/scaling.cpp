#include "imlab/scaling.hpp"

#include "imlab/energy.hpp"
#include "imlab/errors.hpp"
#include "imlab/fit.hpp"

#include <cmath>
#include <stdexcept>

namespace imlab {

WaveState scale_state(const WaveState& state, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("scale_state: lambda must be positive");
    const GridPtr scaled_grid =
        make_grid(state.modes(), lambda * state.grid().radius());
    std::vector<double> vel = state.velocity.coeffs();
    for (double& v : vel) v /= lambda;
    return WaveState(lambda * state.time,
                     SpectralField(scaled_grid, state.position.coeffs()),
                     SpectralField(scaled_grid, std::move(vel)));
}

LambdaChoice choose_lambda(const WaveState& state, double cutoff, double regularity,
                           double target) {
    bool nonzero = false;
    for (double c : state.position.coeffs()) nonzero = nonzero || c != 0.0;
    for (double c : state.velocity.coeffs()) nonzero = nonzero || c != 0.0;
    if (!nonzero) throw ConfigError("choose_lambda: zero data");

    const int max_steps = 400; // lambda up to 2^100
    const double quarter_octave = std::pow(2.0, 0.25);
    double lambda = 1.0;
    for (int j = 0; j <= max_steps; ++j) {
        const WaveState scaled = j == 0 ? state : scale_state(state, lambda);
        const double e = mollified_energy(scaled, cutoff, regularity).total();
        if (e <= target) return LambdaChoice{lambda, e, j};
        lambda *= quarter_octave;
    }
    throw ConfigError(
        "choose_lambda: target energy not reached within the lambda search budget "
        "(limiting constraint: geometric grid exhausted at 2^100)");
}

LambdaSweep lambda_sweep(const WaveState& state, double regularity,
                         const std::vector<double>& cutoffs, double target) {
    if (cutoffs.size() < 2) throw ConfigError("lambda_sweep: need at least two cutoffs");
    LambdaSweep sweep;
    sweep.cutoffs = cutoffs;
    for (double n : cutoffs) {
        sweep.lambdas.push_back(choose_lambda(state, n, regularity, target).lambda);
    }
    sweep.fitted_exponent = loglog_slope(sweep.cutoffs, sweep.lambdas);
    sweep.theoretical_exponent = 2.0 * (1.0 - regularity) / (2.0 * regularity - 1.0);
    return sweep;
}

} // namespace imlab
