#ifndef IMLAB_SCALING_HPP
#define IMLAB_SCALING_HPP

#include "imlab/state.hpp"

#include <vector>

namespace imlab {

// The dilation symmetry u -> (1/lambda) u(t/lambda, x/lambda).
//
// In the sine representation it is exact with the same mode count: the
// w-form of (1/lambda) u0(r/lambda) on radius lambda*R carries the original
// coefficients unchanged, the velocity picks up 1/lambda, and the time
// stamp scales to lambda*t.  E(scaled) = E(original)/lambda.
WaveState scale_state(const WaveState& state, double lambda);

struct LambdaChoice {
    double lambda = 1.0;
    double energy = 0.0; // E(I u_lambda(0)) at the accepted lambda
    int grid_steps = 0;  // quarter-octave steps taken from lambda = 1
};

// Smallest lambda on the geometric grid 2^{j/4}, j = 0, 1, ..., with
// E(I u_lambda(0)) <= target.  Fails naming the search bound if the
// target is not reached before lambda overflows the budget.
LambdaChoice choose_lambda(const WaveState& state, double cutoff, double regularity,
                           double target = 0.5);

struct LambdaSweep {
    std::vector<double> cutoffs;
    std::vector<double> lambdas;
    double fitted_exponent = 0.0;     // slope of log(lambda) vs log(N)
    double theoretical_exponent = 0.0; // 2(1-s)/(2s-1)
};

LambdaSweep lambda_sweep(const WaveState& state, double regularity,
                         const std::vector<double>& cutoffs, double target = 0.5);

} // namespace imlab

#endif
