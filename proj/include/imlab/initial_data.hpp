#ifndef IMLAB_INITIAL_DATA_HPP
#define IMLAB_INITIAL_DATA_HPP

#include "imlab/state.hpp"

#include <cstdint>

namespace imlab {

// Low-regularity surrogate: prescribed spectral slopes so that grid
// refinement approaches a datum in H^s x H^{s-1} but not H^1 x L^2.
//   position magnitudes  |c_k|    = amplitude * rho_k^-(s + 1/2 + epsilon)
//   velocity magnitudes  |cdot_k| = amplitude * rho_k^-(s - 1/2 + epsilon)
// with independent random signs; modes with index < low_cut are zeroed.
struct RoughProfile {
    double spectral_slope_margin = 0.05; // epsilon
    std::size_t low_cut = 1;             // 1-based first populated mode
    double amplitude = 1.0;
};

// Deterministic in (seed, profile, grid).  Requires s in (1/2, 1).
WaveState make_rough_data(GridPtr grid, double s, std::uint64_t seed,
                          const RoughProfile& profile);

// Smooth compactly supported bump
//   u0(r) = amplitude * exp(1 - 1/(1 - z^2)),  z = (r - center)/width,  |z| < 1
// with zero velocity.  Support must fit inside (0, R).
WaveState make_bump_data(GridPtr grid, double amplitude, double center, double width);

// Seeded family of smooth bump states (varying amplitude/center/width and a
// velocity bump) used by the audit drivers.
WaveState seeded_smooth_state(GridPtr grid, std::uint64_t seed);

// Seeded random field with mild spectral decay, used by the pointwise
// inequality audits; normalized to unit homogeneous H^1 norm.
SpectralField random_h1_field(GridPtr grid, std::uint64_t seed);

// Multiplies w by a C^2 cutoff equal to 1 for r <= r0 and 0 for
// r >= r0 + width, then re-expands (dealiased).  Keeps the Dirichlet
// boundary quiescent for data that is not compactly supported.
WaveState taper_state(const WaveState& state, double r0, double width);

} // namespace imlab

#endif
