#include "imlab/initial_data.hpp"

#include "imlab/norms.hpp"
#include "imlab/transform.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace imlab {

namespace {

double compact_bump(double z) {
    // exp(1 - 1/(1 - z^2)) on |z| < 1, identically zero outside.
    if (std::abs(z) >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - z * z));
}

double smoothstep(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return x * x * x * (x * (6.0 * x - 15.0) + 10.0);
}

} // namespace

WaveState make_rough_data(GridPtr grid, double s, std::uint64_t seed,
                          const RoughProfile& profile) {
    if (!(s > 0.5 && s < 1.0)) {
        throw std::invalid_argument("make_rough_data: s must lie in (1/2, 1)");
    }
    const std::size_t m = grid->modes();
    std::vector<double> pos(m, 0.0), vel(m, 0.0);
    std::mt19937_64 rng(seed);
    const double slope_pos = -(s + 0.5 + profile.spectral_slope_margin);
    const double slope_vel = -(s - 0.5 + profile.spectral_slope_margin);
    for (std::size_t k = 0; k < m; ++k) {
        // Draw both signs even for skipped modes so low_cut does not shift
        // the stream seen by later modes.
        const double sign_pos = (rng() & 1u) ? 1.0 : -1.0;
        const double sign_vel = (rng() & 1u) ? 1.0 : -1.0;
        if (k + 1 < profile.low_cut) continue;
        const double rho = grid->frequency(k);
        pos[k] = profile.amplitude * sign_pos * std::pow(rho, slope_pos);
        vel[k] = profile.amplitude * sign_vel * std::pow(rho, slope_vel);
    }
    return WaveState(0.0, SpectralField(grid, std::move(pos)), SpectralField(grid, std::move(vel)));
}

WaveState make_bump_data(GridPtr grid, double amplitude, double center, double width) {
    if (!(center - width > 0.0) || !(center + width < grid->radius())) {
        throw std::invalid_argument("make_bump_data: bump support must fit inside (0, R)");
    }
    const std::size_t m = grid->modes();
    std::vector<double> samples(m);
    for (std::size_t j = 0; j < m; ++j) {
        const double r = grid->node(j);
        samples[j] = r * amplitude * compact_bump((r - center) / width);
    }
    SpectralField pos = forward_transform(grid, samples);
    return WaveState(0.0, std::move(pos), SpectralField::zero(grid));
}

WaveState seeded_smooth_state(GridPtr grid, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double radius = grid->radius();
    const double amplitude = 0.5 + unit(rng);
    const double center = radius * (0.12 + 0.08 * unit(rng));
    const double width = radius * (0.04 + 0.05 * unit(rng));
    const double vel_amplitude = (unit(rng) - 0.5);
    const double vel_center = radius * (0.12 + 0.08 * unit(rng));
    const double vel_width = radius * (0.04 + 0.05 * unit(rng));

    WaveState state = make_bump_data(grid, amplitude, center, width);
    const std::size_t m = grid->modes();
    std::vector<double> vel_samples(m);
    for (std::size_t j = 0; j < m; ++j) {
        const double r = grid->node(j);
        vel_samples[j] = r * vel_amplitude * compact_bump((r - vel_center) / vel_width);
    }
    SpectralField vel = forward_transform(grid, vel_samples);
    return WaveState(0.0, state.position, std::move(vel));
}

SpectralField random_h1_field(GridPtr grid, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const std::size_t m = grid->modes();
    std::vector<double> coeffs(m);
    for (std::size_t k = 0; k < m; ++k) {
        const double rho = grid->frequency(k);
        coeffs[k] = gauss(rng) * std::pow(rho, -1.6);
    }
    SpectralField f(grid, std::move(coeffs));
    const double h1 = sobolev_norm(f, 1.0, true);
    std::vector<double> scaled = f.coeffs();
    for (double& c : scaled) c /= h1;
    return SpectralField(grid, std::move(scaled));
}

namespace {

SpectralField taper_field(const SpectralField& f, double r0, double width) {
    PhysicalView view = physical_view(f, 2);
    for (std::size_t j = 0; j < view.nodes; ++j) {
        view.w[j] *= 1.0 - smoothstep((view.r[j] - r0) / width);
    }
    return SpectralField(f.grid_ptr(), padded_analysis(view.w, f.modes()));
}

} // namespace

WaveState taper_state(const WaveState& state, double r0, double width) {
    if (!(r0 > 0.0) || !(width > 0.0) || !(r0 + width < state.grid().radius())) {
        throw std::invalid_argument("taper_state: cutoff window must lie inside (0, R)");
    }
    return WaveState(state.time, taper_field(state.position, r0, width),
                     taper_field(state.velocity, r0, width));
}

} // namespace imlab
