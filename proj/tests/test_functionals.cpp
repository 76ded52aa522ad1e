#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "imlab/constants.hpp"
#include "imlab/energy.hpp"
#include "imlab/inequalities.hpp"
#include "imlab/initial_data.hpp"
#include "imlab/norms.hpp"
#include "imlab/spacetime.hpp"

#include <cmath>
#include <limits>
#include <numbers>

using namespace imlab;

namespace {

Trajectory constant_trajectory(const SpectralField& field, double t0, double t1,
                               std::size_t count) {
    std::vector<WaveState> snaps;
    StepSeries series;
    for (std::size_t i = 0; i < count; ++i) {
        const double t = t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(count - 1);
        snaps.emplace_back(t, field, SpectralField::zero(field.grid_ptr()));
        series.times.push_back(t);
    }
    return Trajectory(std::move(snaps), std::move(series), ObserverConfig{}, 0.0, true);
}

Trajectory smooth_run(double horizon, ObserverConfig obs, std::size_t stride = 10,
                      std::uint64_t seed = 4) {
    GridPtr grid = make_grid(512, 20.0);
    const WaveState state = seeded_smooth_state(grid, seed);
    SolverConfig cfg;
    cfg.dt = 2e-3;
    cfg.snapshot_stride = stride;
    return evolve(state, state.time + horizon, cfg, obs);
}

} // namespace

TEST_CASE("energy: zero state and the single-mode closed form") {
    GridPtr grid = make_grid(128, 6.0);
    const EnergyBreakdown z = energy(zero_state(grid));
    CHECK(z.kinetic == 0.0);
    CHECK(z.gradient == 0.0);
    CHECK(z.quartic == 0.0);

    std::vector<double> c(128, 0.0);
    c[0] = 1.0; // w = sin(pi r / R)
    WaveState state(0.0, SpectralField(grid, c), SpectralField::zero(grid));
    const EnergyBreakdown e = energy(state);
    const double radius = grid->radius();
    const double expected = 0.5 * 4.0 * std::numbers::pi * (radius / 2.0) *
                            std::pow(std::numbers::pi / radius, 2.0);
    CHECK(e.gradient == doctest::Approx(expected).epsilon(1e-13));
    CHECK(e.kinetic == 0.0);
}

TEST_CASE("mollified energy equals the energy once the cutoff clears the grid") {
    GridPtr grid = make_grid(256, 10.0);
    const WaveState state = seeded_smooth_state(grid, 9);
    const double big_cutoff = 2.0 * grid->max_frequency();
    const EnergyBreakdown raw = energy(state);
    const EnergyBreakdown mol = mollified_energy(state, big_cutoff, 0.75);
    CHECK(mol.kinetic == raw.kinetic);
    CHECK(mol.gradient == raw.gradient);
    CHECK(mol.quartic == raw.quartic);
}

TEST_CASE("mollified gradient scales per mode above twice the cutoff") {
    GridPtr grid = make_grid(256, 1.0);
    const double cutoff = grid->frequency(19); // modes 40+ sit above 2N
    std::vector<double> c(256, 0.0);
    for (std::size_t k = 60; k < 256; k += 13) c[k] = 1.0 / static_cast<double>(k);
    WaveState state(0.0, SpectralField(grid, c), SpectralField::zero(grid));
    const double s = 0.75;
    const EnergyBreakdown mol = mollified_energy(state, cutoff, s);
    double expected = 0.0;
    for (std::size_t k = 60; k < 256; k += 13) {
        const double rho = grid->frequency(k);
        const double factor = std::pow(cutoff / rho, 2.0 * (1.0 - s));
        expected += 0.5 * plancherel_factor(*grid) * rho * rho * c[k] * c[k] * factor;
    }
    CHECK(mol.gradient == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("smoothing never raises the quadratic energy parts") {
    // m <= 1 pointwise, so kinetic and gradient can only shrink; the
    // quartic part carries no ordering claim.
    GridPtr grid = make_grid(512, 14.0);
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const WaveState state = seeded_smooth_state(grid, seed);
        const EnergyBreakdown raw = energy(state);
        for (double cutoff : {1.0, 4.0, 32.0}) {
            const EnergyBreakdown mol = mollified_energy(state, cutoff, 0.75);
            CHECK(mol.kinetic <= raw.kinetic * (1.0 + 1e-15));
            CHECK(mol.gradient <= raw.gradient * (1.0 + 1e-15));
        }
    }
}

TEST_CASE("mollified gradient is nondecreasing in the cutoff") {
    GridPtr grid = make_grid(1024, 20.0);
    const WaveState state = make_rough_data(grid, 0.75, 13, RoughProfile{});
    double prev = 0.0;
    for (double cutoff : {8.0, 16.0, 32.0, 64.0}) {
        const double grad = mollified_energy(state, cutoff, 0.75).gradient;
        CHECK(grad >= prev);
        prev = grad;
    }
}

TEST_CASE("pair norm: zero state and the band comparison at s = 1") {
    GridPtr grid = make_grid(256, 8.0);
    CHECK(hs_pair_norm(zero_state(grid), 0.75) == 0.0);

    // No low-frequency content: (1 + rho)^2 lies within [1, 4] rho^2 for rho >= 1.
    std::vector<double> pos(256, 0.0), vel(256, 0.0);
    for (std::size_t k = 64; k < 200; ++k) {
        pos[k] = 1.0 / static_cast<double>(k * k);
        vel[k] = 1.0 / static_cast<double>(k * k);
    }
    WaveState state(0.0, SpectralField(grid, pos), SpectralField(grid, vel));
    const double pair = hs_pair_norm(state, 1.0);
    const EnergyBreakdown e = energy(state);
    const double quadratic = 2.0 * (e.kinetic + e.gradient);
    CHECK(pair >= 0.25 * quadratic);
    CHECK(pair <= 4.0 * quadratic);
}

TEST_CASE("pair norm vs mollified energy comparability across seeded runs") {
    // hs_pair(T) <= k_hs (|u0|_{H^s}^2 + (T^2+1) sup_t E(Iu)) with the
    // frozen comparability constant.
    const CalibratedConstants constants = CalibratedConstants::defaults();
    const double horizon = 2.0;
    double ratio_max = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        ObserverConfig obs;
        obs.channels.push_back({16.0, 0.75});
        GridPtr grid = make_grid(512, 20.0);
        const WaveState datum = seeded_smooth_state(grid, seed);
        SolverConfig cfg;
        cfg.dt = 2e-3;
        const Trajectory traj = evolve(datum, horizon, cfg, obs);
        double sup_e = 0.0;
        for (double e : traj.series().channels[0].energy) sup_e = std::max(sup_e, e);
        const double h0 = sobolev_norm(datum.position, 0.75, false);
        const double ratio = hs_pair_norm(traj.final(), 0.75) /
                             (h0 * h0 + (horizon * horizon + 1.0) * sup_e);
        CHECK(ratio > 0.0);
        CHECK(ratio <= constants.k_hs);
        ratio_max = std::max(ratio_max, ratio);
    }
    CHECK(ratio_max > 0.0);
}

TEST_CASE("default admissible pairs satisfy both relations exactly") {
    for (double s : {0.72, 0.75, 0.8, 0.9}) {
        const auto pairs = default_admissible_pairs(s);
        CHECK(pairs.size() >= 4);
        for (const AdmissiblePair& p : pairs) {
            CHECK(p.defect() <= 1e-12);
            CHECK(p.m >= 0.0);
            CHECK(p.m < 1.0);
        }
    }
    CHECK_FALSE(AdmissiblePair{2.0, 2.0, 0.0}.valid());  // q must exceed 2
    CHECK_FALSE(AdmissiblePair{3.0, 2.0, 0.5}.valid());  // dimensional relation broken
}

TEST_CASE("mixed norm: zero and constant-in-time trajectories") {
    GridPtr grid = make_grid(128, 6.0);
    const Trajectory zero = constant_trajectory(SpectralField::zero(grid), 0.0, 2.0, 9);
    CHECK(mixed_norm(zero, Window{0.0, 2.0}, 4.0, 4.0) == 0.0);

    const WaveState bump = make_bump_data(grid, 1.0, 2.0, 0.8);
    const Trajectory constant = constant_trajectory(bump.position, 0.0, 2.0, 9);
    const double q = 4.0, r = 4.0;
    const double expected = std::pow(2.0, 1.0 / q) * lebesgue_norm(bump.position, r, 2);
    CHECK(mixed_norm(constant, Window{0.0, 2.0}, q, r) ==
          doctest::Approx(expected).epsilon(1e-12));

    CHECK_THROWS(mixed_norm(constant, Window{-1.0, 2.0}, q, r));
    CHECK_THROWS(mixed_norm(constant, Window{0.0, 3.0}, q, r));
}

TEST_CASE("mixed norm is stable under snapshot-stride halving") {
    ObserverConfig obs;
    const Trajectory coarse = smooth_run(2.0, obs, 20);
    const Trajectory fine = smooth_run(2.0, obs, 10);
    const Window window{0.0, 2.0};
    const double a = mixed_norm(coarse, window, 4.0, 4.0);
    const double b = mixed_norm(fine, window, 4.0, 4.0);
    CHECK(std::abs(a - b) / b < 0.005);
}

TEST_CASE("z functional: singleton reduction and supremum monotonicity") {
    ObserverConfig obs;
    obs.channels.push_back({16.0, 0.75});
    const Trajectory traj = smooth_run(1.0, obs, 5);
    const Window window{0.0, 1.0};

    const AdmissiblePair energy_pair{std::numeric_limits<double>::infinity(), 2.0, 0.0};
    const double z = z_functional(traj, window, 16.0, 0.75, {energy_pair});
    double sup_e2 = 0.0;
    for (std::size_t i = 0; i < traj.snapshots().size(); ++i) {
        const WaveState& snap = traj.snapshots()[i];
        const EnergyBreakdown mol = mollified_energy(snap, 16.0, 0.75);
        sup_e2 = std::max(sup_e2, mol.kinetic + mol.gradient);
    }
    // Z adds separate sups: sup_t|DIu| + sup_t|I du/dt|, so
    //   sqrt(2 sup(kin+grad)) <= z <= 2 sqrt(2) sqrt(sup(kin+grad)).
    CHECK(z >= std::sqrt(2.0 * sup_e2) * (1.0 - 1e-9));
    CHECK(z <= 2.0 * std::numbers::sqrt2 * std::sqrt(sup_e2) * (1.0 + 1e-9));

    const auto pairs = default_admissible_pairs(0.75);
    const std::vector<AdmissiblePair> subset(pairs.begin(), pairs.begin() + 2);
    CHECK(z_functional(traj, window, 16.0, 0.75, pairs) >=
          z_functional(traj, window, 16.0, 0.75, subset));
    CHECK_THROWS(z_functional(traj, window, 16.0, 0.75, {}));

    const Trajectory dead = constant_trajectory(
        SpectralField::zero(make_grid(128, 6.0)), 0.0, 1.0, 5);
    CHECK(z_functional(dead, Window{0.0, 1.0}, 16.0, 0.75, pairs) == 0.0);
}

TEST_CASE("z functional is stable under grid doubling") {
    const auto pairs = default_admissible_pairs(0.75);
    auto z_at = [&](std::size_t m) {
        GridPtr grid = make_grid(m, 20.0);
        const WaveState datum = make_bump_data(grid, 1.0, 3.0, 1.0);
        SolverConfig cfg;
        cfg.dt = 2e-3;
        cfg.snapshot_stride = 10;
        const Trajectory traj = evolve(datum, 1.0, cfg, {});
        return z_functional(traj, Window{0.0, 1.0}, 16.0, 0.75, pairs);
    };
    const double coarse = z_at(256);
    const double fine = z_at(512);
    CHECK(fine / coarse < 3.0);
    CHECK(coarse / fine < 3.0);
}

TEST_CASE("morawetz integrals: additivity, positivity, and the energy bound") {
    ObserverConfig obs;
    obs.base = true;
    const Trajectory traj = smooth_run(3.0, obs);
    const double whole = morawetz_lhs(traj, Window{0.0, 3.0}, false);
    const double left = morawetz_lhs(traj, Window{0.0, 1.5}, false);
    const double right = morawetz_lhs(traj, Window{1.5, 3.0}, false);
    CHECK(whole >= 0.0);
    CHECK(std::abs(whole - (left + right)) <= 1e-12 * whole);

    // Accumulator is nondecreasing in the window end.
    double prev = 0.0;
    for (double t = 0.5; t <= 3.0; t += 0.5) {
        const double v = morawetz_lhs(traj, Window{0.0, t}, false);
        CHECK(v >= prev);
        prev = v;
    }

    const double bound = 2.0 * (energy(traj.initial()).total() + energy(traj.final()).total());
    CHECK(whole <= bound * (1.0 + 1e-3));
}

TEST_CASE("remainder integrals vanish when the smoothing operator is trivial") {
    GridPtr grid = make_grid(256, 10.0);
    const WaveState datum = seeded_smooth_state(grid, 21);
    SolverConfig cfg;
    cfg.dt = 5e-3;
    const double big_cutoff = 2.0 * grid->max_frequency();
    ObserverConfig obs;
    obs.channels.push_back({big_cutoff, 0.75});
    const Trajectory traj = evolve(datum, 1.0, cfg, obs);
    const auto [r1, r2] = remainder_integrals(traj, Window{0.0, 1.0}, big_cutoff, 0.75);
    CHECK(r1 == 0.0);
    CHECK(r2 == 0.0);

    CHECK_THROWS(remainder_integrals(traj, Window{0.0, 1.0}, 999.0, 0.75));
    // Raw weight needs the base observers, which this run did not enable.
    CHECK_THROWS(morawetz_lhs(traj, Window{0.0, 1.0}, false));
}

TEST_CASE("remainders sit at the dealiasing floor when the cube stays below the cutoff") {
    GridPtr grid = make_grid(256, 1.0);
    // Data at rho <= N/4 keeps the cube below N.
    const double cutoff = 16.0 * grid->frequency(0) * 4.0;
    std::vector<double> c(256, 0.0);
    for (std::size_t k = 0; k < 16; ++k) c[k] = 0.3 / static_cast<double>(k + 1);
    WaveState datum(0.0, SpectralField(grid, c), SpectralField::zero(grid));
    SolverConfig cfg;
    cfg.dt = 1e-3;
    ObserverConfig obs;
    obs.channels.push_back({cutoff, 0.75});
    const Trajectory traj = evolve(datum, 0.2, cfg, obs);
    const auto [r1, r2] = remainder_integrals(traj, Window{0.0, 0.2}, cutoff, 0.75);
    CHECK(std::abs(r1) < 1e-10);
    CHECK(std::abs(r2) < 1e-10);
}

TEST_CASE("smoothed-energy increment equals minus the commutator pairing") {
    // d/dt E(Iu) = -int (d/dt Iu)((Iu)^3 - I(u^3)) dx for the exact flow;
    // the recorded energy and bracket series must agree to solver accuracy.
    GridPtr grid = make_grid(512, 16.0);
    RoughProfile profile;
    profile.amplitude = 0.25;
    const WaveState datum = taper_state(make_rough_data(grid, 0.75, 7, profile), 5.0, 2.0);
    SolverConfig cfg;
    cfg.dt = 1e-3;
    cfg.health_threshold = 0.1;
    ObserverConfig obs;
    obs.channels.push_back({16.0, 0.75});
    const Trajectory traj = evolve(datum, 2.0, cfg, obs);
    const StepSeries& series = traj.series();
    const std::vector<double>& energy_series = series.channels[0].energy;
    const double increment = energy_series.back() - energy_series.front();
    const double pairing =
        -series_integral(series.times, series.channels[0].bracket, 0.0, 2.0);
    CHECK(increment == doctest::Approx(pairing).epsilon(0.02));
    CHECK(std::abs(increment) > 1e-8); // the check must not be vacuous
}

TEST_CASE("radial pointwise ratio: dense oracle, invariance, corpus bound") {
    GridPtr grid = make_grid(1024, 7.0);
    std::vector<double> c(1024, 0.0);
    c[0] = 1.0;
    const SpectralField mode(grid, c);
    const double ratio = radial_sobolev_ratio(mode);

    // Dense-evaluation oracle.  With y = pi r / R:
    //   |u| sqrt(r) = sqrt(pi/R) sin(y)/sqrt(y),   |u|_{Hdot1} = pi sqrt(2 pi / R),
    // so the ratio is max_y [sin(y)/sqrt(y)] / (pi sqrt(2)).
    double oracle = 0.0;
    for (double y = 1e-4; y < std::numbers::pi; y += 1e-6) {
        oracle = std::max(oracle, std::sin(y) / std::sqrt(y));
    }
    oracle /= std::numbers::pi * std::numbers::sqrt2;
    CHECK(ratio == doctest::Approx(oracle).epsilon(1e-4));
    CHECK(ratio == doctest::Approx(0.19158).epsilon(1e-3));

    std::vector<double> scaled = c;
    for (double& x : scaled) x *= 17.5;
    CHECK(radial_sobolev_ratio(SpectralField(grid, scaled)) ==
          doctest::Approx(ratio).epsilon(1e-14));

    CHECK_THROWS(radial_sobolev_ratio(SpectralField::zero(grid)));

    const CalibratedConstants constants = CalibratedConstants::defaults();
    GridPtr audit_grid = make_grid(512, 12.0);
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const double r = radial_sobolev_ratio(random_h1_field(audit_grid, seed));
        CHECK(r <= constants.c_s);
    }
}

TEST_CASE("hardy ratios respect 3/(3-p)") {
    GridPtr grid = make_grid(512, 12.0);
    const SpectralField f = random_h1_field(grid, 7);
    CHECK_THROWS(hardy_ratio(f, 1.0));
    CHECK_THROWS(hardy_ratio(f, 3.0));

    std::vector<double> scaled = f.coeffs();
    for (double& x : scaled) x *= 3.7;
    CHECK(hardy_ratio(SpectralField(grid, scaled), 2.0) ==
          doctest::Approx(hardy_ratio(f, 2.0)).epsilon(1e-13));

    for (double p : {1.5, 2.0, 2.5}) {
        const double bound = 3.0 / (3.0 - p);
        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
            const double ratio = hardy_ratio(random_h1_field(grid, seed), p);
            CHECK(ratio <= bound * (1.0 + 1e-3));
        }
    }
}
