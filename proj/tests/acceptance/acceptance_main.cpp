// Acceptance suite: one check per release criterion, each printed as a
// single PASS/FAIL line with the measured quantities and thresholds.
// Exit code is the number of failed criteria.

#include "imlab/constants.hpp"
#include "imlab/energy.hpp"
#include "imlab/fit.hpp"
#include "imlab/inequalities.hpp"
#include "imlab/initial_data.hpp"
#include "imlab/norms.hpp"
#include "imlab/partition.hpp"
#include "imlab/scaling.hpp"
#include "imlab/sweeps.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace imlab;

namespace {

int failures = 0;

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

void record(int id, const std::string& name, bool pass, const std::string& details,
            double seconds) {
    std::printf("[%s] %2d %-24s %s (%.1f s)\n", pass ? "PASS" : "FAIL", id, name.c_str(),
                details.c_str(), seconds);
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string fmt(const char* pattern, ...) {
    char buf[512];
    va_list args;
    va_start(args, pattern);
    std::vsnprintf(buf, sizeof(buf), pattern, args);
    va_end(args);
    return buf;
}

double state_distance(const WaveState& a, const WaveState& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < a.modes(); ++k) {
        const double dp = a.position.coeff(k) - b.position.coeff(k);
        const double dv = a.velocity.coeff(k) - b.velocity.coeff(k);
        num += dp * dp + dv * dv;
        den += b.position.coeff(k) * b.position.coeff(k) +
               b.velocity.coeff(k) * b.velocity.coeff(k);
    }
    return std::sqrt(num / den);
}

// 1. Exact linear flow against the closed-form rotation.
void criterion_linear_flow() {
    Stopwatch watch;
    GridPtr grid = make_grid(1024, 20.0);
    const WaveState datum = make_bump_data(grid, 1.0, 3.0, 1.0);
    SolverConfig cfg;
    cfg.dt = 0.05;
    cfg.cubic_enabled = false;
    cfg.snapshot_stride = 1000000;
    const Trajectory traj = evolve(datum, 5.0, cfg, {});
    const WaveState closed_form = linear_flow(datum, 5.0);
    const double dist = state_distance(traj.final(), closed_form);
    const EnergyBreakdown e0 = energy(datum);
    const EnergyBreakdown eT = energy(traj.final());
    const double quad0 = e0.kinetic + e0.gradient;
    const double drift = std::abs((eT.kinetic + eT.gradient) - quad0) / quad0;
    const double secs = watch.seconds();
    record(1, "linear-flow", dist <= 1e-12 && drift <= 1e-12 && secs < 1.0,
           fmt("state err %.2e (<=1e-12), energy drift %.2e (<=1e-12)", dist, drift), secs);
}

// 2. Nonlinear energy conservation and second-order self-convergence.
void criterion_conservation() {
    Stopwatch watch;
    GridPtr grid = make_grid(2048, 40.0);
    const WaveState datum = make_bump_data(grid, 1.0, 6.0, 2.0);
    SolverConfig cfg;
    cfg.dt = 1e-3;
    cfg.snapshot_stride = 1000000;
    const Trajectory traj = evolve(datum, 10.0, cfg, {});
    const double e0 = energy(traj.initial()).total();
    const double eT = energy(traj.final()).total();
    const double drift = std::abs(eT - e0) / e0;

    auto final_at = [&](double dt) {
        SolverConfig c = cfg;
        c.dt = dt;
        return evolve(datum, 0.5, c, {}).final();
    };
    const WaveState u1 = final_at(0.02);
    const WaveState u2 = final_at(0.01);
    const WaveState u3 = final_at(0.005);
    const double order = std::log2(state_distance(u1, u2) / state_distance(u2, u3));
    const double secs = watch.seconds();
    record(2, "energy-conservation",
           drift <= 1e-6 && std::abs(order - 2.0) <= 0.2 && secs < 60.0,
           fmt("drift %.2e (<=1e-6), order %.2f (2.0+-0.2)", drift, order), secs);
}

// 3. Morawetz-Strauss bound over ten seeded smooth runs.
void criterion_morawetz() {
    Stopwatch watch;
    GridPtr grid = make_grid(1024, 24.0);
    SolverConfig cfg;
    cfg.dt = 2e-3;
    cfg.snapshot_stride = 100;
    ObserverConfig obs;
    obs.base = true;
    double worst_margin = 0.0;
    bool pass = true;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const WaveState datum = seeded_smooth_state(grid, seed);
        const Trajectory traj = evolve(datum, 5.0, cfg, obs);
        const double lhs = morawetz_lhs(traj, Window{0.0, 5.0}, false);
        const double bound =
            2.0 * (energy(traj.initial()).total() + energy(traj.final()).total());
        worst_margin = std::max(worst_margin, lhs / bound);
        pass = pass && lhs <= bound * (1.0 + 1e-3);
    }
    const double secs = watch.seconds();
    record(3, "morawetz-strauss", pass && secs < 300.0,
           fmt("worst lhs/bound %.3f (<=1.001) over 10 seeds", worst_margin), secs);
}

struct SweepOutcome {
    ConservationSweep sweep;
    double horizon = 4.0;
};

SweepOutcome shared_sweep() {
    GridPtr grid = make_grid(1024, 16.0);
    RoughProfile profile;
    profile.amplitude = 0.05;
    profile.spectral_slope_margin = 0.05;
    const WaveState datum = taper_state(make_rough_data(grid, 0.75, 7, profile), 5.0, 2.0);
    SolverConfig cfg;
    cfg.dt = 1e-3;
    cfg.snapshot_stride = 20;
    cfg.health_threshold = 0.1; // prescribed-slope data carries ~4% tail energy
    SweepOutcome out;
    out.sweep = conservation_sweep(datum, 0.75, {8.0, 16.0, 32.0, 64.0}, out.horizon, cfg,
                                   0.1, 1.0, 5e-3, default_admissible_pairs(0.75));
    return out;
}

// 4. Almost-conservation decay rate of the smoothed energy increments.
void criterion_almost_conservation(const SweepOutcome& out) {
    bool decreasing = true;
    for (std::size_t i = 1; i < out.sweep.runs.size(); ++i) {
        decreasing =
            decreasing && out.sweep.runs[i].total_increment < out.sweep.runs[i - 1].total_increment;
    }
    bool healthy = true;
    for (const ConservationRun& run : out.sweep.runs) healthy = healthy && run.healthy;
    record(4, "almost-conservation",
           out.sweep.increment_slope <= -0.5 && decreasing && healthy,
           fmt("slope %.2f (<=-0.5), strictly decreasing %s", out.sweep.increment_slope,
               decreasing ? "yes" : "no"),
           0.0);
}

// 5. Remainder decay and the almost Morawetz-Strauss defect bound.
void criterion_remainders(const SweepOutcome& out, const CalibratedConstants& constants) {
    bool defect_ok = true;
    double worst_defect = -1e300;
    for (const ConservationRun& run : out.sweep.runs) {
        const double allowance =
            constants.k_morawetz * (std::abs(run.r1) + std::abs(run.r2)) + 1e-6;
        defect_ok = defect_ok && run.mollified_defect <= allowance;
        worst_defect = std::max(worst_defect, run.mollified_defect - allowance);
    }
    record(5, "remainder-decay", out.sweep.remainder_slope <= -0.5 && defect_ok,
           fmt("|R| slope %.2f (<=-0.5), worst defect-allowance %.2e (<=0), K=%.1f",
               out.sweep.remainder_slope, worst_defect, constants.k_morawetz),
           0.0);
}

// 6. Pointwise inequality suite over 100 seeded fields.
void criterion_inequalities(const CalibratedConstants& constants) {
    Stopwatch watch;
    GridPtr grid = make_grid(512, 10.0);
    std::size_t sobolev_violations = 0;
    std::size_t hardy_violations = 0;
    double sobolev_max = 0.0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const SpectralField f = random_h1_field(grid, seed);
        const double ratio = radial_sobolev_ratio(f);
        sobolev_max = std::max(sobolev_max, ratio);
        if (ratio > constants.c_s) ++sobolev_violations;
        for (double p : {1.5, 2.0, 2.5}) {
            if (hardy_ratio(f, p) > 3.0 / (3.0 - p) * (1.0 + 1e-3)) ++hardy_violations;
        }
    }
    const double secs = watch.seconds();
    record(6, "inequality-suite",
           sobolev_violations == 0 && hardy_violations == 0 && secs < 60.0,
           fmt("sobolev max %.4f (c_s %.2f, %zu viol), hardy %zu viol", sobolev_max,
               constants.c_s, sobolev_violations, hardy_violations),
           secs);
}

// 7. Partition construction against the dense-scan oracle.
void criterion_partition() {
    Stopwatch watch;
    bool pass = true;
    std::string detail;

    // Constant profile: root at (c1/c)^2, unit intervals for c1 = c.
    {
        const double level = 0.2;
        std::vector<double> times, values;
        for (double t = 0.0; t <= 5.5 + 1e-9; t += 5e-4) {
            times.push_back(t);
            values.push_back(level);
        }
        const NormProfile profile(std::move(times), std::move(values));
        PartitionConfig cfg;
        cfg.c1 = level;
        cfg.c2 = 1.0;
        cfg.cutoff = 64.0;
        cfg.regularity = 0.75;
        cfg.root_tolerance = 1e-3;
        const Partition partition = interval_partition(profile, Window{0.0, 5.5}, cfg);
        pass = pass && partition.intervals.size() == 6;
        const double tau0 = partition.intervals.front().length();
        pass = pass && std::abs(tau0 - 1.0) <= 1e-3;
        detail = fmt("tau0 %.4f (1+-1e-3)", tau0);
        partition_audit(partition, profile, 1.0, 5.5);
    }

    // Twenty synthetic profiles, per-cursor oracle comparison.
    double worst_gap = 0.0;
    std::size_t mismatched_reasons = 0;
    for (std::uint64_t seed = 1; seed <= 20 && pass; ++seed) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const double base = 0.05 + 0.4 * unit(rng);
        const double wobble = 0.3 * base * unit(rng);
        const double omega = 1.0 + 6.0 * unit(rng);
        const double phase = 6.28 * unit(rng);
        const double ramp = 0.2 * base * unit(rng);
        std::vector<double> times, values;
        for (double t = 0.0; t <= 3.0 + 1e-9; t += 2.5e-4) {
            times.push_back(t);
            values.push_back(base + wobble * std::sin(omega * t + phase) + ramp * t);
        }
        const NormProfile profile(std::move(times), std::move(values));
        PartitionConfig cfg;
        cfg.c1 = 0.05 + 0.02 * static_cast<double>(seed % 5);
        cfg.c2 = 1.0;
        cfg.cutoff = (seed % 3 == 0) ? 2.0 : 64.0;
        cfg.regularity = 0.75;
        cfg.root_tolerance = 1e-3;
        const Window window{0.0, 3.0};
        const Partition partition = interval_partition(profile, window, cfg);
        partition_audit(partition, profile, 1.0, 3.0); // throws on invariant violation
        const double cap = cfg.length_cap();
        for (const PartitionInterval& j : partition.intervals) {
            const double remaining = window.b - j.a;
            auto f = [&](double tau) {
                return profile.norm6(j.a, j.a + tau) - cfg.c1 * std::pow(tau, -1.0 / 3.0);
            };
            double crossing = -1.0;
            for (double tau = cfg.root_tolerance / 8.0; tau <= remaining;
                 tau += cfg.root_tolerance / 8.0) {
                if (f(tau) >= 0.0) {
                    crossing = tau;
                    break;
                }
            }
            double expected_b;
            StopReason expected_reason;
            if (crossing < 0.0) {
                expected_b = remaining <= cap ? window.b : j.a + cap;
                expected_reason =
                    remaining <= cap ? StopReason::Final : StopReason::LengthCapped;
            } else if (crossing <= cap) {
                expected_b = j.a + crossing;
                expected_reason = StopReason::NormSaturated;
            } else {
                expected_b = j.a + cap;
                expected_reason = StopReason::LengthCapped;
            }
            worst_gap = std::max(worst_gap, std::abs(j.b - expected_b));
            if (j.reason != expected_reason) ++mismatched_reasons;
        }
    }
    pass = pass && worst_gap <= 1e-3 && mismatched_reasons == 0;
    const double secs = watch.seconds();
    record(7, "partition-oracle", pass,
           detail + fmt(", worst breakpoint gap %.2e (<=1e-3) over 20 profiles", worst_gap),
           secs);
}

// 8. Scaling-parameter selection exponent across regularities.
void criterion_lambda_selection() {
    Stopwatch watch;
    GridPtr grid = make_grid(8192, 1.0);
    struct Case {
        double s;
        double amplitude;
        std::vector<double> cutoffs;
    };
    // Amplitudes calibrated so lambda(N_min) clears the lambda = 1 floor
    // while 2 N_max lambda(N_max) stays below the band bottom (~8206).
    const std::vector<Case> cases = {
        {0.72, 3.1457, {8, 16, 32, 64}},
        {0.75, 3.4256, {8, 16, 32, 64, 128}},
        {0.80, 3.7702, {8, 16, 32, 64, 128}},
        {0.90, 4.8946, {8, 16, 32, 64, 128}},
    };
    bool pass = true;
    std::string detail;
    for (const Case& c : cases) {
        RoughProfile profile;
        profile.low_cut = 2612;
        profile.spectral_slope_margin = 0.25;
        profile.amplitude = c.amplitude;
        const WaveState datum = make_rough_data(grid, c.s, 11, profile);
        const LambdaSweep sweep = lambda_sweep(datum, c.s, c.cutoffs);
        const double gap = std::abs(sweep.fitted_exponent - sweep.theoretical_exponent);
        pass = pass && gap <= 0.25;
        detail += fmt("s=%.2f: %.2f/%.2f ", c.s, sweep.fitted_exponent,
                      sweep.theoretical_exponent);
        if (c.s == 0.75 && sweep.theoretical_exponent != 1.0) pass = false;
    }
    const double secs = watch.seconds();
    record(8, "lambda-selection", pass, detail + "(fit/theory, +-0.25)", secs);
}

// 9. Growth-exponent ceilings for the pair norm.
void criterion_growth() {
    Stopwatch watch;
    bool pass = true;
    std::string detail;
    for (double s : {0.75, 0.9}) {
        GridPtr grid = make_grid(1024, 25.0);
        RoughProfile profile;
        profile.amplitude = 0.6;
        const WaveState datum = taper_state(make_rough_data(grid, s, 7, profile), 5.0, 2.0);
        SolverConfig cfg;
        cfg.dt = 2e-3;
        cfg.snapshot_stride = 1000000;
        cfg.health_threshold = 0.1;
        const GrowthResult result =
            growth_experiment(datum, s, {2.0, 4.0, 8.0, 16.0}, cfg, 1.0, 0.01);
        const double limit = result.ceiling + 0.5;
        pass = pass && result.fitted_exponent <= limit;
        for (const GrowthPoint& p : result.points) pass = pass && p.healthy;
        detail += fmt("s=%.2f: %.2f<=%.2f ", s, result.fitted_exponent, limit);
    }
    const double secs = watch.seconds();
    record(9, "growth-ceiling", pass && secs < 1200.0, detail + "(exponent<=ceiling+0.5)",
           secs);
}

// 10. Exact scaling of the energy under the dilation symmetry.
void criterion_scaling() {
    Stopwatch watch;
    GridPtr grid = make_grid(512, 16.0);
    const WaveState state = seeded_smooth_state(grid, 12);
    const double e = energy(state).total();
    double worst = 0.0;
    for (double lambda : {2.0, 4.0, 8.0}) {
        const double scaled = energy(scale_state(state, lambda)).total();
        worst = std::max(worst, std::abs(scaled * lambda - e) / e);
    }
    const double secs = watch.seconds();
    record(10, "scaling-identity", worst <= 1e-6,
           fmt("worst |E(scaled)*lambda - E|/E = %.2e (<=1e-6)", worst), secs);
}

} // namespace

int main() {
    std::printf("acceptance suite\n");
    const CalibratedConstants constants = CalibratedConstants::load();

    criterion_linear_flow();
    criterion_conservation();
    criterion_morawetz();
    {
        Stopwatch watch;
        const SweepOutcome out = shared_sweep();
        const double secs = watch.seconds();
        std::printf("       (shared N-sweep: %.1f s)\n", secs);
        criterion_almost_conservation(out);
        criterion_remainders(out, constants);
    }
    criterion_inequalities(constants);
    criterion_partition();
    criterion_lambda_selection();
    criterion_growth();
    criterion_scaling();

    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures;
}
