#include "imlab/sweeps.hpp"

#include "imlab/energy.hpp"
#include "imlab/errors.hpp"
#include "imlab/fit.hpp"

#include <algorithm>
#include <cmath>

namespace imlab {

ConservationSweep conservation_sweep(const WaveState& datum, double regularity,
                                     const std::vector<double>& cutoffs, double horizon,
                                     const SolverConfig& solver, double c1, double c2,
                                     double root_tolerance,
                                     const std::vector<AdmissiblePair>& pairs) {
    if (cutoffs.size() < 4) throw ConfigError("conservation_sweep: need >= 4 cutoffs");

    ObserverConfig observers;
    observers.base = true;
    for (double n : cutoffs) observers.channels.push_back({n, regularity});

    const Trajectory traj = evolve(datum, datum.time + horizon, solver, observers);
    const Window window{datum.time, datum.time + horizon};

    ConservationSweep sweep;
    std::vector<double> fit_n, fit_inc, fit_rem;
    for (double n : cutoffs) {
        ConservationRun run;
        run.cutoff = n;
        run.healthy = traj.health_ok();
        const std::size_t c = traj.channel_index(n, regularity);
        const StepSeries& series = traj.series();
        const std::vector<double>& energy = series.channels[c].energy;

        PartitionConfig pcfg;
        pcfg.c1 = c1;
        pcfg.c2 = c2;
        pcfg.cutoff = n;
        pcfg.regularity = regularity;
        pcfg.root_tolerance = root_tolerance;
        const NormProfile profile(series.times, series.channels[c].l6);
        const Partition partition = interval_partition(profile, window, pcfg);
        const PartitionAudit audit = partition_audit(partition, profile, 1.0, horizon);
        run.interval_count = audit.total;
        run.cardinality_ratio = audit.ratio;

        for (const PartitionInterval& j : partition.intervals) {
            const double start = series_value(series.times, energy, j.a);
            const double sup = series_sup(series.times, energy, j.a, j.b);
            const double inc = std::abs(sup - start);
            run.total_increment += inc;
            run.max_increment = std::max(run.max_increment, inc);
            const double z = z_functional(traj, Window{j.a, j.b}, n, regularity, pairs);
            run.z4_max = std::max(run.z4_max, z * z * z * z);
        }

        const auto [r1, r2] = remainder_integrals(traj, window, n, regularity);
        run.r1 = r1;
        run.r2 = r2;
        run.mollified_lhs = morawetz_lhs(traj, window, true, n, regularity);
        const double e0 = series_value(series.times, energy, window.a);
        const double eT = series_value(series.times, energy, window.b);
        run.mollified_defect = run.mollified_lhs - 2.0 * (e0 + eT);

        if (run.healthy) {
            fit_n.push_back(n);
            fit_inc.push_back(run.total_increment);
            fit_rem.push_back(std::abs(run.r1) + std::abs(run.r2));
        }
        sweep.runs.push_back(run);
    }
    if (fit_n.size() >= 2) {
        sweep.increment_slope = loglog_slope(fit_n, fit_inc);
        sweep.remainder_slope = loglog_slope(fit_n, fit_rem);
    }
    return sweep;
}

double growth_ceiling(double s) {
    if (!(s > 0.7 && s < 1.0)) throw ConfigError("growth_ceiling: s must lie in (7/10, 1)");
    if (s <= 5.0 / 6.0) return (16.0 * s - 10.0) / (10.0 * s - 7.0);
    return 2.0 * s / (2.0 * s - 1.0);
}

double growth_cutoff_choice(double s, double horizon, double c_iter, double epsilon) {
    // Smallest dyadic N whose iteration budget beats the interval count:
    //   s <= 5/6:  c N^{4(1-s)/(6s-3)} T^{2/3} <= N^{1-eps}/6
    //   s >  5/6:  c T <= N^{1-eps}/6
    const double target = s <= 5.0 / 6.0
                              ? 6.0 * c_iter * std::pow(horizon, 2.0 / 3.0)
                              : 6.0 * c_iter * horizon;
    const double exponent = s <= 5.0 / 6.0
                                ? 1.0 - epsilon - 4.0 * (1.0 - s) / (6.0 * s - 3.0)
                                : 1.0 - epsilon;
    if (!(exponent > 0.0)) throw ConfigError("growth_cutoff_choice: no admissible N exponent");
    double n = 2.0;
    while (std::pow(n, exponent) < target && n < 1e15) n *= 2.0;
    return n;
}

GrowthResult growth_experiment(const WaveState& datum, double s,
                               const std::vector<double>& horizons, const SolverConfig& solver,
                               double c_iter, double epsilon) {
    if (!(s > 0.7 && s < 1.0)) throw ConfigError("growth_experiment: s must lie in (7/10, 1)");
    if (horizons.size() < 2 || !std::is_sorted(horizons.begin(), horizons.end())) {
        throw ConfigError("growth_experiment: horizons must be increasing, >= 2 entries");
    }

    GrowthResult result;
    result.ceiling = growth_ceiling(s);

    WaveState current = datum;
    std::vector<double> fit_t, fit_norm;
    for (double horizon : horizons) {
        const Trajectory segment = evolve(current, datum.time + horizon, solver, {});
        current = segment.final();
        GrowthPoint point;
        point.horizon = horizon;
        point.cutoff_choice = growth_cutoff_choice(s, horizon, c_iter, epsilon);
        point.hs_pair = hs_pair_norm(current, s);
        point.healthy = segment.health_ok();
        if (point.healthy) {
            fit_t.push_back(horizon);
            fit_norm.push_back(point.hs_pair);
        }
        result.points.push_back(point);
    }
    if (fit_t.size() >= 2) result.fitted_exponent = loglog_slope(fit_t, fit_norm);
    return result;
}

} // namespace imlab
