#include "imlab/spacetime.hpp"

#include "imlab/errors.hpp"
#include "imlab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace imlab {

double AdmissiblePair::defect() const {
    const double inv_q = std::isinf(q) ? 0.0 : 1.0 / q;
    const double membership = std::max(0.0, inv_q + 1.0 / r - 0.5);
    const double dimensional = std::abs(inv_q + 3.0 / r - (1.5 - m));
    return std::max(membership, dimensional);
}

bool AdmissiblePair::valid(double tol) const {
    if (!(std::isinf(q) || q > 2.0)) return false;
    if (!(r >= 2.0) || std::isinf(r)) return false;
    if (!(m >= 0.0 && m <= 1.0)) return false;
    return defect() <= tol;
}

std::vector<AdmissiblePair> default_admissible_pairs(double s, double large_r) {
    // m follows from (q, r) through the dimensional relation.
    auto pair_for = [](double q, double r) {
        const double inv_q = std::isinf(q) ? 0.0 : 1.0 / q;
        return AdmissiblePair{q, r, 1.5 - inv_q - 3.0 / r};
    };
    std::vector<AdmissiblePair> pairs;
    pairs.push_back(pair_for(std::numeric_limits<double>::infinity(), 2.0)); // m = 0
    pairs.push_back(pair_for(4.0, 4.0));                                     // m = 1/2
    pairs.push_back(pair_for(6.0, 3.0));                                     // m = 1/3
    // (1/(1-s), 6) carries m = s; it sits inside W only for s >= 2/3.
    if (s >= 2.0 / 3.0) pairs.push_back(pair_for(1.0 / (1.0 - s), 6.0));
    // Large-r surrogate for the (2+, inf-) endpoint; q chosen to stay in W.
    const double q_guard = 1.0 / (0.5 - 1.0 / large_r) + 0.1;
    pairs.push_back(pair_for(q_guard, large_r));
    for (const AdmissiblePair& p : pairs) {
        if (!p.valid()) throw std::logic_error("default_admissible_pairs: invalid construction");
    }
    return pairs;
}

double series_value(const std::vector<double>& times, const std::vector<double>& values,
                    double t) {
    if (times.empty() || times.size() != values.size()) {
        throw std::invalid_argument("series_value: malformed series");
    }
    if (t <= times.front()) return values.front();
    if (t >= times.back()) return values.back();
    const auto it = std::upper_bound(times.begin(), times.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - times.begin());
    const double dt = times[i] - times[i - 1];
    if (dt <= 0.0) return values[i];
    const double frac = (t - times[i - 1]) / dt;
    return values[i - 1] + frac * (values[i] - values[i - 1]);
}

double series_sup(const std::vector<double>& times, const std::vector<double>& values, double a,
                  double b) {
    double peak = std::max(series_value(times, values, a), series_value(times, values, b));
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (times[i] >= a && times[i] <= b) peak = std::max(peak, values[i]);
    }
    return peak;
}

namespace {

void require_window(const Trajectory& traj, Window window) {
    if (window.a > window.b || window.a < traj.start_time() - 1e-12 ||
        window.b > traj.end_time() + 1e-12) {
        throw ConfigError("window outside trajectory span");
    }
}

} // namespace

double mixed_norm(const Trajectory& traj, Window window, double q, double r, StateSlot slot,
                  const std::optional<MultiplierSpec>& weight, std::size_t pad_factor) {
    require_window(traj, window);
    if (!(std::isinf(q) || q > 2.0)) throw ConfigError("mixed_norm: q must lie in (2, inf]");
    if (!(r >= 2.0) || std::isinf(r)) throw ConfigError("mixed_norm: r must lie in [2, inf)");

    // Only snapshots inside the window (plus one on each side for the
    // endpoint interpolation) contribute.
    const auto& snaps = traj.snapshots();
    std::size_t lo = 0;
    while (lo + 1 < snaps.size() && snaps[lo + 1].time <= window.a) ++lo;
    std::size_t hi = snaps.size() - 1;
    while (hi > 0 && snaps[hi - 1].time >= window.b) --hi;

    std::vector<double> times, g;
    times.reserve(hi - lo + 1);
    g.reserve(hi - lo + 1);
    for (std::size_t i = lo; i <= hi; ++i) {
        times.push_back(snaps[i].time);
        const SpectralField& raw =
            slot == StateSlot::Position ? snaps[i].position : snaps[i].velocity;
        const SpectralField field = weight ? apply_multiplier(raw, *weight) : raw;
        g.push_back(lebesgue_norm(field, r, pad_factor));
    }
    if (std::isinf(q)) return series_sup(times, g, window.a, window.b);
    if (window.length() == 0.0) return 0.0;
    std::vector<double> gq(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) gq[i] = std::pow(g[i], q);
    return std::pow(series_integral(times, gq, window.a, window.b), 1.0 / q);
}

double z_functional(const Trajectory& traj, Window window, double cutoff, double regularity,
                    const std::vector<AdmissiblePair>& pairs) {
    if (pairs.empty()) throw ConfigError("z_functional: empty admissible pair list");
    const RadialGrid& grid = traj.initial().grid();
    double best = 0.0;
    for (const AdmissiblePair& p : pairs) {
        if (!p.valid(1e-9)) throw ConfigError("z_functional: inadmissible pair supplied");
        const MultiplierSpec pos_weight = MultiplierSpec::custom(
            smoothing_times_power(grid, cutoff, regularity, 1.0 - p.m));
        const MultiplierSpec vel_weight =
            MultiplierSpec::custom(smoothing_times_power(grid, cutoff, regularity, -p.m));
        const double value =
            mixed_norm(traj, window, p.q, p.r, StateSlot::Position, pos_weight) +
            mixed_norm(traj, window, p.q, p.r, StateSlot::Velocity, vel_weight);
        best = std::max(best, value);
    }
    return best;
}

double morawetz_lhs(const Trajectory& traj, Window window, bool mollified, double cutoff,
                    double regularity) {
    require_window(traj, window);
    const StepSeries& series = traj.series();
    if (!mollified) {
        if (series.morawetz_raw.empty()) {
            throw ConfigError("morawetz_lhs: base observers were not enabled");
        }
        return series_integral(series.times, series.morawetz_raw, window.a, window.b);
    }
    const std::size_t c = traj.channel_index(cutoff, regularity);
    return series_integral(series.times, series.channels[c].morawetz, window.a, window.b);
}

std::pair<double, double> remainder_integrals(const Trajectory& traj, Window window,
                                              double cutoff, double regularity) {
    require_window(traj, window);
    const std::size_t c = traj.channel_index(cutoff, regularity);
    const StepSeries& series = traj.series();
    const double r1 = series_integral(series.times, series.channels[c].r1, window.a, window.b);
    const double r2 = series_integral(series.times, series.channels[c].r2, window.a, window.b);
    return {r1, r2};
}

} // namespace imlab
