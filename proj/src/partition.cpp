#include "imlab/partition.hpp"

#include "imlab/errors.hpp"
#include "imlab/spacetime.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace imlab {

NormProfile::NormProfile(std::vector<double> times, std::vector<double> l6_values)
    : times_(std::move(times)) {
    if (times_.size() != l6_values.size() || times_.size() < 2) {
        throw std::invalid_argument("NormProfile: need >= 2 matched samples");
    }
    sixth_power_.resize(l6_values.size());
    for (std::size_t i = 0; i < l6_values.size(); ++i) {
        if (!(l6_values[i] >= 0.0)) throw std::invalid_argument("NormProfile: negative sample");
        const double v2 = l6_values[i] * l6_values[i];
        sixth_power_[i] = v2 * v2 * l6_values[i] * l6_values[i];
    }
    prefix_.assign(times_.size(), 0.0);
    for (std::size_t i = 1; i < times_.size(); ++i) {
        const double dt = times_[i] - times_[i - 1];
        if (!(dt > 0.0)) throw std::invalid_argument("NormProfile: times must increase");
        max_spacing_ = std::max(max_spacing_, dt);
        prefix_[i] = prefix_[i - 1] + 0.5 * (sixth_power_[i] + sixth_power_[i - 1]) * dt;
    }
}

NormProfile NormProfile::from_trajectory(const Trajectory& traj, double cutoff,
                                         double regularity) {
    const std::size_t c = traj.channel_index(cutoff, regularity);
    return NormProfile(traj.series().times, traj.series().channels[c].l6);
}

double NormProfile::value_at(double t) const {
    double v6 = series_value(times_, sixth_power_, t);
    return std::pow(std::max(v6, 0.0), 1.0 / 6.0);
}

double NormProfile::norm6(double a, double b) const {
    auto cumulative = [this](double t) {
        if (t <= times_.front()) return 0.0;
        if (t >= times_.back()) return prefix_.back();
        const auto it = std::upper_bound(times_.begin(), times_.end(), t);
        const std::size_t i = static_cast<std::size_t>(it - times_.begin());
        const double dt = t - times_[i - 1];
        const double v_t = series_value(times_, sixth_power_, t);
        return prefix_[i - 1] + 0.5 * (sixth_power_[i - 1] + v_t) * dt;
    };
    const double integral = std::max(0.0, cumulative(b) - cumulative(a));
    return std::pow(integral, 1.0 / 6.0);
}

double PartitionConfig::length_cap() const {
    return c2 * std::pow(cutoff, (1.0 - regularity) / (regularity - 0.5));
}

std::size_t Partition::count_norm_saturated() const {
    std::size_t n = 0;
    for (const auto& j : intervals) n += j.reason == StopReason::NormSaturated ? 1 : 0;
    return n;
}

std::size_t Partition::count_length_capped() const {
    std::size_t n = 0;
    for (const auto& j : intervals) n += j.reason == StopReason::LengthCapped ? 1 : 0;
    return n;
}

std::string to_string(StopReason reason) {
    switch (reason) {
        case StopReason::NormSaturated: return "norm-saturated";
        case StopReason::LengthCapped: return "length-capped";
        case StopReason::Final: return "final";
    }
    return "?";
}

Partition interval_partition(const NormProfile& profile, Window window,
                             const PartitionConfig& config) {
    if (!(config.c1 > 0.0) || !(config.c2 > 0.0)) {
        throw ConfigError("interval_partition: c1 and c2 must be positive");
    }
    if (!(config.regularity > 0.5 && config.regularity < 1.0) || !(config.cutoff >= 1.0)) {
        throw ConfigError("interval_partition: need cutoff >= 1 and s in (1/2, 1)");
    }
    if (window.a < profile.start() - 1e-12 || window.b > profile.end() + 1e-12 ||
        window.a >= window.b) {
        throw ConfigError("interval_partition: window outside profile span");
    }
    if (profile.max_spacing() > config.root_tolerance * (1.0 + 1e-9)) {
        throw ConfigError("interval_partition: profile sample spacing " +
                          std::to_string(profile.max_spacing()) +
                          " exceeds root tolerance; need spacing <= " +
                          std::to_string(config.root_tolerance));
    }

    const double cap = config.length_cap();
    const double bisect_width = 0.25 * config.root_tolerance;
    Partition partition;
    partition.config = config;

    double cursor = window.a;
    const std::size_t guard = 1000000;
    while (cursor < window.b - 1e-12) {
        const double remaining = window.b - cursor;
        auto f = [&](double tau) {
            return profile.norm6(cursor, cursor + tau) - config.c1 * std::pow(tau, -1.0 / 3.0);
        };
        PartitionInterval interval;
        interval.a = cursor;
        if (f(remaining) < 0.0) {
            // Threshold never reached on what is left of the window.
            if (remaining <= cap) {
                interval.b = window.b;
                interval.reason = StopReason::Final;
            } else {
                interval.b = cursor + cap;
                interval.reason = StopReason::LengthCapped;
            }
        } else {
            // Unique root: f is strictly increasing and -> -inf at 0+.
            double hi = remaining;
            double lo = remaining;
            while (f(lo) >= 0.0) {
                lo *= 0.5;
                if (lo < 1e-300) throw std::runtime_error("interval_partition: degenerate profile");
            }
            while (hi - lo > bisect_width) {
                const double mid = 0.5 * (lo + hi);
                (f(mid) < 0.0 ? lo : hi) = mid;
            }
            // Commit the lower end: the threshold condition holds with <=.
            if (lo <= cap) {
                interval.b = cursor + lo;
                interval.reason = StopReason::NormSaturated;
            } else {
                interval.b = cursor + cap;
                interval.reason = StopReason::LengthCapped;
            }
        }
        interval.norm6 = profile.norm6(interval.a, interval.b);
        partition.intervals.push_back(interval);
        cursor = interval.b;
        if (partition.intervals.size() > guard) {
            throw std::runtime_error("interval_partition: interval budget exhausted");
        }
    }
    return partition;
}

PartitionAudit partition_audit(const Partition& partition, const NormProfile& profile,
                               double lambda, double horizon) {
    const PartitionConfig& cfg = partition.config;
    if (partition.intervals.empty()) throw ConfigError("partition_audit: empty partition");
    const double cap = cfg.length_cap();
    const double slack = 1e-9;

    double covered = 0.0;
    for (std::size_t i = 0; i < partition.intervals.size(); ++i) {
        const PartitionInterval& j = partition.intervals[i];
        const std::string tag = "interval " + std::to_string(i) + " [" + std::to_string(j.a) +
                                ", " + std::to_string(j.b) + "] (" + to_string(j.reason) + ")";
        auto fail = [&](const std::string& what) {
            throw std::runtime_error("partition_audit: " + what + " on " + tag);
        };
        if (!(j.b > j.a)) fail("empty interval");
        if (i > 0 && partition.intervals[i - 1].b != j.a) fail("contiguity broken");
        covered += j.length();

        // Both local-boundedness hypotheses, the length cap and the norm
        // threshold with <=, must hold on every interval.
        if (j.length() > cap * (1.0 + slack)) fail("length cap violated");
        const double achieved = profile.norm6(j.a, j.b);
        const double threshold = cfg.c1 * std::pow(j.length(), -1.0 / 3.0);
        if (achieved > threshold * (1.0 + slack) + slack) fail("norm threshold violated");

        switch (j.reason) {
            case StopReason::NormSaturated: {
                // The root lies within root_tolerance to the right.
                const double probe = j.length() + cfg.root_tolerance;
                const double f_probe = profile.norm6(j.a, j.a + probe) -
                                       cfg.c1 * std::pow(probe, -1.0 / 3.0);
                if (f_probe < -slack) fail("saturation breakpoint off by more than tolerance");
                break;
            }
            case StopReason::LengthCapped:
                if (std::abs(j.length() - cap) > slack * std::max(1.0, cap)) {
                    fail("capped interval does not meet the cap");
                }
                break;
            case StopReason::Final:
                if (i + 1 != partition.intervals.size()) fail("non-terminal final interval");
                break;
        }
    }
    const double expected_span = lambda * horizon;
    if (std::abs(covered - expected_span) > 1e-9 * std::max(1.0, expected_span)) {
        throw std::runtime_error("partition_audit: covering broken, total length " +
                                 std::to_string(covered) + " != " +
                                 std::to_string(expected_span));
    }

    PartitionAudit audit;
    audit.total = partition.intervals.size();
    audit.norm_saturated = partition.count_norm_saturated();
    audit.length_capped = partition.count_length_capped();
    const double s = cfg.regularity;
    audit.cardinality_bound = std::pow(cfg.cutoff, 4.0 * (1.0 - s) / (6.0 * s - 3.0)) *
                                  std::pow(horizon, 2.0 / 3.0) +
                              horizon + 1.0;
    audit.ratio = static_cast<double>(audit.total) / audit.cardinality_bound;
    return audit;
}

} // namespace imlab
