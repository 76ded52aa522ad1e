#ifndef IMLAB_PARTITION_HPP
#define IMLAB_PARTITION_HPP

#include "imlab/solver.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace imlab {

// Sampled |v(t)|_{L^6_x} profile; the partition algorithm only consumes
// this, so synthetic profiles and recorded trajectories share one path.
class NormProfile {
  public:
    NormProfile(std::vector<double> times, std::vector<double> l6_values);

    static NormProfile from_trajectory(const Trajectory& traj, double cutoff,
                                       double regularity);

    double start() const { return times_.front(); }
    double end() const { return times_.back(); }
    double max_spacing() const { return max_spacing_; }

    // (int_a^b l6(t)^6 dt)^{1/6}; the integrand is interpolated linearly,
    // so the cumulative integral is continuous and strictly monotone
    // wherever l6 > 0.
    double norm6(double a, double b) const;

    double value_at(double t) const;

  private:
    std::vector<double> times_;
    std::vector<double> sixth_power_;
    std::vector<double> prefix_; // trapezoid prefix of l6^6
    double max_spacing_ = 0.0;
};

struct PartitionConfig {
    double c1 = 0.1;           // threshold constant in |Iu|_{L6L6} <= c1/|J|^{1/3}
    double c2 = 1.0;           // length-cap constant
    double cutoff = 0.0;       // N
    double regularity = 0.0;   // s
    double root_tolerance = 1e-3;

    double length_cap() const; // c2 * N^{(1-s)/(s-1/2)}
};

enum class StopReason { NormSaturated, LengthCapped, Final };

struct PartitionInterval {
    double a = 0.0;
    double b = 0.0;
    StopReason reason = StopReason::Final;
    double norm6 = 0.0; // achieved |Iu|_{L^6_t L^6_x} on [a, b]
    double length() const { return b - a; }
};

struct Partition {
    std::vector<PartitionInterval> intervals;
    PartitionConfig config;
    std::size_t count_norm_saturated() const;
    std::size_t count_length_capped() const;
};

// Greedy left-to-right construction: at cursor L the root of
//   f_L(tau) = |Iu|_{L^6([L, L+tau]) L^6_x} - c1 tau^{-1/3}     (strictly increasing)
// is bisected to root_tolerance; the interval takes min(root, cap), the
// window remainder when f stays negative, always capped by the length cap.
// The committed breakpoint is the bracket's lower end, so the threshold
// condition holds with <= on every interval.
Partition interval_partition(const NormProfile& profile, Window window,
                             const PartitionConfig& config);

struct PartitionAudit {
    std::size_t total = 0;
    std::size_t norm_saturated = 0;
    std::size_t length_capped = 0;
    double cardinality_bound = 0.0; // N^{4(1-s)/(6s-3)} T^{2/3} + T + 1
    double ratio = 0.0;             // total / cardinality_bound
};

// Re-checks the structural invariants (contiguity, covering lambda*horizon,
// per-interval conditions recomputed from the profile) and reports the
// cardinality ratio; throws naming the first offending interval.
PartitionAudit partition_audit(const Partition& partition, const NormProfile& profile,
                               double lambda, double horizon);

std::string to_string(StopReason reason);

} // namespace imlab

#endif
