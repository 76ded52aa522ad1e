#ifndef IMLAB_SPACETIME_HPP
#define IMLAB_SPACETIME_HPP

#include "imlab/multiplier.hpp"
#include "imlab/solver.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace imlab {

// Wave-admissible Strichartz exponents: (q, r) in (2, inf] x [2, inf) with
// 1/q + 1/r <= 1/2, tied to the regularity m by 1/q + 3/r = 3/2 - m.
struct AdmissiblePair {
    double q = 0.0;
    double r = 0.0;
    double m = 0.0;

    // Max deviation from the two defining relations (0 when exact).
    double defect() const;
    bool valid(double tol = 1e-12) const;
};

// The pair set the local estimates actually invoke; every entry satisfies
// both admissibility relations exactly.  The would-be L^inf endpoint is
// capped at r = 12 (membership in the admissible set requires r < inf).
std::vector<AdmissiblePair> default_admissible_pairs(double s, double large_r = 12.0);

enum class StateSlot { Position, Velocity };

// L^q-in-time over [a, b] of the per-snapshot L^r_x norm of the chosen
// slot, optionally after a diagonal weight.  q = inf takes the max over
// the window (endpoints interpolated).
double mixed_norm(const Trajectory& traj, Window window, double q, double r,
                  StateSlot slot = StateSlot::Position,
                  const std::optional<MultiplierSpec>& weight = std::nullopt,
                  std::size_t pad_factor = 2);

// max over the supplied pairs of
//   |D^{1-m} I u|_{L^q L^r} + |D^{-m} I du/dt|_{L^q L^r}.
double z_functional(const Trajectory& traj, Window window, double cutoff, double regularity,
                    const std::vector<AdmissiblePair>& pairs);

// Time integral over the window of int v^4/|x| dx with v = u (raw) or the
// smoothed field (mollified, reading the matching observer channel).
double morawetz_lhs(const Trajectory& traj, Window window, bool mollified, double cutoff = 0.0,
                    double regularity = 0.0);

// (R1, R2) over the window from the recorded remainder densities.
std::pair<double, double> remainder_integrals(const Trajectory& traj, Window window,
                                              double cutoff, double regularity);

// Max of the sampled series over [a, b], endpoints interpolated.
double series_sup(const std::vector<double>& times, const std::vector<double>& values, double a,
                  double b);

// Value of the sampled series at t by linear interpolation.
double series_value(const std::vector<double>& times, const std::vector<double>& values, double t);

} // namespace imlab

#endif
