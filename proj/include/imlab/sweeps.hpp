#ifndef IMLAB_SWEEPS_HPP
#define IMLAB_SWEEPS_HPP

#include "imlab/partition.hpp"
#include "imlab/spacetime.hpp"

#include <vector>

namespace imlab {

// One cutoff of the almost-conservation sweep.  The evolved solution does
// not depend on N, so a single run records every channel and the per-N
// quantities are read back from the same trajectory.
struct ConservationRun {
    double cutoff = 0.0;
    bool healthy = true;
    std::size_t interval_count = 0;
    double total_increment = 0.0;      // sum_j |sup_{J_j} E(Iu) - E(Iu(a_j))|
    double max_increment = 0.0;        // worst single interval
    double z4_max = 0.0;               // max_j Z^4(J_j)
    double r1 = 0.0, r2 = 0.0;         // remainder integrals over the window
    double mollified_lhs = 0.0;        // int int (Iu)^4/|x|
    double mollified_defect = 0.0;     // lhs - 2(E(Iu(0)) + E(Iu(T)))
    double cardinality_ratio = 0.0;
};

struct ConservationSweep {
    std::vector<ConservationRun> runs;
    double increment_slope = 0.0; // log-log slope of total_increment vs N (healthy runs)
    double remainder_slope = 0.0; // log-log slope of |R1|+|R2| vs N
};

ConservationSweep conservation_sweep(const WaveState& datum, double regularity,
                                     const std::vector<double>& cutoffs, double horizon,
                                     const SolverConfig& solver, double c1, double c2,
                                     double root_tolerance,
                                     const std::vector<AdmissiblePair>& pairs);

struct GrowthPoint {
    double horizon = 0.0;
    double cutoff_choice = 0.0; // N(T) from the iteration bookkeeping
    double hs_pair = 0.0;       // |u(T)|_{H^s}^2 + |du/dt(T)|_{H^{s-1}}^2
    bool healthy = true;
};

struct GrowthResult {
    std::vector<GrowthPoint> points;
    double fitted_exponent = 0.0;
    double ceiling = 0.0; // regime-split growth exponent bound
};

// Ceiling (16s-10)/(10s-7) for s in (7/10, 5/6], 2s/(2s-1) for s in (5/6, 1).
double growth_ceiling(double s);

// Dyadic N(T): smallest power of two meeting the regime-appropriate
// iteration budget with margin constant c_iter and global epsilon.
double growth_cutoff_choice(double s, double horizon, double c_iter, double epsilon);

// Evolves the datum through increasing horizons (one continued run),
// measuring the H^s x H^{s-1} pair norm at each and fitting the growth
// exponent over the healthy points.  Requires s in (7/10, 1).
GrowthResult growth_experiment(const WaveState& datum, double s,
                               const std::vector<double>& horizons, const SolverConfig& solver,
                               double c_iter, double epsilon);

} // namespace imlab

#endif
