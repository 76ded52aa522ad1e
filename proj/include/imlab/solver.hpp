#ifndef IMLAB_SOLVER_HPP
#define IMLAB_SOLVER_HPP

#include "imlab/state.hpp"

#include <cstddef>
#include <vector>

namespace imlab {

enum class Scheme { Strang, Yoshida4 };

struct Window {
    double a = 0.0;
    double b = 0.0;
    double length() const { return b - a; }
};

struct SolverConfig {
    double dt = 1e-3;
    std::size_t pad_factor = 2;     // dealiasing pad for the cubic term
    Scheme scheme = Scheme::Strang;
    std::size_t snapshot_stride = 10; // steps per stored snapshot
    bool cubic_enabled = true;        // test hook: off makes step == exact linear flow
    double health_threshold = 1e-6;   // tail-energy fraction flag level
    double blowup_guard = 1e6;        // abort when max|u| exceeds this
    double boundary_margin = 1.0;     // quiescent band required near r = R
};

// One smoothing-operator diagnostic channel (cutoff N, regularity s).
struct MollifiedChannel {
    double cutoff = 0.0;
    double regularity = 0.0;
};

// What gets sampled at every accepted step.  The evolved solution itself
// never depends on the channels; all channels are recorded in one pass.
struct ObserverConfig {
    bool base = false;                      // E(u), |u|_{L6}, int u^4/|x| dx
    std::vector<MollifiedChannel> channels; // E(Iu), |Iu|_{L6}, int (Iu)^4/|x|, R1/R2 densities
};

struct ChannelSeries {
    MollifiedChannel channel;
    std::vector<double> energy;    // E(Iu)(t), total
    std::vector<double> l6;        // |Iu(t)|_{L^6_x}
    std::vector<double> morawetz;  // int (Iu)^4/|x| dx at t
    std::vector<double> r1;        // int dr(Iu) ((Iu)^3 - I(u^3)) dx at t
    std::vector<double> r2;        // int (Iu/|x|) ((Iu)^3 - I(u^3)) dx at t
    std::vector<double> bracket;   // int d/dt(Iu) ((Iu)^3 - I(u^3)) dx at t;
                                   // minus its time integral is the E(Iu) increment
};

struct StepSeries {
    std::vector<double> times;
    std::vector<double> energy_raw;   // E(u) total (base channel)
    std::vector<double> l6_raw;
    std::vector<double> morawetz_raw; // int u^4/|x| dx
    std::vector<ChannelSeries> channels;
};

// Trapezoid integral of the sampled series over [a, b] within its span,
// with linear interpolation at fractional endpoints; additive over
// adjacent windows by construction.
double series_integral(const std::vector<double>& times, const std::vector<double>& values,
                       double a, double b);

class Trajectory {
  public:
    Trajectory(std::vector<WaveState> snapshots, StepSeries series, ObserverConfig observers,
               double worst_tail_fraction, bool health_ok);

    const std::vector<WaveState>& snapshots() const { return snapshots_; }
    const StepSeries& series() const { return series_; }
    const ObserverConfig& observers() const { return observers_; }

    double start_time() const { return snapshots_.front().time; }
    double end_time() const { return snapshots_.back().time; }
    const WaveState& initial() const { return snapshots_.front(); }
    const WaveState& final() const { return snapshots_.back(); }

    // Worst tail-energy fraction seen at any snapshot during the run.
    double worst_tail_fraction() const { return worst_tail_fraction_; }
    bool health_ok() const { return health_ok_; }

    // Index of the channel recorded for (cutoff, regularity); throws if absent.
    std::size_t channel_index(double cutoff, double regularity) const;

  private:
    std::vector<WaveState> snapshots_;
    StepSeries series_;
    ObserverConfig observers_;
    double worst_tail_fraction_ = 0.0;
    bool health_ok_ = true;
};

// Exact per-mode rotation by the linear wave flow; energy-preserving mode
// by mode up to rounding.
WaveState linear_flow(const WaveState& state, double dt);

// Position unchanged; velocity kicked by dt * (-w^3/r^2) with the cube
// formed on the zero-padded grid (dealiased).
WaveState nonlinear_kick(const WaveState& state, double dt, std::size_t pad_factor = 2);

WaveState step(const WaveState& state, const SolverConfig& config);

// March from state.time to t_final (uniform steps of size <= config.dt
// chosen to land exactly), recording snapshots and observer series.
// t_final == state.time yields a single-snapshot trajectory.
Trajectory evolve(const WaveState& state, double t_final, const SolverConfig& config,
                  const ObserverConfig& observers = {});

} // namespace imlab

#endif
