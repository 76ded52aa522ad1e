#include "imlab/solver.hpp"

#include "imlab/errors.hpp"
#include "imlab/multiplier.hpp"
#include "imlab/norms.hpp"
#include "imlab/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace imlab {

namespace {

bool all_finite(const std::vector<double>& v) {
    for (double x : v) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

// Per-step observer evaluation.  Shares the raw padded synthesis and the
// cube analysis across channels; the solution does not depend on any of it.
//
// Both cubes entering G = (Iu)^3 - I(u^3) are represented by their first-M
// sine coefficients of the w-form (dealiased), so when the smoothing symbol
// is identically 1 on the grid the two pipelines coincide bitwise and G = 0
// exactly.
class ObserverRecorder {
  public:
    ObserverRecorder(const ObserverConfig& config, const RadialGrid& grid, std::size_t pad_factor)
        : config_(config), grid_(grid), pad_(pad_factor), modes_(grid.modes()) {
        nodes_ = padded_nodes(modes_, pad_);
        spacing_ = grid.radius() / static_cast<double>(nodes_ + 1);
        r_.resize(nodes_);
        for (std::size_t j = 0; j < nodes_; ++j) r_[j] = spacing_ * static_cast<double>(j + 1);
        for (const MollifiedChannel& ch : config_.channels) {
            symbols_.push_back(smoothing_times_power(grid, ch.cutoff, ch.regularity, 0.0));
            series_.channels.push_back(ChannelSeries{ch, {}, {}, {}, {}, {}, {}});
        }
    }

    bool active() const { return config_.base || !config_.channels.empty(); }

    void record(const WaveState& state) {
        if (!active()) {
            series_.times.push_back(state.time);
            return;
        }
        series_.times.push_back(state.time);
        const double fourpi_h = 4.0 * std::numbers::pi * spacing_;
        const double planch = plancherel_factor(grid_);

        // Shared: w values on the padded grid and the cube analysis of u^3.
        const std::vector<double> w = sine_values_padded(state.position.coeffs(), nodes_);
        std::vector<double> cube(nodes_);
        for (std::size_t j = 0; j < nodes_; ++j) {
            cube[j] = w[j] * w[j] * w[j] / (r_[j] * r_[j]);
        }
        const std::vector<double> cube_coeffs = sine_coeffs_truncated(cube, modes_);

        if (config_.base) {
            double mor = 0.0, l6 = 0.0, quart = 0.0, kin = 0.0, grad = 0.0;
            for (std::size_t j = 0; j < nodes_; ++j) {
                const double w2 = w[j] * w[j];
                const double r2 = r_[j] * r_[j];
                mor += w2 * w2 / (r2 * r_[j]);
                l6 += w2 * w2 * w2 / (r2 * r2);
                quart += w2 * w2 / r2;
            }
            for (std::size_t k = 0; k < modes_; ++k) {
                const double rho = grid_.frequency(k);
                kin += state.velocity.coeff(k) * state.velocity.coeff(k);
                grad += rho * rho * state.position.coeff(k) * state.position.coeff(k);
            }
            series_.morawetz_raw.push_back(fourpi_h * mor);
            series_.l6_raw.push_back(std::pow(fourpi_h * l6, 1.0 / 6.0));
            series_.energy_raw.push_back(0.5 * planch * (kin + grad) +
                                         0.25 * fourpi_h * quart);
        }

        for (std::size_t c = 0; c < config_.channels.size(); ++c) {
            const std::vector<double>& sym = symbols_[c];
            std::vector<double> smooth_pos(modes_), smooth_vel(modes_), deriv_coeffs(modes_);
            double kin = 0.0, grad = 0.0;
            for (std::size_t k = 0; k < modes_; ++k) {
                const double rho = grid_.frequency(k);
                smooth_pos[k] = sym[k] * state.position.coeff(k);
                deriv_coeffs[k] = smooth_pos[k] * rho;
                smooth_vel[k] = sym[k] * state.velocity.coeff(k);
                kin += smooth_vel[k] * smooth_vel[k];
                grad += rho * rho * smooth_pos[k] * smooth_pos[k];
            }
            const std::vector<double> wi = sine_values_padded(smooth_pos, nodes_);
            const std::vector<double> wi_dot = sine_values_padded(smooth_vel, nodes_);

            // d/dr of the w-form, cosine series evaluated with endpoints.
            std::vector<double> padded_deriv(nodes_, 0.0);
            std::copy(deriv_coeffs.begin(), deriv_coeffs.end(), padded_deriv.begin());
            const std::vector<double> wi_prime = cosine_values(padded_deriv);

            std::vector<double> cube_i(nodes_);
            for (std::size_t j = 0; j < nodes_; ++j) {
                cube_i[j] = wi[j] * wi[j] * wi[j] / (r_[j] * r_[j]);
            }
            std::vector<double> g_coeffs = sine_coeffs_truncated(cube_i, modes_);
            for (std::size_t k = 0; k < modes_; ++k) {
                g_coeffs[k] -= sym[k] * cube_coeffs[k];
            }
            const std::vector<double> g_vals = sine_values_padded(g_coeffs, nodes_);

            double mor = 0.0, l6 = 0.0, quart = 0.0, r1 = 0.0, r2 = 0.0, br = 0.0;
            for (std::size_t j = 0; j < nodes_; ++j) {
                const double w2 = wi[j] * wi[j];
                const double r2v = r_[j] * r_[j];
                mor += w2 * w2 / (r2v * r_[j]);
                l6 += w2 * w2 * w2 / (r2v * r2v);
                quart += w2 * w2 / r2v;
                r1 += (wi_prime[j + 1] - wi[j] / r_[j]) * g_vals[j];
                r2 += wi[j] * g_vals[j] / r_[j];
                // (d/dt Iu) * G * r^2 = (wi_dot/r)(g/r) r^2
                br += wi_dot[j] * g_vals[j];
            }
            ChannelSeries& out = series_.channels[c];
            out.energy.push_back(0.5 * planch * (kin + grad) + 0.25 * fourpi_h * quart);
            out.l6.push_back(std::pow(fourpi_h * l6, 1.0 / 6.0));
            out.morawetz.push_back(fourpi_h * mor);
            out.r1.push_back(fourpi_h * r1);
            out.r2.push_back(fourpi_h * r2);
            out.bracket.push_back(fourpi_h * br);
        }
    }

    StepSeries take() { return std::move(series_); }

  private:
    ObserverConfig config_;
    const RadialGrid& grid_;
    std::size_t pad_;
    std::size_t modes_;
    std::size_t nodes_;
    double spacing_;
    std::vector<double> r_;
    std::vector<std::vector<double>> symbols_;
    StepSeries series_;
};

} // namespace

double series_integral(const std::vector<double>& times, const std::vector<double>& values,
                       double a, double b) {
    if (times.size() != values.size() || times.empty()) {
        throw std::invalid_argument("series_integral: malformed series");
    }
    if (a > b || a < times.front() - 1e-12 || b > times.back() + 1e-12) {
        throw std::invalid_argument("series_integral: window outside series span");
    }
    auto value_at = [&](double t, std::size_t hint) {
        std::size_t i = hint;
        while (i + 1 < times.size() && times[i + 1] < t) ++i;
        if (i + 1 >= times.size()) return values.back();
        const double dt = times[i + 1] - times[i];
        if (dt <= 0.0) return values[i];
        const double frac = std::clamp((t - times[i]) / dt, 0.0, 1.0);
        return values[i] + frac * (values[i + 1] - values[i]);
    };
    const auto lo = std::upper_bound(times.begin(), times.end(), a);
    const auto hi = std::lower_bound(times.begin(), times.end(), b);
    const std::size_t first = static_cast<std::size_t>(lo - times.begin()); // first sample > a
    const std::size_t last = static_cast<std::size_t>(hi - times.begin());  // first sample >= b

    double acc = 0.0;
    double t_prev = a;
    double v_prev = value_at(a, first > 0 ? first - 1 : 0);
    for (std::size_t i = first; i < last; ++i) {
        acc += 0.5 * (v_prev + values[i]) * (times[i] - t_prev);
        t_prev = times[i];
        v_prev = values[i];
    }
    const double v_end = value_at(b, last > 0 ? last - 1 : 0);
    acc += 0.5 * (v_prev + v_end) * (b - t_prev);
    return acc;
}

Trajectory::Trajectory(std::vector<WaveState> snapshots, StepSeries series,
                       ObserverConfig observers, double worst_tail_fraction, bool health_ok)
    : snapshots_(std::move(snapshots)), series_(std::move(series)),
      observers_(std::move(observers)), worst_tail_fraction_(worst_tail_fraction),
      health_ok_(health_ok) {
    if (snapshots_.empty()) throw std::invalid_argument("Trajectory: no snapshots");
    for (std::size_t i = 1; i < snapshots_.size(); ++i) {
        if (!(snapshots_[i].time > snapshots_[i - 1].time)) {
            throw std::invalid_argument("Trajectory: snapshot times must strictly increase");
        }
    }
}

std::size_t Trajectory::channel_index(double cutoff, double regularity) const {
    for (std::size_t c = 0; c < observers_.channels.size(); ++c) {
        if (observers_.channels[c].cutoff == cutoff &&
            observers_.channels[c].regularity == regularity) {
            return c;
        }
    }
    throw std::invalid_argument("Trajectory: no observer channel for requested (N, s)");
}

WaveState linear_flow(const WaveState& state, double dt) {
    const std::size_t m = state.modes();
    std::vector<double> pos(m), vel(m);
    for (std::size_t k = 0; k < m; ++k) {
        const double rho = state.grid().frequency(k);
        const double c = std::cos(rho * dt);
        const double s = std::sin(rho * dt);
        const double p = state.position.coeff(k);
        const double v = state.velocity.coeff(k);
        pos[k] = c * p + (s / rho) * v;
        vel[k] = -rho * s * p + c * v;
    }
    return WaveState(state.time + dt, SpectralField(state.grid_ptr(), std::move(pos)),
                     SpectralField(state.grid_ptr(), std::move(vel)));
}

WaveState nonlinear_kick(const WaveState& state, double dt, std::size_t pad_factor) {
    if (dt == 0.0) return state;
    const PhysicalView view = physical_view(state.position, pad_factor);
    std::vector<double> g(view.nodes);
    for (std::size_t j = 0; j < view.nodes; ++j) {
        g[j] = -view.w[j] * view.w[j] * view.w[j] / (view.r[j] * view.r[j]);
    }
    const std::vector<double> g_coeffs = padded_analysis(g, state.modes());
    std::vector<double> vel = state.velocity.coeffs();
    for (std::size_t k = 0; k < vel.size(); ++k) vel[k] += dt * g_coeffs[k];
    return WaveState(state.time, state.position,
                     SpectralField(state.grid_ptr(), std::move(vel)));
}

namespace {

WaveState strang_step(const WaveState& state, double dt, const SolverConfig& config) {
    if (!config.cubic_enabled) return linear_flow(state, dt);
    WaveState s = nonlinear_kick(state, 0.5 * dt, config.pad_factor);
    s = linear_flow(s, dt);
    return nonlinear_kick(s, 0.5 * dt, config.pad_factor);
}

} // namespace

WaveState step(const WaveState& state, const SolverConfig& config) {
    if (config.scheme == Scheme::Strang) return strang_step(state, config.dt, config);
    // Triple-jump composition of the symmetric second-order step.
    const double cbrt2 = std::cbrt(2.0);
    const double w1 = 1.0 / (2.0 - cbrt2);
    const double w0 = 1.0 - 2.0 * w1;
    WaveState s = strang_step(state, w1 * config.dt, config);
    s = strang_step(s, w0 * config.dt, config);
    return strang_step(s, w1 * config.dt, config);
}

Trajectory evolve(const WaveState& state, double t_final, const SolverConfig& config,
                  const ObserverConfig& observers) {
    if (t_final < state.time) throw ConfigError("evolve: t_final precedes state time");
    if (!(config.dt > 0.0)) throw ConfigError("evolve: dt must be positive");
    if (config.snapshot_stride == 0) throw ConfigError("evolve: snapshot stride must be >= 1");

    ObserverRecorder recorder(observers, state.grid(), config.pad_factor);
    std::vector<WaveState> snapshots;
    double worst_tail = tail_energy_fraction(state);

    recorder.record(state);
    snapshots.push_back(state);
    if (t_final == state.time) {
        return Trajectory(std::move(snapshots), recorder.take(), observers, worst_tail,
                          worst_tail <= config.health_threshold);
    }

    const double span = t_final - state.time;
    const auto n_steps =
        static_cast<std::size_t>(std::max<long long>(1, std::llround(std::ceil(span / config.dt - 1e-12))));
    SolverConfig local = config;
    local.dt = span / static_cast<double>(n_steps);

    WaveState current = state;
    for (std::size_t i = 1; i <= n_steps; ++i) {
        WaveState next = step(current, local);
        next.time = state.time + span * static_cast<double>(i) / static_cast<double>(n_steps);
        if (!all_finite(next.position.coeffs()) || !all_finite(next.velocity.coeffs())) {
            throw NumericalError("evolve: non-finite coefficients at t = " +
                                     std::to_string(next.time),
                                 std::make_shared<WaveState>(current));
        }
        recorder.record(next);
        const bool is_snapshot = (i % config.snapshot_stride == 0) || i == n_steps;
        if (is_snapshot) {
            worst_tail = std::max(worst_tail, tail_energy_fraction(next));
            const double linf = lebesgue_norm(next.position,
                                              std::numeric_limits<double>::infinity(), 1);
            if (linf > config.blowup_guard) {
                throw NumericalError("evolve: blow-up guard tripped, max|u| = " +
                                         std::to_string(linf),
                                     std::make_shared<WaveState>(current));
            }
            snapshots.push_back(next);
        }
        current = std::move(next);
    }
    return Trajectory(std::move(snapshots), recorder.take(), observers, worst_tail,
                      worst_tail <= config.health_threshold);
}

} // namespace imlab
