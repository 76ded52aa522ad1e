#ifndef IMLAB_MULTIPLIER_HPP
#define IMLAB_MULTIPLIER_HPP

#include "imlab/field.hpp"

#include <vector>

namespace imlab {

// Radial Fourier multipliers m(rho), applied diagonally: c_k -> m(rho_k) c_k.
//
// smoothing_i is the frequency-smoothing operator with symbol
//   m(rho) = 1                      rho <= cutoff
//          = (cutoff/rho)^(1-s)     rho >= 2*cutoff
// joined on [cutoff, 2*cutoff] by (cutoff/rho)^{(1-s) S(log2(rho/cutoff))}
// with S the quintic smoothstep, which keeps m C^2 and nonincreasing.
//
// Dyadic block symbols use phi(rho) = 1 for rho <= 1, 0 for rho >= 2,
// quintic smoothstep in log2(rho) in between, and psi(rho) = phi(rho) - phi(2 rho);
// sum over dyadic scales of psi(rho/scale) telescopes to 1 for every rho > 0.
class MultiplierSpec {
  public:
    // D^exponent; exponent 0 is the exact identity.
    static MultiplierSpec fractional_power(double exponent);
    // Smoothing operator; requires cutoff >= 1 and regularity in (1/2, 1).
    static MultiplierSpec smoothing_i(double cutoff, double regularity);
    // Dyadic Littlewood-Paley block at `scale` (any power of two, grid-independent).
    static MultiplierSpec lp_block(double scale);
    // Low-pass companion phi(rho/scale).
    static MultiplierSpec lp_low(double scale);
    // Per-mode sample table (length must match the grid it is applied to).
    static MultiplierSpec custom(std::vector<double> samples);

    double operator()(double rho) const; // symbol value (custom: not callable this way)

    enum class Kind { FractionalPower, SmoothingI, LpBlock, LpLow, Custom };
    Kind kind() const { return kind_; }
    double exponent() const { return exponent_; }
    double cutoff() const { return cutoff_; }
    double regularity() const { return regularity_; }
    const std::vector<double>& samples() const { return samples_; }

  private:
    MultiplierSpec() = default;
    Kind kind_ = Kind::FractionalPower;
    double exponent_ = 0.0;
    double cutoff_ = 0.0;
    double regularity_ = 0.0;
    std::vector<double> samples_;
};

SpectralField apply_multiplier(const SpectralField& f, const MultiplierSpec& m);

// Convenience wrappers.
SpectralField apply_smoothing(const SpectralField& f, double cutoff, double regularity);
SpectralField lp_project(const SpectralField& f, double scale);

// Symbol helpers (used directly by observers and audits).
double smoothing_symbol(double rho, double cutoff, double regularity);
double lp_phi(double rho);
double lp_psi(double rho);

// Per-mode table for D^power composed with the smoothing operator,
// i.e. rho^power * m(rho); power may be negative (rho_1 > 0 on the grid).
std::vector<double> smoothing_times_power(const RadialGrid& grid, double cutoff,
                                          double regularity, double power);

// Dyadic scales 2^j whose psi-block meets [rho_lo, rho_hi].
std::vector<double> covering_scales(double rho_lo, double rho_hi);

} // namespace imlab

#endif
