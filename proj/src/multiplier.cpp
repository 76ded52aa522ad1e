#include "imlab/multiplier.hpp"

#include <cmath>
#include <stdexcept>

namespace imlab {

namespace {

// Quintic smoothstep: S(0)=0, S(1)=1, S'=S''=0 at both ends.
double smoothstep(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return x * x * x * (x * (6.0 * x - 15.0) + 10.0);
}

} // namespace

double smoothing_symbol(double rho, double cutoff, double regularity) {
    if (rho <= cutoff) return 1.0;
    const double ratio = rho / cutoff;
    if (ratio >= 2.0) return std::pow(1.0 / ratio, 1.0 - regularity);
    const double blend = smoothstep(std::log2(ratio));
    return std::pow(1.0 / ratio, (1.0 - regularity) * blend);
}

double lp_phi(double rho) {
    if (rho <= 1.0) return 1.0;
    if (rho >= 2.0) return 0.0;
    return 1.0 - smoothstep(std::log2(rho));
}

double lp_psi(double rho) { return lp_phi(rho) - lp_phi(2.0 * rho); }

MultiplierSpec MultiplierSpec::fractional_power(double exponent) {
    MultiplierSpec m;
    m.kind_ = Kind::FractionalPower;
    m.exponent_ = exponent;
    return m;
}

MultiplierSpec MultiplierSpec::smoothing_i(double cutoff, double regularity) {
    if (!(cutoff >= 1.0)) throw std::invalid_argument("smoothing_i: cutoff must be >= 1");
    if (!(regularity > 0.5 && regularity < 1.0)) {
        throw std::invalid_argument("smoothing_i: regularity must lie in (1/2, 1)");
    }
    MultiplierSpec m;
    m.kind_ = Kind::SmoothingI;
    m.cutoff_ = cutoff;
    m.regularity_ = regularity;
    return m;
}

MultiplierSpec MultiplierSpec::lp_block(double scale) {
    if (!(scale > 0.0)) throw std::invalid_argument("lp_block: scale must be positive");
    MultiplierSpec m;
    m.kind_ = Kind::LpBlock;
    m.cutoff_ = scale;
    return m;
}

MultiplierSpec MultiplierSpec::lp_low(double scale) {
    if (!(scale > 0.0)) throw std::invalid_argument("lp_low: scale must be positive");
    MultiplierSpec m;
    m.kind_ = Kind::LpLow;
    m.cutoff_ = scale;
    return m;
}

MultiplierSpec MultiplierSpec::custom(std::vector<double> samples) {
    MultiplierSpec m;
    m.kind_ = Kind::Custom;
    m.samples_ = std::move(samples);
    return m;
}

double MultiplierSpec::operator()(double rho) const {
    switch (kind_) {
        case Kind::FractionalPower: return exponent_ == 0.0 ? 1.0 : std::pow(rho, exponent_);
        case Kind::SmoothingI: return smoothing_symbol(rho, cutoff_, regularity_);
        case Kind::LpBlock: return lp_psi(rho / cutoff_);
        case Kind::LpLow: return lp_phi(rho / cutoff_);
        case Kind::Custom: throw std::logic_error("custom multiplier has no closed symbol");
    }
    return 0.0;
}

SpectralField apply_multiplier(const SpectralField& f, const MultiplierSpec& m) {
    const std::size_t n = f.modes();
    std::vector<double> out(n);
    if (m.kind() == MultiplierSpec::Kind::Custom) {
        if (m.samples().size() != n) {
            throw std::invalid_argument("apply_multiplier: custom table length != mode count");
        }
        for (std::size_t k = 0; k < n; ++k) out[k] = m.samples()[k] * f.coeff(k);
    } else if (m.kind() == MultiplierSpec::Kind::FractionalPower && m.exponent() == 0.0) {
        out = f.coeffs(); // exact identity
    } else {
        for (std::size_t k = 0; k < n; ++k) out[k] = m(f.grid().frequency(k)) * f.coeff(k);
    }
    return SpectralField(f.grid_ptr(), std::move(out));
}

SpectralField apply_smoothing(const SpectralField& f, double cutoff, double regularity) {
    return apply_multiplier(f, MultiplierSpec::smoothing_i(cutoff, regularity));
}

SpectralField lp_project(const SpectralField& f, double scale) {
    return apply_multiplier(f, MultiplierSpec::lp_block(scale));
}

std::vector<double> smoothing_times_power(const RadialGrid& grid, double cutoff,
                                          double regularity, double power) {
    std::vector<double> table(grid.modes());
    for (std::size_t k = 0; k < grid.modes(); ++k) {
        const double rho = grid.frequency(k);
        const double p = power == 0.0 ? 1.0 : std::pow(rho, power);
        table[k] = p * smoothing_symbol(rho, cutoff, regularity);
    }
    return table;
}

std::vector<double> covering_scales(double rho_lo, double rho_hi) {
    // psi(rho/scale) is supported on scale in [rho/2, 2 rho].
    if (!(rho_lo > 0.0) || !(rho_hi >= rho_lo)) {
        throw std::invalid_argument("covering_scales: need 0 < rho_lo <= rho_hi");
    }
    const int j_lo = static_cast<int>(std::floor(std::log2(rho_lo))) - 1;
    const int j_hi = static_cast<int>(std::ceil(std::log2(rho_hi))) + 1;
    std::vector<double> scales;
    for (int j = j_lo; j <= j_hi; ++j) scales.push_back(std::ldexp(1.0, j));
    return scales;
}

} // namespace imlab
