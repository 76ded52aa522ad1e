#include "imlab/inequalities.hpp"

#include "imlab/multiplier.hpp"
#include "imlab/norms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace imlab {

double radial_sobolev_ratio(const SpectralField& f) {
    const double h1 = sobolev_norm(f, 1.0, true);
    if (h1 == 0.0) throw std::invalid_argument("radial_sobolev_ratio: zero field");
    const std::vector<double> w = f.node_values();
    double peak = 0.0;
    for (std::size_t j = 2; j < w.size(); ++j) {
        const double r = f.grid().node(j);
        // |u| sqrt(r) = |w| / sqrt(r)
        peak = std::max(peak, std::abs(w[j]) / std::sqrt(r));
    }
    return peak / h1;
}

double hardy_ratio(const SpectralField& f, double p) {
    if (!(p > 1.0 && p < 3.0)) {
        throw std::invalid_argument("hardy_ratio: exponent must lie in (1, 3)");
    }
    const PhysicalView view = physical_view(f, 2);

    // |u/|x||_p^p = 4 pi [ int_{r1}^{R} |w/r^2|^p r^2 dr + |u(0)|^p r1^{3-p}/(3-p) ]
    double acc = 0.0;
    for (std::size_t j = 0; j < view.nodes; ++j) {
        const double val = std::pow(std::abs(view.w[j]) / (view.r[j] * view.r[j]), p) *
                           view.r[j] * view.r[j];
        acc += (j == 0) ? 0.5 * val : val;
    }
    acc *= view.spacing;
    acc += std::pow(std::abs(f.origin_value()), p) * std::pow(view.r[0], 3.0 - p) / (3.0 - p);
    const double numerator = std::pow(4.0 * std::numbers::pi * acc, 1.0 / p);

    const SpectralField derivative = apply_multiplier(f, MultiplierSpec::fractional_power(1.0));
    const double denominator = lebesgue_norm(derivative, p, 2);
    if (denominator == 0.0) throw std::invalid_argument("hardy_ratio: zero field");
    return numerator / denominator;
}

} // namespace imlab
