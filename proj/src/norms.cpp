#include "imlab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace imlab {

double plancherel_factor(const RadialGrid& grid) {
    return 4.0 * std::numbers::pi * 0.5 * grid.radius();
}

double lebesgue_norm(const SpectralField& f, double r, std::size_t pad_factor) {
    if (std::isinf(r)) {
        const PhysicalView view = physical_view(f, pad_factor);
        double peak = std::abs(f.origin_value());
        for (double u : view.u) peak = std::max(peak, std::abs(u));
        return peak;
    }
    if (!(r > 1.0)) throw std::invalid_argument("lebesgue_norm: exponent must exceed 1");
    const PhysicalView view = physical_view(f, pad_factor);
    double acc = 0.0;
    for (std::size_t j = 0; j < view.nodes; ++j) {
        acc += std::pow(std::abs(view.u[j]), r) * view.r[j] * view.r[j];
    }
    acc *= view.spacing * 4.0 * std::numbers::pi;
    return std::pow(acc, 1.0 / r);
}

double sobolev_norm(const SpectralField& f, double s, bool homogeneous) {
    double acc = 0.0;
    for (std::size_t k = 0; k < f.modes(); ++k) {
        const double rho = f.grid().frequency(k);
        double weight;
        if (homogeneous) {
            weight = std::pow(rho, 2.0 * s);
        } else if (s >= 0.0) {
            const double ws = std::pow(rho, s);
            weight = (1.0 + ws) * (1.0 + ws);
        } else {
            // Negative index by duality: |f|_{H^{-sigma}} = |(1 + D^sigma)^{-1} f|.
            // The literal (1 + rho^s)^2 weight tends to 1 at high frequency
            // and would not define a space below L^2.
            const double ws = std::pow(rho, -s);
            weight = 1.0 / ((1.0 + ws) * (1.0 + ws));
        }
        acc += weight * f.coeff(k) * f.coeff(k);
    }
    return std::sqrt(plancherel_factor(f.grid()) * acc);
}

double l2_norm_coeffs(const SpectralField& f) {
    double acc = 0.0;
    for (double c : f.coeffs()) acc += c * c;
    return std::sqrt(plancherel_factor(f.grid()) * acc);
}

} // namespace imlab
