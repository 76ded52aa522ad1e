#ifndef IMLAB_GRID_HPP
#define IMLAB_GRID_HPP

#include <cstddef>
#include <memory>

namespace imlab {

// Truncated half-line discretization shared by every field and operator.
//
// The domain is r in [0, R] with homogeneous Dirichlet conditions for
// w = r*u at both ends.  Interior nodes r_j = j*R/(M+1), j = 1..M, carry
// the sample values; the sine frequencies rho_k = k*pi/R, k = 1..M, are
// the exact eigenfrequencies of -d^2/dr^2 on the interval, so radial
// Fourier multipliers act diagonally on the coefficients.
class RadialGrid {
  public:
    // Requires: mode_count >= 8 and a power of two, domain_radius > 0.
    RadialGrid(std::size_t mode_count, double domain_radius);

    std::size_t modes() const { return modes_; }
    double radius() const { return radius_; }

    // r_{j+1}, j = 0..M-1 (strictly interior, increasing)
    double node(std::size_t j) const { return spacing_ * static_cast<double>(j + 1); }
    // rho_{k+1}, k = 0..M-1 (strictly positive, increasing)
    double frequency(std::size_t k) const { return freq_unit_ * static_cast<double>(k + 1); }

    double spacing() const { return spacing_; }       // R/(M+1)
    double frequency_unit() const { return freq_unit_; } // pi/R
    double max_frequency() const { return frequency(modes_ - 1); }

    friend bool operator==(const RadialGrid& a, const RadialGrid& b) {
        return a.modes_ == b.modes_ && a.radius_ == b.radius_;
    }
    friend bool operator!=(const RadialGrid& a, const RadialGrid& b) { return !(a == b); }

  private:
    std::size_t modes_;
    double radius_;
    double spacing_;
    double freq_unit_;
};

using GridPtr = std::shared_ptr<const RadialGrid>;

GridPtr make_grid(std::size_t mode_count, double domain_radius);

} // namespace imlab

#endif
