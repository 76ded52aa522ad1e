#ifndef IMLAB_FIELD_HPP
#define IMLAB_FIELD_HPP

#include "imlab/grid.hpp"

#include <cstddef>
#include <vector>

namespace imlab {

// Sine-basis coefficient vector of w = r*u on a RadialGrid.
//
//   w(r) = sum_{k=1}^{M} c_k sin(k pi r / R),   u = w / r.
//
// Immutable after construction; operations return new fields.  All norm
// and energy formulas follow docs/normalization.md:
//
//   integral_{R^3} u^2 dx = 4 pi (R/2) sum_k c_k^2.
class SpectralField {
  public:
    SpectralField(GridPtr grid, std::vector<double> coeffs);

    static SpectralField zero(GridPtr grid);

    const RadialGrid& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    double coeff(std::size_t k) const { return coeffs_[k]; }
    std::size_t modes() const { return coeffs_.size(); }

    // Samples of w at the interior nodes of the base grid.
    std::vector<double> node_values() const;

    // Limit of u = w/r at the origin: u(0) = sum_k c_k (k pi / R).
    double origin_value() const;

  private:
    GridPtr grid_;
    std::vector<double> coeffs_;
};

// Builds the field whose w-values at the nodes are `samples` (exact
// interpolation in the sine basis).  Rejects non-finite input.
SpectralField forward_transform(GridPtr grid, const std::vector<double>& samples);

// Node values back from the coefficients; inverse of forward_transform.
std::vector<double> inverse_transform(const SpectralField& f);

// Padded physical-space view used by every nonlinear/quadrature path.
// For pad_factor p the fine grid has n = p*(M+1) - 1 interior nodes on the
// same radius, so the first M sine frequencies coincide with the base
// grid's.  p = 2 is enough to dealias a cubic: products of modes <= M fill
// modes <= 3M, and the fold of (n, 2(n+1)) lands strictly above M.
struct PhysicalView {
    std::size_t nodes;          // n
    double spacing;             // R/(n+1)
    std::vector<double> r;      // r_j, j = 1..n
    std::vector<double> w;      // w(r_j)
    std::vector<double> u;      // u(r_j) = w(r_j)/r_j
};

PhysicalView physical_view(const SpectralField& f, std::size_t pad_factor);

// Values of w at n = pad_factor*(M+1) - 1 nodes from raw coefficients.
std::vector<double> padded_values(const std::vector<double>& coeffs, std::size_t modes,
                                  std::size_t pad_factor);

// Sine coefficients (first `keep`) of the function sampled on the padded grid.
std::vector<double> padded_analysis(const std::vector<double>& values, std::size_t keep);

std::size_t padded_nodes(std::size_t modes, std::size_t pad_factor);

} // namespace imlab

#endif
