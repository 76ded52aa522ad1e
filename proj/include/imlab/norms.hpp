#ifndef IMLAB_NORMS_HPP
#define IMLAB_NORMS_HPP

#include "imlab/field.hpp"

namespace imlab {

// L^r(R^3) norm of u = w/r by trapezoid quadrature over the nodes:
//   (4 pi integral_0^R |u|^r rr^2 drr)^{1/r}.
// The integrand vanishes at both endpoints, so the rule reduces to
// h * sum over interior nodes.  r = infinity returns max(|u|) over the
// nodes together with the origin limit u(0) = sum_k c_k k pi / R.
// Exponents r <= 1 are rejected.  pad_factor refines the quadrature grid.
double lebesgue_norm(const SpectralField& f, double r, std::size_t pad_factor = 1);

// Sobolev norms from the coefficients:
//   homogeneous:         sqrt(4 pi (R/2) sum_k rho_k^{2s} c_k^2)
//   inhomogeneous s >= 0: the same with weight (1 + rho_k^s)^2
//   inhomogeneous s < 0:  weight (1 + rho_k^{-s})^{-2} (dual convention;
//                         see docs/normalization.md)
double sobolev_norm(const SpectralField& f, double s, bool homogeneous);

// Plancherel closed form for the L^2 norm, sqrt(4 pi (R/2) sum c_k^2).
double l2_norm_coeffs(const SpectralField& f);

// 4 pi (R/2), the constant tying coefficient sums to R^3 integrals.
double plancherel_factor(const RadialGrid& grid);

} // namespace imlab

#endif
