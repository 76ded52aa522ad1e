#ifndef IMLAB_INEQUALITIES_HPP
#define IMLAB_INEQUALITIES_HPP

#include "imlab/field.hpp"

namespace imlab {

// max over nodes (two innermost excluded; w/r amplifies rounding there) of
//   |u(r)| sqrt(r) / |u|_{Hdot^1}.
// Scaling-invariant; the empirical bound on this ratio is the calibrated
// constant frozen in the constants file.
double radial_sobolev_ratio(const SpectralField& f);

// |u/|x||_{L^p} / |Du|_{L^p} for p in (1, 3); bounded by 3/(3-p) up to
// quadrature tolerance.  The origin cell is integrated analytically with
// u ~ u(0) since |u/r|^p r^2 is singular there for p > 2.
double hardy_ratio(const SpectralField& f, double p);

} // namespace imlab

#endif
