#ifndef IMLAB_TRANSFORM_HPP
#define IMLAB_TRANSFORM_HPP

#include <cstddef>
#include <vector>

namespace imlab {

// Sine/cosine transform engine (FFTW r2r backend).
//
// Conventions, with n interior nodes on [0, R], h = R/(n+1), x_j = j*h:
//
//   dst_i(x)[j]  = 2 * sum_{k=1}^{n} x_k sin(pi j k / (n+1))       (RODFT00)
//   dct_sum(c)[j] = sum_{k=1}^{n} c_k cos(pi j k / (n+1)),  j = 0..n+1
//
// dst_i is its own inverse up to the factor 2(n+1).  The field-level
// wrappers below fix the normalization once so callers never see it:
//
//   sine_values(c)  = w(x_j)   for w = sum_k c_k sin(k pi x / R)
//   sine_coeffs(v)  = c        such that sine_values(c) = v  (exact inverse)
//   cosine_values(c)[j] = sum_k c_k cos(k pi x_j / R), j = 0..n+1 (endpoints included)
//
// Plans are created once per size under a global mutex and then only read;
// execution uses the new-array interface and is safe to call concurrently.

std::vector<double> dst_i(const std::vector<double>& x);

std::vector<double> sine_values(const std::vector<double>& coeffs);
std::vector<double> sine_coeffs(const std::vector<double>& values);

// Synthesis on a finer grid with `nodes` interior points (zero-padding in
// frequency; `nodes` >= coeffs.size()).  Same domain radius, same basis.
std::vector<double> sine_values_padded(const std::vector<double>& coeffs, std::size_t nodes);

// Analysis on `values.size()` nodes, truncated to the first `keep` coefficients.
std::vector<double> sine_coeffs_truncated(const std::vector<double>& values, std::size_t keep);

// Cosine-series evaluation, including both endpoints (j = 0 and j = n+1).
std::vector<double> cosine_values(const std::vector<double>& coeffs);

} // namespace imlab

#endif
