#ifndef IMLAB_FIT_HPP
#define IMLAB_FIT_HPP

#include <vector>

namespace imlab {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
};

// Ordinary least squares through (x_i, y_i); needs at least two points.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Least-squares slope of log(y) against log(x); every entry must be > 0.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

} // namespace imlab

#endif
