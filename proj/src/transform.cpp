#include "imlab/transform.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace imlab {

namespace {

std::mutex planner_mutex;

// One out-of-place plan per (kind, size), created lazily and never destroyed.
// FFTW's planner is not thread-safe; execution through the new-array
// interface is.  FFTW_UNALIGNED lets us execute on arbitrary caller buffers.
fftw_plan acquire_plan(int n, fftw_r2r_kind kind) {
    static std::map<std::pair<int, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(planner_mutex);
    auto key = std::make_pair(n, static_cast<int>(kind));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<double> in(static_cast<std::size_t>(n)), out(static_cast<std::size_t>(n));
    fftw_plan plan = fftw_plan_r2r_1d(n, in.data(), out.data(), kind,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (plan == nullptr) throw std::runtime_error("transform: FFTW plan creation failed");
    cache.emplace(key, plan);
    return plan;
}

// Out-of-place r2r plans preserve their input, so the const_cast is safe.
std::vector<double> run_r2r(const std::vector<double>& x, fftw_r2r_kind kind) {
    if (x.empty()) throw std::invalid_argument("transform: empty input");
    fftw_plan plan = acquire_plan(static_cast<int>(x.size()), kind);
    std::vector<double> out(x.size());
    fftw_execute_r2r(plan, const_cast<double*>(x.data()), out.data());
    return out;
}

} // namespace

std::vector<double> dst_i(const std::vector<double>& x) { return run_r2r(x, FFTW_RODFT00); }

std::vector<double> sine_values(const std::vector<double>& coeffs) {
    std::vector<double> v = dst_i(coeffs);
    for (double& y : v) y *= 0.5;
    return v;
}

std::vector<double> sine_coeffs(const std::vector<double>& values) {
    std::vector<double> c = dst_i(values);
    const double scale = 1.0 / static_cast<double>(values.size() + 1);
    for (double& y : c) y *= scale;
    return c;
}

std::vector<double> sine_values_padded(const std::vector<double>& coeffs, std::size_t nodes) {
    if (nodes < coeffs.size()) {
        throw std::invalid_argument("sine_values_padded: target grid smaller than spectrum");
    }
    std::vector<double> padded(nodes, 0.0);
    std::copy(coeffs.begin(), coeffs.end(), padded.begin());
    return sine_values(padded);
}

std::vector<double> sine_coeffs_truncated(const std::vector<double>& values, std::size_t keep) {
    std::vector<double> c = sine_coeffs(values);
    if (keep > c.size()) {
        throw std::invalid_argument("sine_coeffs_truncated: more modes requested than resolved");
    }
    c.resize(keep);
    return c;
}

std::vector<double> cosine_values(const std::vector<double>& coeffs) {
    // REDFT00 of length n+2 computes Y_j = X_0 + (-1)^j X_{n+1}
    //                                     + 2 sum_{k=1}^{n} X_k cos(pi j k/(n+1));
    // with X_0 = X_{n+1} = 0 and X_k = c_k/2 this is the plain cosine sum.
    const std::size_t n = coeffs.size();
    std::vector<double> in(n + 2, 0.0);
    for (std::size_t k = 0; k < n; ++k) in[k + 1] = 0.5 * coeffs[k];
    return run_r2r(in, FFTW_REDFT00);
}

} // namespace imlab
