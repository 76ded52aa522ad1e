#include "imlab/field.hpp"

#include "imlab/transform.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace imlab {

namespace {

void require_finite(const std::vector<double>& v, const char* what) {
    for (double x : v) {
        if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + ": non-finite entry");
    }
}

} // namespace

SpectralField::SpectralField(GridPtr grid, std::vector<double> coeffs)
    : grid_(std::move(grid)), coeffs_(std::move(coeffs)) {
    if (!grid_) throw std::invalid_argument("SpectralField: null grid");
    if (coeffs_.size() != grid_->modes()) {
        throw std::invalid_argument("SpectralField: coefficient count does not match grid");
    }
    require_finite(coeffs_, "SpectralField");
}

SpectralField SpectralField::zero(GridPtr grid) {
    std::vector<double> c(grid->modes(), 0.0);
    return SpectralField(std::move(grid), std::move(c));
}

std::vector<double> SpectralField::node_values() const { return sine_values(coeffs_); }

double SpectralField::origin_value() const {
    double acc = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        acc += coeffs_[k] * grid_->frequency(k);
    }
    return acc;
}

SpectralField forward_transform(GridPtr grid, const std::vector<double>& samples) {
    if (samples.size() != grid->modes()) {
        throw std::invalid_argument("forward_transform: sample count does not match grid");
    }
    require_finite(samples, "forward_transform");
    return SpectralField(std::move(grid), sine_coeffs(samples));
}

std::vector<double> inverse_transform(const SpectralField& f) { return f.node_values(); }

std::size_t padded_nodes(std::size_t modes, std::size_t pad_factor) {
    if (pad_factor < 1) throw std::invalid_argument("pad factor must be >= 1");
    return pad_factor * (modes + 1) - 1;
}

std::vector<double> padded_values(const std::vector<double>& coeffs, std::size_t modes,
                                  std::size_t pad_factor) {
    if (coeffs.size() != modes) throw std::invalid_argument("padded_values: size mismatch");
    return sine_values_padded(coeffs, padded_nodes(modes, pad_factor));
}

std::vector<double> padded_analysis(const std::vector<double>& values, std::size_t keep) {
    return sine_coeffs_truncated(values, keep);
}

PhysicalView physical_view(const SpectralField& f, std::size_t pad_factor) {
    PhysicalView view;
    view.nodes = padded_nodes(f.modes(), pad_factor);
    view.spacing = f.grid().radius() / static_cast<double>(view.nodes + 1);
    view.w = sine_values_padded(f.coeffs(), view.nodes);
    view.r.resize(view.nodes);
    view.u.resize(view.nodes);
    for (std::size_t j = 0; j < view.nodes; ++j) {
        view.r[j] = view.spacing * static_cast<double>(j + 1);
        view.u[j] = view.w[j] / view.r[j];
    }
    return view;
}

} // namespace imlab
