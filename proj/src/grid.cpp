#include "imlab/grid.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace imlab {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

} // namespace

RadialGrid::RadialGrid(std::size_t mode_count, double domain_radius)
    : modes_(mode_count), radius_(domain_radius) {
    if (!(domain_radius > 0.0)) {
        throw std::invalid_argument("RadialGrid: domain radius must be positive");
    }
    if (mode_count < 8 || !is_power_of_two(mode_count)) {
        throw std::invalid_argument("RadialGrid: mode count must be a power of two >= 8, got " +
                                    std::to_string(mode_count));
    }
    spacing_ = radius_ / static_cast<double>(modes_ + 1);
    freq_unit_ = std::numbers::pi / radius_;
}

GridPtr make_grid(std::size_t mode_count, double domain_radius) {
    return std::make_shared<const RadialGrid>(mode_count, domain_radius);
}

} // namespace imlab
