#ifndef IMLAB_ERRORS_HPP
#define IMLAB_ERRORS_HPP

#include "imlab/state.hpp"

#include <memory>
#include <stdexcept>
#include <string>

namespace imlab {

// Invalid configuration or precondition failure; maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Mid-run numerical failure (NaN/Inf, blow-up guard); maps to exit code 3.
// Carries the last state that passed the per-step checks.
class NumericalError : public std::runtime_error {
  public:
    NumericalError(const std::string& what, std::shared_ptr<const WaveState> last_good)
        : std::runtime_error(what), last_good_(std::move(last_good)) {}

    const std::shared_ptr<const WaveState>& last_good() const { return last_good_; }
    double last_good_time() const { return last_good_ ? last_good_->time : 0.0; }

  private:
    std::shared_ptr<const WaveState> last_good_;
};

} // namespace imlab

#endif
