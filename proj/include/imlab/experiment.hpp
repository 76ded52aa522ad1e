#ifndef IMLAB_EXPERIMENT_HPP
#define IMLAB_EXPERIMENT_HPP

#include "imlab/config.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace imlab {

struct RunOptions {
    std::string out_dir;  // overrides config.out_dir when nonempty
    std::size_t jobs = 1; // worker slots for independent ensemble members
    std::optional<std::uint64_t> seed_override;
};

// Executes the experiment and writes report.csv / report.json / manifest.json
// (plus checkpoints) into the output directory.  Identical configs produce
// bitwise-identical artifacts.  Throws ConfigError on invalid configs
// (before any artifact is written) and NumericalError on mid-run failure
// (after retaining the last good checkpoint and a failure manifest).
void run_experiment(const ExperimentConfig& config, const RunOptions& options);

} // namespace imlab

#endif
