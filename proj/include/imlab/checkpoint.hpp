#ifndef IMLAB_CHECKPOINT_HPP
#define IMLAB_CHECKPOINT_HPP

#include "imlab/state.hpp"

#include <cstdint>
#include <string>

namespace imlab {

// Binary checkpoint, little-endian, bit-exact round trip:
//   "IMLB" | version u32 | M u64 | R f64 | t f64 | s f64 | N f64
//   | M position coefficients f64 | M velocity coefficients f64
inline constexpr std::uint32_t kCheckpointVersion = 1;

struct CheckpointMeta {
    std::uint32_t version = kCheckpointVersion;
    double s = 0.0;
    double cutoff = 0.0; // N
};

void save_checkpoint(const std::string& path, const WaveState& state, double s, double cutoff);

struct LoadedCheckpoint {
    WaveState state;
    CheckpointMeta meta;
};

LoadedCheckpoint load_checkpoint(const std::string& path);

} // namespace imlab

#endif
