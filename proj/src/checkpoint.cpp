#include "imlab/checkpoint.hpp"

#include "imlab/errors.hpp"

#include <bit>
#include <cstring>
#include <fstream>

namespace imlab {

static_assert(std::endian::native == std::endian::little,
              "checkpoint layout assumes a little-endian host");

namespace {

constexpr char kMagic[4] = {'I', 'M', 'L', 'B'};

template <typename T>
void put(std::ofstream& out, T value) {
    out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T get(std::ifstream& in) {
    T value{};
    in.read(reinterpret_cast<char*>(&value), sizeof(T));
    return value;
}

} // namespace

void save_checkpoint(const std::string& path, const WaveState& state, double s, double cutoff) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("checkpoint: cannot open for writing: " + path);
    out.write(kMagic, sizeof(kMagic));
    put<std::uint32_t>(out, kCheckpointVersion);
    put<std::uint64_t>(out, state.modes());
    put<double>(out, state.grid().radius());
    put<double>(out, state.time);
    put<double>(out, s);
    put<double>(out, cutoff);
    out.write(reinterpret_cast<const char*>(state.position.coeffs().data()),
              static_cast<std::streamsize>(state.modes() * sizeof(double)));
    out.write(reinterpret_cast<const char*>(state.velocity.coeffs().data()),
              static_cast<std::streamsize>(state.modes() * sizeof(double)));
    if (!out) throw ConfigError("checkpoint: write failed: " + path);
}

LoadedCheckpoint load_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("checkpoint: cannot open: " + path);
    char magic[4];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
        throw ConfigError("checkpoint: bad magic in " + path);
    }
    CheckpointMeta meta;
    meta.version = get<std::uint32_t>(in);
    if (meta.version != kCheckpointVersion) {
        throw ConfigError("checkpoint: unsupported version in " + path);
    }
    const auto modes = get<std::uint64_t>(in);
    const double radius = get<double>(in);
    const double time = get<double>(in);
    meta.s = get<double>(in);
    meta.cutoff = get<double>(in);
    std::vector<double> pos(modes), vel(modes);
    in.read(reinterpret_cast<char*>(pos.data()),
            static_cast<std::streamsize>(modes * sizeof(double)));
    in.read(reinterpret_cast<char*>(vel.data()),
            static_cast<std::streamsize>(modes * sizeof(double)));
    if (!in) throw ConfigError("checkpoint: truncated file " + path);
    GridPtr grid = make_grid(modes, radius);
    WaveState state(time, SpectralField(grid, std::move(pos)), SpectralField(grid, std::move(vel)));
    return LoadedCheckpoint{std::move(state), meta};
}

} // namespace imlab
