#include "imlab/config.hpp"

#include "imlab/checkpoint.hpp"
#include "imlab/errors.hpp"
#include "imlab/initial_data.hpp"
#include "imlab/report.hpp"
#include "imlab/spacetime.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace imlab {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad number for " + key + ": '" + value + "'");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const auto v = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad integer for " + key + ": '" + value + "'");
    }
}

std::vector<double> parse_double_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::istringstream in(value);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_double(key, item));
    }
    if (out.empty()) throw ConfigError("config: empty list for " + key);
    return out;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& key, const std::string& value) {
    std::vector<std::uint64_t> out;
    std::istringstream in(value);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_u64(key, item));
    }
    if (out.empty()) throw ConfigError("config: empty list for " + key);
    return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "on" || value == "true" || value == "1") return true;
    if (value == "off" || value == "false" || value == "0") return false;
    throw ConfigError("config: bad flag for " + key + ": '" + value + "'");
}

std::string join_doubles(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += format_double(v[i]);
    }
    return out;
}

std::string join_u64(const std::vector<std::uint64_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

} // namespace

KeyValueFile KeyValueFile::parse(const std::string& text) {
    KeyValueFile kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config: line " + std::to_string(lineno) + " is not 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("config: empty key at line " + std::to_string(lineno));
        kv.entries_.emplace_back(key, value);
    }
    return kv;
}

KeyValueFile KeyValueFile::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

bool KeyValueFile::has(const std::string& key) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const auto& e) { return e.first == key; });
}

const std::string& KeyValueFile::get(const std::string& key) const {
    for (const auto& e : entries_) {
        if (e.first == key) return e.second;
    }
    throw ConfigError("config: missing key " + key);
}

std::string KeyValueFile::get_or(const std::string& key, const std::string& fallback) const {
    return has(key) ? get(key) : fallback;
}

ExperimentKind kind_from_string(const std::string& name) {
    if (name == "simulate") return ExperimentKind::Simulate;
    if (name == "conserve-sweep") return ExperimentKind::ConserveSweep;
    if (name == "morawetz-audit") return ExperimentKind::MorawetzAudit;
    if (name == "partition") return ExperimentKind::Partition;
    if (name == "growth") return ExperimentKind::Growth;
    if (name == "inequalities") return ExperimentKind::Inequalities;
    if (name == "validate") return ExperimentKind::Validate;
    throw ConfigError("config: unknown experiment kind '" + name + "'");
}

std::string to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::Simulate: return "simulate";
        case ExperimentKind::ConserveSweep: return "conserve-sweep";
        case ExperimentKind::MorawetzAudit: return "morawetz-audit";
        case ExperimentKind::Partition: return "partition";
        case ExperimentKind::Growth: return "growth";
        case ExperimentKind::Inequalities: return "inequalities";
        case ExperimentKind::Validate: return "validate";
    }
    return "?";
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
    return from_kv(KeyValueFile::from_file(path));
}

ExperimentConfig ExperimentConfig::from_kv(const KeyValueFile& kv) {
    ExperimentConfig cfg;
    for (const auto& [key, value] : kv.entries()) {
        if (key == "kind") cfg.kind = kind_from_string(value);
        else if (key == "grid.M") cfg.grid_modes = parse_u64(key, value);
        else if (key == "grid.R") cfg.grid_radius = parse_double(key, value);
        else if (key == "solver.dt") cfg.dt = parse_double(key, value);
        else if (key == "solver.scheme") {
            if (value == "strang") cfg.scheme = Scheme::Strang;
            else if (value == "yoshida4") cfg.scheme = Scheme::Yoshida4;
            else throw ConfigError("config: unknown scheme '" + value + "'");
        }
        else if (key == "solver.pad_factor") cfg.pad_factor = parse_u64(key, value);
        else if (key == "solver.snapshot_stride") cfg.snapshot_stride = parse_u64(key, value);
        else if (key == "solver.cubic") cfg.cubic = parse_bool(key, value);
        else if (key == "solver.health_threshold") cfg.health_threshold = parse_double(key, value);
        else if (key == "solver.blowup_guard") cfg.blowup_guard = parse_double(key, value);
        else if (key == "solver.boundary_margin") cfg.boundary_margin = parse_double(key, value);
        else if (key == "data.profile") cfg.data_profile = value;
        else if (key == "data.checkpoint") cfg.checkpoint_path = value;
        else if (key == "data.seed") cfg.seed = parse_u64(key, value);
        else if (key == "data.amplitude") cfg.amplitude = parse_double(key, value);
        else if (key == "data.bump_center") cfg.bump_center = parse_double(key, value);
        else if (key == "data.bump_width") cfg.bump_width = parse_double(key, value);
        else if (key == "data.epsilon") cfg.rough_epsilon = parse_double(key, value);
        else if (key == "data.low_cut") cfg.low_cut = parse_u64(key, value);
        else if (key == "data.taper_r0") cfg.taper_r0 = parse_double(key, value);
        else if (key == "data.taper_width") cfg.taper_width = parse_double(key, value);
        else if (key == "physics.s") cfg.s = parse_double(key, value);
        else if (key == "physics.N") cfg.cutoff = parse_double(key, value);
        else if (key == "physics.N_list") cfg.cutoff_list = parse_double_list(key, value);
        else if (key == "physics.T") cfg.horizon = parse_double(key, value);
        else if (key == "physics.T_list") cfg.horizon_list = parse_double_list(key, value);
        else if (key == "physics.seeds") cfg.seeds = parse_u64_list(key, value);
        else if (key == "physics.field_count") cfg.field_count = parse_u64(key, value);
        else if (key == "partition.C1") cfg.c1 = parse_double(key, value);
        else if (key == "partition.C2") cfg.c2 = parse_double(key, value);
        else if (key == "partition.root_tolerance") cfg.root_tolerance = parse_double(key, value);
        else if (key == "output.dir") cfg.out_dir = value;
        else if (key == "output.formats") cfg.formats = value;
        else throw ConfigError("config: unknown key '" + key + "'");
    }
    return cfg;
}

std::vector<std::pair<std::string, std::string>> ExperimentConfig::resolved_entries() const {
    std::vector<std::pair<std::string, std::string>> e;
    e.emplace_back("kind", to_string(kind));
    e.emplace_back("grid.M", std::to_string(grid_modes));
    e.emplace_back("grid.R", format_double(grid_radius));
    e.emplace_back("solver.dt", format_double(dt));
    e.emplace_back("solver.scheme", scheme == Scheme::Strang ? "strang" : "yoshida4");
    e.emplace_back("solver.pad_factor", std::to_string(pad_factor));
    e.emplace_back("solver.snapshot_stride", std::to_string(snapshot_stride));
    e.emplace_back("solver.cubic", cubic ? "on" : "off");
    e.emplace_back("solver.health_threshold", format_double(health_threshold));
    e.emplace_back("solver.blowup_guard", format_double(blowup_guard));
    e.emplace_back("solver.boundary_margin", format_double(boundary_margin));
    e.emplace_back("data.profile", data_profile);
    if (!checkpoint_path.empty()) e.emplace_back("data.checkpoint", checkpoint_path);
    e.emplace_back("data.seed", std::to_string(seed));
    e.emplace_back("data.amplitude", format_double(amplitude));
    e.emplace_back("data.bump_center", format_double(bump_center));
    e.emplace_back("data.bump_width", format_double(bump_width));
    e.emplace_back("data.epsilon", format_double(rough_epsilon));
    e.emplace_back("data.low_cut", std::to_string(low_cut));
    e.emplace_back("data.taper_r0", format_double(taper_r0));
    e.emplace_back("data.taper_width", format_double(taper_width));
    e.emplace_back("physics.s", format_double(s));
    e.emplace_back("physics.N", format_double(cutoff));
    if (!cutoff_list.empty()) e.emplace_back("physics.N_list", join_doubles(cutoff_list));
    e.emplace_back("physics.T", format_double(horizon));
    if (!horizon_list.empty()) e.emplace_back("physics.T_list", join_doubles(horizon_list));
    if (!seeds.empty()) e.emplace_back("physics.seeds", join_u64(seeds));
    e.emplace_back("physics.field_count", std::to_string(field_count));
    e.emplace_back("partition.C1", format_double(c1));
    e.emplace_back("partition.C2", format_double(c2));
    e.emplace_back("partition.root_tolerance", format_double(root_tolerance));
    e.emplace_back("output.formats", formats);
    return e;
}

std::string ExperimentConfig::canonical_text() const {
    std::string out;
    for (const auto& [key, value] : resolved_entries()) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    }
    return out;
}

std::string ExperimentConfig::run_id() const {
    // FNV-1a over the canonical text; stable across platforms.
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char c : canonical_text()) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

SolverConfig ExperimentConfig::solver_config() const {
    SolverConfig s;
    s.dt = dt;
    s.pad_factor = pad_factor;
    s.scheme = scheme;
    s.snapshot_stride = snapshot_stride;
    s.cubic_enabled = cubic;
    s.health_threshold = health_threshold;
    s.blowup_guard = blowup_guard;
    s.boundary_margin = boundary_margin;
    return s;
}

namespace {

bool is_power_of_two_int(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

} // namespace

std::vector<std::string> ExperimentConfig::validate() const {
    std::vector<std::string> notes;
    if (grid_modes < 8 || !is_power_of_two_int(grid_modes)) {
        notes.push_back("grid.M must be a power of two >= 8");
    }
    if (!(grid_radius > 0.0)) notes.push_back("grid.R must be positive");
    if (!(dt > 0.0)) notes.push_back("solver.dt must be positive");
    if (snapshot_stride == 0) notes.push_back("solver.snapshot_stride must be >= 1");
    if (pad_factor < 2 && cubic) notes.push_back("solver.pad_factor < 2 aliases the cubic term");
    if (!(s > 0.5 && s < 1.0)) notes.push_back("physics.s outside (1/2, 1)");
    if (kind == ExperimentKind::Growth && !(s > 0.7 && s < 1.0)) {
        notes.push_back("growth requires s in the global-existence range 1 > s > 7/10");
    }
    if (s > 0.5 && s < 1.0) {
        // The default pair set must exist and satisfy both admissibility
        // relations at this regularity.
        try {
            for (const AdmissiblePair& p : default_admissible_pairs(s)) {
                if (!p.valid()) notes.push_back("default admissible pair set degenerate at this s");
            }
        } catch (const std::exception& e) {
            notes.push_back(std::string("admissible pair construction failed: ") + e.what());
        }
    }
    if (data_profile == "rough" && health_threshold < 1e-2 &&
        (kind == ExperimentKind::Growth || kind == ExperimentKind::ConserveSweep)) {
        // Health exclusions would empty the fit: prescribed-slope data
        // carries a few percent tail energy by construction.
        notes.push_back("rough-data sweep with solver.health_threshold below 1e-2 "
                        "would exclude every run from the fit");
    }
    if (data_profile != "bump" && data_profile != "rough" && data_profile != "checkpoint") {
        notes.push_back("data.profile must be 'bump', 'rough', or 'checkpoint'");
    }
    if (data_profile == "checkpoint" && checkpoint_path.empty()) {
        notes.push_back("data.profile = checkpoint requires data.checkpoint");
    }
    if (data_profile == "bump") {
        if (!(bump_center - bump_width > 0.0) || !(bump_center + bump_width < grid_radius)) {
            notes.push_back("bump support must fit inside (0, R)");
        }
    }
    if (taper_r0 > 0.0 && !(taper_r0 + taper_width < grid_radius)) {
        notes.push_back("taper window must fit inside (0, R)");
    }
    const double horizon_max =
        horizon_list.empty() ? horizon
                             : *std::max_element(horizon_list.begin(), horizon_list.end());
    // Finite speed of propagation: the support radius grows by at most T.
    double support_radius = grid_radius;
    if (data_profile == "bump") support_radius = bump_center + bump_width;
    if (taper_r0 > 0.0) support_radius = taper_r0 + taper_width;
    if (kind != ExperimentKind::Inequalities &&
        support_radius + horizon_max + boundary_margin > grid_radius &&
        (data_profile == "bump" || taper_r0 > 0.0)) {
        notes.push_back("finite propagation: need R >= support + T + margin, have R = " +
                        format_double(grid_radius) + " < " +
                        format_double(support_radius + horizon_max + boundary_margin));
    }
    if (kind == ExperimentKind::ConserveSweep && cutoff_list.size() < 4) {
        notes.push_back("conserve-sweep needs physics.N_list with >= 4 dyadic values");
    }
    if (kind == ExperimentKind::Growth && horizon_list.size() < 2) {
        notes.push_back("growth needs physics.T_list with >= 2 horizons");
    }
    if ((kind == ExperimentKind::Partition || kind == ExperimentKind::ConserveSweep) &&
        dt > root_tolerance) {
        notes.push_back("partitioning needs solver.dt <= partition.root_tolerance");
    }
    if (!(c1 > 0.0) || !(c2 > 0.0)) notes.push_back("partition constants must be positive");
    for (double n : cutoff_list) {
        if (!(n >= 1.0)) notes.push_back("every N in physics.N_list must be >= 1");
    }
    if (kind == ExperimentKind::MorawetzAudit && seeds.empty()) {
        notes.push_back("morawetz-audit needs physics.seeds");
    }
    return notes;
}

WaveState build_initial_state(const ExperimentConfig& config) {
    if (config.data_profile == "checkpoint") {
        LoadedCheckpoint loaded = load_checkpoint(config.checkpoint_path);
        if (loaded.state.modes() != config.grid_modes ||
            loaded.state.grid().radius() != config.grid_radius) {
            throw ConfigError("checkpoint grid (" + std::to_string(loaded.state.modes()) +
                              ") does not match the configured grid");
        }
        return loaded.state;
    }
    GridPtr grid = make_grid(config.grid_modes, config.grid_radius);
    WaveState state = [&] {
        if (config.data_profile == "bump") {
            return make_bump_data(grid, config.amplitude, config.bump_center, config.bump_width);
        }
        if (config.data_profile == "rough") {
            RoughProfile profile;
            profile.spectral_slope_margin = config.rough_epsilon;
            profile.low_cut = config.low_cut;
            profile.amplitude = config.amplitude;
            return make_rough_data(grid, config.s, config.seed, profile);
        }
        throw ConfigError("unknown data profile '" + config.data_profile + "'");
    }();
    if (config.taper_r0 > 0.0) {
        state = taper_state(state, config.taper_r0, config.taper_width);
    }
    return state;
}

} // namespace imlab
