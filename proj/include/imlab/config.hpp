#ifndef IMLAB_CONFIG_HPP
#define IMLAB_CONFIG_HPP

#include "imlab/solver.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace imlab {

// Flat, ordered, human-diffable "key = value" text; one file per run.
// '#' starts a comment; unknown keys are rejected at the typed layer.
class KeyValueFile {
  public:
    static KeyValueFile parse(const std::string& text);
    static KeyValueFile from_file(const std::string& path);

    bool has(const std::string& key) const;
    const std::string& get(const std::string& key) const; // throws ConfigError when absent
    std::string get_or(const std::string& key, const std::string& fallback) const;

    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

enum class ExperimentKind {
    Simulate,
    ConserveSweep,
    MorawetzAudit,
    Partition,
    Growth,
    Inequalities,
    Validate,
};

ExperimentKind kind_from_string(const std::string& name);
std::string to_string(ExperimentKind kind);

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::Simulate;

    std::size_t grid_modes = 1024;
    double grid_radius = 20.0;

    double dt = 1e-3;
    Scheme scheme = Scheme::Strang;
    std::size_t pad_factor = 2;
    std::size_t snapshot_stride = 10;
    bool cubic = true;
    double health_threshold = 1e-6;
    double blowup_guard = 1e6;
    double boundary_margin = 1.0;

    std::string data_profile = "bump"; // bump | rough | checkpoint
    std::string checkpoint_path;       // input state for profile = checkpoint
    std::uint64_t seed = 1;
    double amplitude = 1.0;
    double bump_center = 3.0;
    double bump_width = 1.0;
    double rough_epsilon = 0.05;
    std::size_t low_cut = 1;
    double taper_r0 = 0.0;   // 0 disables the compact-support taper
    double taper_width = 0.0;

    double s = 0.75;
    double cutoff = 32.0;                  // N for single-N kinds
    std::vector<double> cutoff_list;       // N sweep
    double horizon = 4.0;                  // T
    std::vector<double> horizon_list;      // T sweep
    std::vector<std::uint64_t> seeds;      // morawetz-audit ensemble
    std::size_t field_count = 100;         // inequalities sample size

    double c1 = 0.1;
    double c2 = 1.0;
    double root_tolerance = 1e-3;

    std::string out_dir = "out";
    std::string formats = "csv,json";

    static ExperimentConfig from_file(const std::string& path);
    static ExperimentConfig from_kv(const KeyValueFile& kv);

    // Dry-run precondition checks; returns human-readable diagnostics
    // (empty means clean) without running anything.
    std::vector<std::string> validate() const;

    // Every resolved value, in fixed order; the manifest payload and the
    // determinism contract (identical text => identical artifacts).
    std::vector<std::pair<std::string, std::string>> resolved_entries() const;
    std::string canonical_text() const;
    std::string run_id() const; // FNV-1a hash of canonical_text

    SolverConfig solver_config() const;
};

WaveState build_initial_state(const ExperimentConfig& config);

} // namespace imlab

#endif
