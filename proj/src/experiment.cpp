#include "imlab/experiment.hpp"

#include "imlab/checkpoint.hpp"
#include "imlab/constants.hpp"
#include "imlab/energy.hpp"
#include "imlab/errors.hpp"
#include "imlab/inequalities.hpp"
#include "imlab/initial_data.hpp"
#include "imlab/report.hpp"
#include "imlab/scaling.hpp"
#include "imlab/sweeps.hpp"

#include <json.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <thread>

namespace imlab {

namespace {

void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    const std::size_t n_workers = std::min(jobs, count);
    for (std::size_t w = 0; w < n_workers; ++w) {
        workers.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : workers) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

std::string checkpoint_name(std::size_t index) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "state_%06zu.imlb", index);
    return buf;
}

void write_manifest(const std::filesystem::path& dir, const ExperimentConfig& cfg,
                    const CalibratedConstants& constants, const std::string& status,
                    std::optional<double> failure_time) {
    nlohmann::ordered_json doc;
    doc["run_id"] = cfg.run_id();
    doc["code_version"] = "imlab 1.0.0";
    doc["constants_version"] = constants.version;
    doc["constants"] = constants.to_text();
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    for (const auto& [key, value] : cfg.resolved_entries()) config[key] = value;
    doc["config"] = config;
    doc["status"] = status;
    if (failure_time) doc["failure_time"] = *failure_time;
    std::ofstream out(dir / "manifest.json", std::ios::binary);
    if (!out) throw ConfigError("cannot write manifest in " + dir.string());
    out << doc.dump(2) << "\n";
}

void emit(const std::filesystem::path& dir, const ExperimentConfig& cfg,
          const CalibratedConstants& constants, const AuditReport& report) {
    const bool csv = cfg.formats.find("csv") != std::string::npos;
    const bool json = cfg.formats.find("json") != std::string::npos;
    if (csv) report.write_csv((dir / "report.csv").string());
    if (json) {
        report.write_json((dir / "report.json").string(), cfg.resolved_entries(),
                          constants.to_text());
    }
}

void run_simulate(const ExperimentConfig& cfg, const std::filesystem::path& dir,
                  AuditReport& report) {
    const WaveState datum = build_initial_state(cfg);
    ObserverConfig observers;
    observers.base = true;
    const bool with_channel = cfg.cutoff >= 1.0;
    if (with_channel) observers.channels.push_back({cfg.cutoff, cfg.s});

    const double t_end = datum.time + cfg.horizon;
    const Trajectory traj = evolve(datum, t_end, cfg.solver_config(), observers);

    std::size_t index = 0;
    for (const WaveState& snap : traj.snapshots()) {
        save_checkpoint((dir / checkpoint_name(index++)).string(), snap, cfg.s, cfg.cutoff);
    }

    const EnergyBreakdown e0 = energy(traj.initial(), cfg.pad_factor);
    const EnergyBreakdown eT = energy(traj.final(), cfg.pad_factor);
    report.add("energy_initial", datum.time, datum.time, cfg.cutoff, cfg.s, e0.total());
    report.add("energy_final", t_end, t_end, cfg.cutoff, cfg.s, eT.total());
    report.add("energy_drift", datum.time, t_end, cfg.cutoff, cfg.s,
               e0.total() > 0.0 ? std::abs(eT.total() - e0.total()) / e0.total() : 0.0);
    report.add("hs_pair_final", t_end, t_end, cfg.cutoff, cfg.s,
               hs_pair_norm(traj.final(), cfg.s));
    report.add("tail_fraction_worst", datum.time, t_end, cfg.cutoff, cfg.s,
               traj.worst_tail_fraction());
    if (cfg.horizon > 0.0) {
        const Window window{datum.time, t_end};
        report.add("morawetz_raw_lhs", window.a, window.b, 0.0, cfg.s,
                   morawetz_lhs(traj, window, false));
        if (with_channel) {
            report.add("morawetz_mollified_lhs", window.a, window.b, cfg.cutoff, cfg.s,
                       morawetz_lhs(traj, window, true, cfg.cutoff, cfg.s));
            const auto [r1, r2] = remainder_integrals(traj, window, cfg.cutoff, cfg.s);
            report.add("remainder_r1", window.a, window.b, cfg.cutoff, cfg.s, r1);
            report.add("remainder_r2", window.a, window.b, cfg.cutoff, cfg.s, r2);
            report.add("z_functional", window.a, window.b, cfg.cutoff, cfg.s,
                       z_functional(traj, window, cfg.cutoff, cfg.s,
                                    default_admissible_pairs(cfg.s)));
        }
    }
}

void run_conserve_sweep(const ExperimentConfig& cfg, AuditReport& report) {
    const WaveState datum = build_initial_state(cfg);
    const ConservationSweep sweep =
        conservation_sweep(datum, cfg.s, cfg.cutoff_list, cfg.horizon, cfg.solver_config(),
                           cfg.c1, cfg.c2, cfg.root_tolerance, default_admissible_pairs(cfg.s));
    const double a = datum.time;
    const double b = datum.time + cfg.horizon;
    for (const ConservationRun& run : sweep.runs) {
        report.add("aclaw_total_increment", a, b, run.cutoff, cfg.s, run.total_increment);
        report.add("aclaw_max_increment", a, b, run.cutoff, cfg.s, run.max_increment);
        report.add("z4_max", a, b, run.cutoff, cfg.s, run.z4_max);
        report.add("remainder_r1", a, b, run.cutoff, cfg.s, run.r1);
        report.add("remainder_r2", a, b, run.cutoff, cfg.s, run.r2);
        report.add("remainder_abs_sum", a, b, run.cutoff, cfg.s,
                   std::abs(run.r1) + std::abs(run.r2));
        report.add("morawetz_mollified_lhs", a, b, run.cutoff, cfg.s, run.mollified_lhs);
        report.add("morawetz_mollified_defect", a, b, run.cutoff, cfg.s, run.mollified_defect);
        report.add("partition_cardinality", a, b, run.cutoff, cfg.s,
                   static_cast<double>(run.interval_count));
        report.add("partition_ratio", a, b, run.cutoff, cfg.s, run.cardinality_ratio);
        report.add("run_healthy", a, b, run.cutoff, cfg.s, run.healthy ? 1.0 : 0.0);
    }
    report.add("aclaw_increment_slope", a, b, 0.0, cfg.s, sweep.increment_slope);
    report.add("remainder_slope", a, b, 0.0, cfg.s, sweep.remainder_slope);
}

void run_morawetz_audit(const ExperimentConfig& cfg, AuditReport& report, std::size_t jobs) {
    GridPtr grid = make_grid(cfg.grid_modes, cfg.grid_radius);
    struct SeedResult {
        double lhs = 0.0;
        double bound = 0.0;
    };
    std::vector<SeedResult> results(cfg.seeds.size());
    ObserverConfig observers;
    observers.base = true;
    parallel_for(cfg.seeds.size(), jobs, [&](std::size_t i) {
        const WaveState state = seeded_smooth_state(grid, cfg.seeds[i]);
        const Trajectory traj =
            evolve(state, state.time + cfg.horizon, cfg.solver_config(), observers);
        const Window window{state.time, state.time + cfg.horizon};
        results[i].lhs = morawetz_lhs(traj, window, false);
        results[i].bound = 2.0 * (energy(traj.initial(), cfg.pad_factor).total() +
                                  energy(traj.final(), cfg.pad_factor).total());
    });
    for (std::size_t i = 0; i < cfg.seeds.size(); ++i) {
        const double seed = static_cast<double>(cfg.seeds[i]);
        report.add("morawetz_raw_lhs", 0.0, cfg.horizon, seed, cfg.s, results[i].lhs);
        report.add("morawetz_energy_bound", 0.0, cfg.horizon, seed, cfg.s, results[i].bound);
        report.add("morawetz_margin", 0.0, cfg.horizon, seed, cfg.s,
                   results[i].bound > 0.0 ? results[i].lhs / results[i].bound : 0.0);
    }
}

void run_partition(const ExperimentConfig& cfg, AuditReport& report) {
    const WaveState datum = build_initial_state(cfg);
    ObserverConfig observers;
    observers.channels.push_back({cfg.cutoff, cfg.s});
    const Trajectory traj =
        evolve(datum, datum.time + cfg.horizon, cfg.solver_config(), observers);
    const NormProfile profile = NormProfile::from_trajectory(traj, cfg.cutoff, cfg.s);
    PartitionConfig pcfg;
    pcfg.c1 = cfg.c1;
    pcfg.c2 = cfg.c2;
    pcfg.cutoff = cfg.cutoff;
    pcfg.regularity = cfg.s;
    pcfg.root_tolerance = cfg.root_tolerance;
    const Window window{datum.time, datum.time + cfg.horizon};
    const Partition partition = interval_partition(profile, window, pcfg);
    const PartitionAudit audit = partition_audit(partition, profile, 1.0, cfg.horizon);
    for (const PartitionInterval& j : partition.intervals) {
        report.add("partition_breakpoint_" + to_string(j.reason), j.a, j.b, cfg.cutoff, cfg.s,
                   j.b);
    }
    report.add("partition_card_norm_saturated", window.a, window.b, cfg.cutoff, cfg.s,
               static_cast<double>(audit.norm_saturated));
    report.add("partition_card_length_capped", window.a, window.b, cfg.cutoff, cfg.s,
               static_cast<double>(audit.length_capped));
    report.add("partition_card_total", window.a, window.b, cfg.cutoff, cfg.s,
               static_cast<double>(audit.total));
    report.add("partition_ratio", window.a, window.b, cfg.cutoff, cfg.s, audit.ratio);
    report.add("partition_length_cap", window.a, window.b, cfg.cutoff, cfg.s,
               pcfg.length_cap());
}

void run_growth(const ExperimentConfig& cfg, AuditReport& report,
                const CalibratedConstants& constants) {
    const WaveState datum = build_initial_state(cfg);
    const GrowthResult result = growth_experiment(datum, cfg.s, cfg.horizon_list,
                                                  cfg.solver_config(), constants.c_iter,
                                                  constants.eps_plus);
    for (const GrowthPoint& p : result.points) {
        report.add("growth_hs_pair", 0.0, p.horizon, p.cutoff_choice, cfg.s, p.hs_pair);
        report.add("growth_healthy", 0.0, p.horizon, p.cutoff_choice, cfg.s,
                   p.healthy ? 1.0 : 0.0);
    }
    report.add("growth_fitted_exponent", 0.0, cfg.horizon_list.back(), 0.0, cfg.s,
               result.fitted_exponent);
    report.add("growth_ceiling", 0.0, cfg.horizon_list.back(), 0.0, cfg.s, result.ceiling);
}

void run_inequalities(const ExperimentConfig& cfg, AuditReport& report,
                      const CalibratedConstants& constants) {
    GridPtr grid = make_grid(cfg.grid_modes, cfg.grid_radius);
    const std::vector<double> hardy_exponents = {1.5, 2.0, 2.5};
    double sobolev_max = 0.0;
    std::size_t sobolev_violations = 0;
    std::vector<double> hardy_max(hardy_exponents.size(), 0.0);
    std::vector<std::size_t> hardy_violations(hardy_exponents.size(), 0);
    for (std::size_t i = 0; i < cfg.field_count; ++i) {
        const SpectralField f = random_h1_field(grid, cfg.seed + i);
        const double ratio = radial_sobolev_ratio(f);
        sobolev_max = std::max(sobolev_max, ratio);
        if (ratio > constants.c_s) ++sobolev_violations;
        for (std::size_t p = 0; p < hardy_exponents.size(); ++p) {
            const double hr = hardy_ratio(f, hardy_exponents[p]);
            hardy_max[p] = std::max(hardy_max[p], hr);
            const double bound = 3.0 / (3.0 - hardy_exponents[p]);
            if (hr > bound * (1.0 + 1e-3)) ++hardy_violations[p];
        }
    }
    report.add("sobolev_ratio_max", 0.0, 0.0, 0.0, 0.0, sobolev_max);
    report.add("sobolev_c_s", 0.0, 0.0, 0.0, 0.0, constants.c_s);
    report.add("sobolev_violations", 0.0, 0.0, 0.0, 0.0,
               static_cast<double>(sobolev_violations));
    report.add("l6_bootstrap_threshold", 0.0, 0.0, 0.0, 0.0,
               constants.l6_bootstrap_threshold());
    for (std::size_t p = 0; p < hardy_exponents.size(); ++p) {
        report.add("hardy_ratio_max", 0.0, 0.0, hardy_exponents[p], 0.0, hardy_max[p]);
        report.add("hardy_bound", 0.0, 0.0, hardy_exponents[p], 0.0,
                   3.0 / (3.0 - hardy_exponents[p]));
        report.add("hardy_violations", 0.0, 0.0, hardy_exponents[p], 0.0,
                   static_cast<double>(hardy_violations[p]));
    }
}

} // namespace

void run_experiment(const ExperimentConfig& config, const RunOptions& options) {
    ExperimentConfig cfg = config;
    if (options.seed_override) cfg.seed = *options.seed_override;
    if (!options.out_dir.empty()) cfg.out_dir = options.out_dir;

    const std::vector<std::string> diagnostics = cfg.validate();
    if (cfg.kind == ExperimentKind::Validate) {
        if (diagnostics.empty()) {
            std::cout << "config ok\n";
        } else {
            for (const std::string& d : diagnostics) std::cout << "diagnostic: " << d << "\n";
        }
        return;
    }
    if (!diagnostics.empty()) {
        std::string joined = "invalid config:";
        for (const std::string& d : diagnostics) joined += "\n  - " + d;
        throw ConfigError(joined);
    }

    const CalibratedConstants constants = CalibratedConstants::load();
    const std::filesystem::path dir(cfg.out_dir);
    std::filesystem::create_directories(dir);
    AuditReport report(cfg.run_id());

    try {
        switch (cfg.kind) {
            case ExperimentKind::Simulate: run_simulate(cfg, dir, report); break;
            case ExperimentKind::ConserveSweep: run_conserve_sweep(cfg, report); break;
            case ExperimentKind::MorawetzAudit:
                run_morawetz_audit(cfg, report, options.jobs);
                break;
            case ExperimentKind::Partition: run_partition(cfg, report); break;
            case ExperimentKind::Growth: run_growth(cfg, report, constants); break;
            case ExperimentKind::Inequalities: run_inequalities(cfg, report, constants); break;
            case ExperimentKind::Validate: break;
        }
    } catch (const NumericalError& failure) {
        if (failure.last_good()) {
            save_checkpoint((dir / "last_good.imlb").string(), *failure.last_good(), cfg.s,
                            cfg.cutoff);
        }
        write_manifest(dir, cfg, constants, "numerical-failure", failure.last_good_time());
        throw;
    }

    emit(dir, cfg, constants, report);
    write_manifest(dir, cfg, constants, "ok", std::nullopt);
}

} // namespace imlab
