// Command-line front end: one subcommand per experiment kind, each driven
// by a flat key-value config file.  Exit codes: 0 ok, 2 config error,
// 3 numerical failure.

#include "imlab/errors.hpp"
#include "imlab/experiment.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_dir;
    std::size_t jobs = 1;
    std::optional<std::uint64_t> seed_override;
    std::uint64_t seed_raw = 0;
    bool seed_set = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "path to the run config file")->required();
    cmd->add_option("--out", args.out_dir, "output directory (overrides output.dir)");
    cmd->add_option("--jobs", args.jobs, "parallel worker slots for ensemble members");
    cmd->add_option("--seed-override", args.seed_raw, "replace data.seed for this run")
        ->each([&args](const std::string&) { args.seed_set = true; });
}

int dispatch(const CommonArgs& args, imlab::ExperimentKind kind) {
    imlab::ExperimentConfig config = imlab::ExperimentConfig::from_file(args.config_path);
    config.kind = kind; // the subcommand wins over the file's kind entry
    imlab::RunOptions options;
    options.out_dir = args.out_dir;
    options.jobs = args.jobs;
    if (args.seed_set) options.seed_override = args.seed_raw;
    imlab::run_experiment(config, options);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudospectral laboratory for the radial defocusing cubic wave equation"};
    app.require_subcommand(1);

    const std::vector<std::pair<std::string, imlab::ExperimentKind>> kinds = {
        {"simulate", imlab::ExperimentKind::Simulate},
        {"conserve-sweep", imlab::ExperimentKind::ConserveSweep},
        {"morawetz-audit", imlab::ExperimentKind::MorawetzAudit},
        {"partition", imlab::ExperimentKind::Partition},
        {"growth", imlab::ExperimentKind::Growth},
        {"inequalities", imlab::ExperimentKind::Inequalities},
        {"validate", imlab::ExperimentKind::Validate},
    };

    std::vector<std::unique_ptr<CommonArgs>> all_args;
    imlab::ExperimentKind selected{};
    CommonArgs* selected_args = nullptr;
    for (const auto& [name, kind] : kinds) {
        auto args = std::make_unique<CommonArgs>();
        CLI::App* cmd = app.add_subcommand(name, name + " experiment");
        add_common(cmd, *args);
        CommonArgs* raw = args.get();
        const imlab::ExperimentKind k = kind;
        cmd->callback([&selected, &selected_args, raw, k] {
            selected = k;
            selected_args = raw;
        });
        all_args.push_back(std::move(args));
    }

    CLI11_PARSE(app, argc, argv);

    try {
        return dispatch(*selected_args, selected);
    } catch (const imlab::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const imlab::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
