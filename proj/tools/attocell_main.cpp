#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "attocell/csv.hpp"
#include "attocell/scenario.hpp"
#include "attocell/sweeps.hpp"

namespace {

struct Options {
    std::string config_path;
    std::string out_path = "-";
    std::uint64_t seed = 0;
    int trials = 0;
    bool quiet = false;
    bool seed_given = false;
    bool trials_given = false;
};

// Every subcommand takes the same handful of options, attached per
// subcommand so they can appear after the subcommand name.
void attach_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--config", opt.config_path, "scenario configuration file (JSON)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", opt.out_path, "output CSV path, '-' for stdout");
    cmd->add_option("--seed", opt.seed, "override the configured RNG seed")
        ->each([&opt](const std::string&) { opt.seed_given = true; });
    cmd->add_option("--trials", opt.trials, "override the configured trial count")
        ->check(CLI::PositiveNumber)
        ->each([&opt](const std::string&) { opt.trials_given = true; });
    cmd->add_flag("--quiet", opt.quiet, "suppress the summary note on stderr");
}

attocell::ScenarioConfig make_config(const Options& opt) {
    attocell::ScenarioConfig config = opt.config_path.empty()
                                          ? attocell::default_config()
                                          : attocell::load_config(opt.config_path);
    if (opt.seed_given) config.seed = opt.seed;
    if (opt.trials_given) config.trials = opt.trials;
    return config;
}

int write_out(const Options& opt, const std::string& what,
              const std::function<void(std::ostream&)>& writer) {
    if (opt.out_path == "-") {
        writer(std::cout);
        if (!opt.quiet) std::cerr << what << " written to stdout\n";
        return 0;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + opt.out_path);
    writer(out);
    out.flush();
    if (!out) throw std::runtime_error("failed writing output file: " + opt.out_path);
    if (!opt.quiet) std::cerr << what << " written to " << opt.out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LED attocell OFDMA zoning and resource-allocation simulator"};
    app.require_subcommand(1);

    Options opt;
    CLI::App* zone = app.add_subcommand("zone-sweep", "zone geometry across (theta, rho) grids");
    CLI::App* sub =
        app.add_subcommand("subcarrier-sweep", "zone subcarrier demand across AP spacings");
    CLI::App* eta = app.add_subcommand("eta-sweep", "Monte Carlo sum-rate gain sweep");
    CLI::App* fair = app.add_subcommand("fairness-sweep", "Monte Carlo fairness-ratio sweep");
    CLI::App* map = app.add_subcommand("rate-map", "downlink rate map over the room footprint");
    CLI::App* trial = app.add_subcommand("single-trial", "one Monte Carlo draw, per-user rows");
    for (CLI::App* cmd : {zone, sub, eta, fair, map, trial}) attach_common(cmd, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        const attocell::ScenarioConfig config = make_config(opt);
        if (zone->parsed()) {
            const auto rows = attocell::zone_sweep(config);
            return write_out(opt, "zone sweep (" + std::to_string(rows.size()) + " rows)",
                             [&rows](std::ostream& os) { attocell::write_zone_sweep(os, rows); });
        }
        if (sub->parsed()) {
            const auto rows = attocell::subcarrier_sweep(config);
            return write_out(
                opt, "subcarrier sweep (" + std::to_string(rows.size()) + " rows)",
                [&rows](std::ostream& os) { attocell::write_zone_sweep(os, rows); });
        }
        if (eta->parsed() || fair->parsed()) {
            const auto rows = attocell::eta_sweep(config);
            const char* what = eta->parsed() ? "eta sweep (" : "fairness sweep (";
            return write_out(opt, what + std::to_string(rows.size()) + " rows)",
                             [&rows](std::ostream& os) { attocell::write_eta_sweep(os, rows); });
        }
        if (map->parsed()) {
            const auto grid = attocell::rate_map(config);
            return write_out(
                opt,
                "rate map (" + std::to_string(grid.nx) + "x" + std::to_string(grid.ny) +
                    " nodes)",
                [&grid](std::ostream& os) { attocell::write_rate_map(os, grid); });
        }
        const auto report = attocell::single_trial(config);
        return write_out(
            opt,
            "single trial (" +
                std::to_string(report.zone0.size() + report.zone1.size() +
                               report.benchmark.size()) +
                " users)",
            [&report](std::ostream& os) { attocell::write_trial(os, report); });
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
