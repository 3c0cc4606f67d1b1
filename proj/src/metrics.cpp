#include "attocell/metrics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "attocell/rng.hpp"

namespace attocell {

namespace {

double rate_sum(const std::vector<TrialUser>& users) {
    double sum = 0.0;
    for (const auto& user : users) sum += user.rate;
    return sum;
}

double mean(const std::vector<double>& values) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

double standard_error(const std::vector<double>& values, double mu) {
    const std::size_t n = values.size();
    if (n < 2) return 0.0;
    double ss = 0.0;
    for (double v : values) {
        const double d = v - mu;
        ss += d * d;
    }
    const double variance = ss / static_cast<double>(n - 1);
    return std::sqrt(variance / static_cast<double>(n));
}

}  // namespace

double ase(const TrialReport& report, double cell_bandwidth, double cell_radius) {
    if (!(cell_bandwidth > 0.0)) throw std::domain_error("cell bandwidth must be positive");
    if (!(cell_radius > 0.0)) throw std::domain_error("cell radius must be positive");
    const double area = std::numbers::pi * cell_radius * cell_radius;
    return (rate_sum(report.zone0) + rate_sum(report.zone1)) / (cell_bandwidth * area);
}

double ase_uniform(const TrialReport& report, double cell_bandwidth, double cell_radius) {
    if (!(cell_bandwidth > 0.0)) throw std::domain_error("cell bandwidth must be positive");
    if (!(cell_radius > 0.0)) throw std::domain_error("cell radius must be positive");
    const double area = std::numbers::pi * cell_radius * cell_radius;
    return rate_sum(report.benchmark) / (cell_bandwidth * area);
}

double eta(const TrialReport& report) {
    const double reference = rate_sum(report.benchmark);
    if (!(reference > 0.0))
        throw std::domain_error("benchmark sum rate is zero; rate gain undefined");
    return (rate_sum(report.zone0) + rate_sum(report.zone1)) / reference;
}

std::optional<double> fairness_zeta(const TrialReport& report) {
    if (report.zone1.empty()) return std::nullopt;
    if (report.zone0.empty())
        throw std::domain_error("fairness ratio needs a populated inner zone");
    const double inner = rate_sum(report.zone0) / static_cast<double>(report.zone0.size());
    const double outer = rate_sum(report.zone1) / static_cast<double>(report.zone1.size());
    if (!(inner > 0.0))
        throw std::domain_error("inner-zone mean rate is zero; fairness ratio undefined");
    return outer / inner;
}

double user_density(int zone0_users, double zone0_radius) {
    if (zone0_users < 0) throw std::domain_error("user count must be non-negative");
    if (!(zone0_radius > 0.0))
        throw std::domain_error("user density undefined for a collapsed zone");
    return static_cast<double>(zone0_users) /
           (std::numbers::pi * zone0_radius * zone0_radius);
}

MetricSummary monte_carlo(const TrialSetup& setup, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trial count must be positive");
    const bool zeta_defined = setup.zones.zone1_subcarriers > 0;
    std::vector<double> etas(static_cast<std::size_t>(trials));
    std::vector<double> ases(static_cast<std::size_t>(trials));
    std::vector<double> ases_uniform(static_cast<std::size_t>(trials));
    std::vector<double> zetas;
    if (zeta_defined) zetas.resize(static_cast<std::size_t>(trials));
    for (int t = 0; t < trials; ++t) {
        try {
            const auto report =
                run_trial(setup.zones, setup.scheme, setup.ap, setup.rx, setup.model,
                          setup.plane_separation,
                          derive_seed(seed, static_cast<std::uint64_t>(t)));
            const auto i = static_cast<std::size_t>(t);
            etas[i] = eta(report);
            ases[i] = ase(report, setup.ap.bandwidth, setup.zones.cell_radius);
            ases_uniform[i] = ase_uniform(report, setup.ap.bandwidth, setup.zones.cell_radius);
            if (zeta_defined) zetas[i] = fairness_zeta(report).value();
        } catch (const std::exception& e) {
            throw std::runtime_error("trial " + std::to_string(t) + ": " + e.what());
        }
    }

    MetricSummary summary;
    summary.trials = trials;
    summary.eta_mean = mean(etas);
    summary.eta_stderr = standard_error(etas, summary.eta_mean);
    summary.ase = mean(ases);
    summary.ase_uniform = mean(ases_uniform);
    if (zeta_defined) summary.zeta_mean = mean(zetas);
    return summary;
}

}  // namespace attocell
