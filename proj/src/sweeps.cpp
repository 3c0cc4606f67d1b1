#include "attocell/sweeps.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace attocell {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_grid(bool ok, const char* what) {
    if (!ok) throw std::runtime_error(std::string("sweep needs a non-empty ") + what + " grid");
}

}  // namespace

std::vector<ZoneSweepRow> zone_sweep(const ScenarioConfig& config) {
    if (config.aps.empty()) throw std::runtime_error("no access points configured");
    require_grid(!config.sweeps.theta_deg.empty(), "theta_deg");
    require_grid(!config.sweeps.rho.empty(), "rho");
    const Receiver rx = config.receiver_model();
    const double dv = config.plane_separation;

    std::vector<ZoneSweepRow> rows;
    rows.reserve(config.sweeps.theta_deg.size() * config.sweeps.rho.size());
    for (double theta : config.sweeps.theta_deg) {
        // Single-carrier semantics: the whole cell power and band ride one
        // subcarrier, the regime the zone-geometry figures describe.
        AccessPoint ap = config.access_point(0);
        ap.half_angle = theta * (std::numbers::pi / 180.0);
        ap.subcarriers = 1;
        const double order = lambertian_order(ap.half_angle);
        const double rc = cell_radius(dv, ap.half_angle);
        const double lambda =
            lambda_param(ap, rx, config.rate_model, ap.optical_power, ap.bandwidth, dv);
        const double lambda_cap = illumination_limit(config.illumination, order, dv);

        // Overlap cap against the configured layout with every cell opened to
        // the swept angle (a homogeneous network).
        ApLayout layout = config.layout();
        for (auto& other : layout.aps) other.half_angle = ap.half_angle;
        double gamma_cap = rc;
        double min_spacing = kInf;
        if (layout.aps.size() > 1) {
            std::vector<double> radii(layout.aps.size(), rc);
            gamma_cap = overlap_limit(0, layout, radii);
            const auto& own = layout.aps[0].position;
            for (std::size_t q = 1; q < layout.aps.size(); ++q) {
                const auto& other = layout.aps[q].position;
                min_spacing = std::min(
                    min_spacing, std::hypot(other[0] - own[0], other[1] - own[1]));
            }
        }

        for (double rho : config.sweeps.rho) {
            const double r0 =
                zone0_radius(rho, 1.0, 1.0, lambda, order, dv, gamma_cap, lambda_cap);
            ZoneSweepRow row;
            row.rho = rho;
            row.beta = 1.0;
            row.theta_deg = theta;
            row.d12 = min_spacing;
            row.r0 = r0;
            row.n0 = 1;
            row.r1 = rc - r0;
            row.n1 = 0;
            row.illumination_cap = lambda_cap;
            row.overlap_cap = gamma_cap;
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<ZoneSweepRow> subcarrier_sweep(const ScenarioConfig& config) {
    if (config.aps.empty()) throw std::runtime_error("no access points configured");
    require_grid(!config.sweeps.rho.empty(), "rho");
    const Receiver rx = config.receiver_model();
    const double dv = config.plane_separation;
    const AccessPoint ap = config.access_point(0);
    const double order = lambertian_order(ap.half_angle);
    const double rc = cell_radius(dv, ap.half_angle);
    const double p_sub = ap.optical_power / ap.subcarriers;
    const double b_sub = ap.bandwidth / ap.subcarriers;
    const double lambda = lambda_param(ap, rx, config.rate_model, p_sub, b_sub, dv);
    const double lambda_cap = illumination_limit(config.illumination, order, dv);

    std::vector<double> spacing = config.sweeps.d12;
    if (spacing.empty()) {
        // Sixteen points from nearly touching zones to fully separated cells.
        const double from = rc + 0.5;
        const double to = 2.0 * rc;
        const int points = 16;
        for (int i = 0; i < points; ++i)
            spacing.push_back(from + (to - from) * i / (points - 1.0));
    }

    std::vector<ZoneSweepRow> rows;
    rows.reserve(spacing.size() * config.sweeps.rho.size());
    for (double d12 : spacing) {
        // Symmetric neighbour pair at the swept spacing.
        AccessPoint twin = ap;
        twin.id = ap.id + 1;
        twin.position[0] += d12;
        ApLayout pair;
        pair.aps = {ap, twin};
        pair.plane_separation = dv;
        const std::vector<double> radii{rc, rc};
        const double gamma_cap = overlap_limit(0, pair, radii);
        const double r0 = std::max(0.0, std::min(gamma_cap, lambda_cap));
        for (double rho : config.sweeps.rho) {
            const int n0 = zone0_subcarriers(rho, ap.subcarriers, lambda, order, dv, r0);
            ZoneSweepRow row;
            row.rho = rho;
            row.beta = 1.0;
            row.theta_deg = config.aps[0].half_angle_deg;
            row.d12 = d12;
            row.r0 = r0;
            row.n0 = n0;
            row.r1 = rc - r0;
            row.n1 = ap.subcarriers - n0;
            row.illumination_cap = lambda_cap;
            row.overlap_cap = gamma_cap;
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<EtaSweepRow> eta_sweep(const ScenarioConfig& config) {
    if (config.aps.empty()) throw std::runtime_error("no access points configured");
    require_grid(!config.sweeps.rho.empty(), "rho");
    require_grid(!config.sweeps.beta.empty(), "beta");
    require_grid(!config.sweeps.schemes.empty(), "schemes");
    const AccessPoint ap = config.access_point(0);
    const Receiver rx = config.receiver_model();
    const ApLayout layout = config.layout();

    std::vector<EtaSweepRow> rows;
    rows.reserve(config.sweeps.schemes.size() * config.sweeps.beta.size() *
                 config.sweeps.rho.size());
    for (PowerScheme scheme : config.sweeps.schemes) {
        for (double beta : config.sweeps.beta) {
            for (double rho : config.sweeps.rho) {
                ZonePolicy policy = config.policy;
                policy.rho = rho;
                policy.beta = beta;
                const ZonePair zones = define_zones(ap, rx, config.rate_model, layout, policy,
                                                    config.illumination);
                TrialSetup setup;
                setup.zones = zones;
                setup.scheme = scheme;
                setup.ap = ap;
                setup.rx = rx;
                setup.model = config.rate_model;
                setup.plane_separation = config.plane_separation;
                const MetricSummary summary = monte_carlo(setup, config.trials, config.seed);
                EtaSweepRow row;
                row.rho = rho;
                row.beta = beta;
                row.scheme = scheme;
                row.illumination = config.illumination.enabled;
                row.trials = summary.trials;
                row.eta_mean = summary.eta_mean;
                row.eta_stderr = summary.eta_stderr;
                row.zeta_mean = summary.zeta_mean;
                rows.push_back(row);
            }
        }
    }
    return rows;
}

TrialReport single_trial(const ScenarioConfig& config) {
    if (config.aps.empty()) throw std::runtime_error("no access points configured");
    const AccessPoint ap = config.access_point(0);
    const Receiver rx = config.receiver_model();
    const ZonePair zones = define_zones(ap, rx, config.rate_model, config.layout(),
                                        config.policy, config.illumination);
    const PowerScheme scheme =
        config.sweeps.schemes.empty() ? PowerScheme::Equal : config.sweeps.schemes.front();
    return run_trial(zones, scheme, ap, rx, config.rate_model, config.plane_separation,
                     config.seed);
}

}  // namespace attocell
