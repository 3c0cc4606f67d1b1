#pragma once

#include <optional>
#include <vector>

#include "attocell/scenario.hpp"

namespace attocell {

// One row of the zone-geometry sweeps. The zone sweep emits single-carrier
// semantics (the whole cell power and band on one subcarrier) across a
// (theta, rho) grid; the subcarrier sweep studies a symmetric two-cell
// geometry across an AP-spacing grid. Both share this schema.
struct ZoneSweepRow {
    double rho = 0.0;
    double beta = 1.0;
    double theta_deg = 0.0;
    double d12 = 0.0;          // AP spacing, +inf for an isolated cell
    double r0 = 0.0;
    int n0 = 0;
    double r1 = 0.0;           // Zone-1 annulus width
    int n1 = 0;
    double illumination_cap = 0.0;  // +inf when disabled
    double overlap_cap = 0.0;
};

// One row of the eta / fairness sweeps.
struct EtaSweepRow {
    double rho = 0.0;
    double beta = 1.0;
    PowerScheme scheme = PowerScheme::Equal;
    bool illumination = false;
    int trials = 0;
    double eta_mean = 0.0;
    double eta_stderr = 0.0;
    std::optional<double> zeta_mean;
};

// Rows ordered by (theta, rho).
std::vector<ZoneSweepRow> zone_sweep(const ScenarioConfig& config);

// Rows ordered by (d12, rho). An empty d12 grid in the config derives a
// 16-point grid from just-touching to just-separated cells.
std::vector<ZoneSweepRow> subcarrier_sweep(const ScenarioConfig& config);

// Rows ordered by (scheme, beta, rho). Monte Carlo per row.
std::vector<EtaSweepRow> eta_sweep(const ScenarioConfig& config);

// One full draw under the configured policy, for inspection.
TrialReport single_trial(const ScenarioConfig& config);

}  // namespace attocell
