#pragma once

#include <cstdint>
#include <optional>

#include "attocell/allocation.hpp"

namespace attocell {

// Everything run_trial needs, bundled for repeated draws.
struct TrialSetup {
    ZonePair zones;
    PowerScheme scheme = PowerScheme::Equal;
    AccessPoint ap;
    Receiver rx;
    RateModel model;
    double plane_separation = 0.0;
};

// Monte Carlo averages over a batch of trials. zeta_mean is absent (not
// zero) whenever Zone 1 holds no subcarriers, since a rate ratio against an
// empty zone is undefined.
struct MetricSummary {
    double eta_mean = 0.0;
    double eta_stderr = 0.0;
    std::optional<double> zeta_mean;
    double ase = 0.0;          // zoned area spectral efficiency, bit/s/Hz/m^2
    double ase_uniform = 0.0;  // benchmark counterpart
    int trials = 0;
};

// Zoned cell sum rate normalised by bandwidth and footprint area.
double ase(const TrialReport& report, double cell_bandwidth, double cell_radius);

// Same normalisation applied to the benchmark population.
double ase_uniform(const TrialReport& report, double cell_bandwidth, double cell_radius);

// Sum-rate gain of the zoned layout over the benchmark for one draw.
double eta(const TrialReport& report);

// Ratio of Zone-1 to Zone-0 mean per-user rate; absent when Zone 1 is empty.
std::optional<double> fairness_zeta(const TrialReport& report);

// Planar user density inside Zone 0, users/m^2. Undefined for a collapsed
// zone (radius zero).
double user_density(int zone0_users, double zone0_radius);

// Sequential Monte Carlo over `trials` draws with per-trial seeds derived
// from `seed`; identical inputs give identical summaries. A failing trial
// is rethrown with its index prepended.
MetricSummary monte_carlo(const TrialSetup& setup, int trials, std::uint64_t seed);

}  // namespace attocell
