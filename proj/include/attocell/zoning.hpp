#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "attocell/channel.hpp"

namespace attocell {

// Zone policy: users inside Zone 0 are guaranteed the fraction rho of the
// cell-centre rate, Zone 0 may take at most the fraction beta of the
// subcarriers, and the radius search walks down in radius_step increments.
struct ZonePolicy {
    double rho = 0.5;
    double beta = 1.0;
    double radius_step = 1e-3;  // metres
};

// Optional illuminance window the lighting design must keep everywhere
// inside Zone 0.
struct IlluminationSpec {
    bool enabled = false;
    double min_lux = 200.0;
    double max_lux = 800.0;
};

// Result of the two-zone split for one attocell. Zone 1 is the annulus from
// the Zone-0 edge out to the cell radius.
struct ZonePair {
    double zone0_radius = 0.0;
    int zone0_subcarriers = 0;
    double zone1_width = 0.0;
    int zone1_subcarriers = 0;
    double cell_radius = 0.0;
};

// A set of access points sharing one receive plane.
struct ApLayout {
    std::vector<AccessPoint> aps;
    double plane_separation = 0.0;  // metres between Tx and Rx planes
};

// Radius of the illumination footprint on the receive plane.
double cell_radius(double plane_separation, double half_angle);

// Largest Zone-0 radius the AP at `index` may use without its zone entering
// a neighbour's footprint. Can be negative when the cells overlap deeply.
double overlap_limit(std::size_t index, const ApLayout& layout, std::span<const double> radii);

// Constant lambda of the closed-form SNR profile
//   SNR(r) = lambda * (d_v^2 + r^2)^-(m+3)
// for one subcarrier carrying `subcarrier_power` over `subcarrier_bandwidth`.
double lambda_param(const AccessPoint& ap, const Receiver& rx, const RateModel& model,
                    double subcarrier_power, double subcarrier_bandwidth,
                    double plane_separation);

// Zone-0 radius at which `zone_budget` subcarriers exactly deliver the
// fraction rho of the cell-centre rate at the zone edge, clipped by the
// overlap and illumination caps and floored at zero.
double zone0_radius(double rho, double zone_budget, double total_subcarriers,
                    double lambda, double order, double plane_separation,
                    double overlap_cap, double illumination_cap);

// Subcarriers needed so the rate at `radius` reaches the fraction rho of
// the cell-centre rate, floored to an integer and clamped to the cell total.
int zone0_subcarriers(double rho, int total_subcarriers, double lambda, double order,
                      double plane_separation, double radius);

// Horizontal illuminance at radial offset `radial` on the receive plane.
double illuminance(double center_intensity, double order, double plane_separation,
                   double radial);

// Largest radius keeping the illuminance ratio to the cell centre within the
// configured window; +infinity when the constraint is disabled.
double illumination_limit(const IlluminationSpec& spec, double order,
                          double plane_separation);

// Two-step zone construction: start from the analytic radius under the full
// permitted budget, walk the radius down until the subcarrier demand fits the
// beta cap, and hand Zone 0 the whole budget when it fills the cell. When no
// radius fits (the demanded floor(rho*N) exceeds the cap even at the centre)
// the zone collapses to radius zero and the nominal demand is reported, which
// deliberately violates the cap to make the misconfiguration visible.
ZonePair define_zones(const AccessPoint& ap, const Receiver& rx, const RateModel& model,
                      const ApLayout& layout, const ZonePolicy& policy,
                      const IlluminationSpec& illum);

}  // namespace attocell
