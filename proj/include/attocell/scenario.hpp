#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "attocell/metrics.hpp"

namespace attocell {

struct RoomDims {
    double width = 10.0;   // metres, x extent
    double depth = 9.0;    // metres, y extent
    double height = 3.5;   // metres
};

// Access point as authored in the config: angles in degrees. Converted to
// the internal radian form by ScenarioConfig::access_point().
struct ApSpec {
    int id = 1;
    std::array<double, 3> position{5.0, 4.5, 3.5};
    double half_angle_deg = 60.0;
    double optical_power = 9.0;    // watts
    double bandwidth = 20e6;       // hertz
    int subcarriers = 64;
};

// Receiver as authored: detector area in cm^2, field of view in degrees.
struct ReceiverSpec {
    double detector_area_cm2 = 1.0;
    double fov_deg = 90.0;
    double refractive_index = 1.5;
    double filter_gain = 1.0;
    double oe_efficiency = 0.53;   // A/W
    double noise_density = 1e-21;  // A^2/Hz
};

// Parameter grids for the sweep subcommands.
struct SweepSpec {
    std::vector<double> rho{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    std::vector<double> beta{1.0};
    std::vector<double> theta_deg{30.0, 45.0, 60.0};
    std::vector<double> d12;  // AP spacing grid; empty derives one from the cell radius
    std::vector<PowerScheme> schemes{PowerScheme::Equal};
};

// Full scenario description. Values are stored in the units the config file
// uses (degrees, cm^2, lux) so that load -> serialize -> load is identity;
// the accessors below produce the internal radian/m^2 representations.
struct ScenarioConfig {
    RoomDims room;
    double plane_separation = 3.5;  // metres between Tx and Rx planes
    std::vector<ApSpec> aps{ApSpec{}};
    ReceiverSpec receiver;
    RateModel rate_model;
    ZonePolicy policy;
    IlluminationSpec illumination;
    SweepSpec sweeps;
    double map_resolution = 0.05;  // metres
    int trials = 10000;
    std::uint64_t seed = 12345;

    AccessPoint access_point(std::size_t index) const;
    Receiver receiver_model() const;
    ApLayout layout() const;
};

ScenarioConfig default_config();

// Parse / validate a config from JSON text. Unknown keys, wrong types and
// out-of-range values are reported with their key path.
ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::string& path);
std::string serialize_config(const ScenarioConfig& config);

// Downlink rate map over the room footprint: each grid node reports the
// strongest AP, the rate that AP would deliver granting the node its whole
// subcarrier set, and whether the node sits in that AP's Zone 0. Zone splits
// are computed per AP in isolation so each cell shows its own footprint.
struct RateMap {
    double resolution = 0.05;
    std::size_t nx = 0;
    std::size_t ny = 0;
    std::vector<int> serving;          // AP id per node, -1 where nothing reaches
    std::vector<double> rate;          // bit/s per node
    std::vector<std::uint8_t> in_zone0;
    double x(std::size_t i) const { return static_cast<double>(i) * resolution; }
    double y(std::size_t j) const { return static_cast<double>(j) * resolution; }
    std::size_t at(std::size_t i, std::size_t j) const { return j * nx + i; }
};

RateMap rate_map(const ScenarioConfig& config);

}  // namespace attocell
