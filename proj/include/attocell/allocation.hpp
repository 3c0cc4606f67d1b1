#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "attocell/channel.hpp"
#include "attocell/zoning.hpp"

namespace attocell {

enum class PowerScheme { Equal, WaterFilling, ChannelInversion };

// Stable text tokens shared by config files and CSV output.
const char* scheme_name(PowerScheme scheme);
PowerScheme scheme_from_name(const std::string& name);

// Power budgets are conserved on electrical (squared-amplitude) terms:
// a zone with n users holding per-subcarrier power P has budget n * P^2.
enum class BudgetDomain { ElectricalSum };

enum class UserZone { Zone0, Zone1, FullCell };

struct PlacedUser {
    UserZone zone = UserZone::FullCell;
    double radial = 0.0;  // metres from the serving AP axis
    double gain = 0.0;    // line-of-sight channel gain
    int subcarriers = 1;
};

struct PowerAllocation {
    PowerScheme scheme = PowerScheme::Equal;
    BudgetDomain budget_domain = BudgetDomain::ElectricalSum;
    std::vector<double> powers;  // optical watts per user
    int excluded = 0;            // dead links dropped by channel inversion
};

struct TrialUser {
    double radial = 0.0;
    double gain = 0.0;
    double power = 0.0;  // optical watts on the user's subcarrier
    double rate = 0.0;   // bit/s
};

// One Monte Carlo draw: the zoned cell population plus the uniform
// benchmark population it is compared against.
struct TrialReport {
    std::vector<TrialUser> zone0;
    std::vector<TrialUser> zone1;
    std::vector<TrialUser> benchmark;
    ZonePair zones;
    std::uint64_t seed = 0;
};

// Draw `count` users uniformly over the annulus area between the two radii.
std::vector<PlacedUser> place_users(UserZone zone, double inner, double outer,
                                    int count, std::mt19937_64& rng);

// Electrical SNR per unit squared optical power; the quantity the schemes
// water-fill or invert against.
double electrical_gain(double gain, double bandwidth, const Receiver& rx,
                       const RateModel& model);

PowerAllocation allocate_equal(std::span<const PlacedUser> users, double subcarrier_power);

// Classic water filling on the electrical budget; maximises the zone sum
// rate. Dead links (zero gain) get no power.
PowerAllocation allocate_waterfilling(std::span<const PlacedUser> users,
                                      double electrical_budget, double bandwidth,
                                      const Receiver& rx, const RateModel& model);

// Inverts each user's channel so every served user sees the same SNR; dead
// links are excluded and counted.
PowerAllocation allocate_channel_inversion(std::span<const PlacedUser> users,
                                           double electrical_budget, double bandwidth,
                                           const Receiver& rx, const RateModel& model);

// One full draw: populate both zones (one user per owned subcarrier), apply the
// scheme per zone, and populate the equal-power full-cell benchmark on its
// own seed substream.
TrialReport run_trial(const ZonePair& zones, PowerScheme scheme, const AccessPoint& ap,
                      const Receiver& rx, const RateModel& model,
                      double plane_separation, std::uint64_t seed);

}  // namespace attocell
