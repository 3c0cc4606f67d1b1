#include "attocell/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "attocell/rng.hpp"

namespace attocell {

const char* scheme_name(PowerScheme scheme) {
    switch (scheme) {
        case PowerScheme::Equal:
            return "equal";
        case PowerScheme::WaterFilling:
            return "waterfilling";
        case PowerScheme::ChannelInversion:
            return "channel_inversion";
    }
    throw std::logic_error("unhandled power scheme");
}

PowerScheme scheme_from_name(const std::string& name) {
    if (name == "equal") return PowerScheme::Equal;
    if (name == "waterfilling") return PowerScheme::WaterFilling;
    if (name == "channel_inversion") return PowerScheme::ChannelInversion;
    throw std::runtime_error("unknown power scheme '" + name +
                             "' (expected equal, waterfilling or channel_inversion)");
}

std::vector<PlacedUser> place_users(UserZone zone, double inner, double outer,
                                    int count, std::mt19937_64& rng) {
    if (count < 0) throw std::invalid_argument("user count must be non-negative");
    if (!(inner >= 0.0) || outer < inner) throw std::invalid_argument("invalid radial interval");
    std::vector<PlacedUser> users;
    users.reserve(static_cast<std::size_t>(count));
    const double a2 = inner * inner;
    const double span = outer * outer - a2;
    for (int i = 0; i < count; ++i) {
        // Uniform over the annulus area: the squared radius is uniform.
        const double r = std::sqrt(a2 + span * uniform_unit(rng));
        users.push_back(PlacedUser{zone, r, 0.0, 1});
    }
    return users;
}

double electrical_gain(double gain, double bandwidth, const Receiver& rx,
                       const RateModel& model) {
    return snr(1.0, bandwidth, gain, rx, model);
}

PowerAllocation allocate_equal(std::span<const PlacedUser> users, double subcarrier_power) {
    if (!(subcarrier_power >= 0.0))
        throw std::invalid_argument("subcarrier power must be non-negative");
    PowerAllocation out;
    out.scheme = PowerScheme::Equal;
    out.powers.assign(users.size(), subcarrier_power);
    return out;
}

PowerAllocation allocate_waterfilling(std::span<const PlacedUser> users,
                                      double electrical_budget, double bandwidth,
                                      const Receiver& rx, const RateModel& model) {
    if (!(electrical_budget >= 0.0))
        throw std::invalid_argument("electrical budget must be non-negative");
    PowerAllocation out;
    out.scheme = PowerScheme::WaterFilling;
    out.powers.assign(users.size(), 0.0);
    if (users.empty() || electrical_budget == 0.0) return out;

    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> floor_level(users.size());  // inverse electrical gain
    double lowest = inf;
    for (std::size_t i = 0; i < users.size(); ++i) {
        const double g =
            users[i].gain > 0.0 ? electrical_gain(users[i].gain, bandwidth, rx, model) : 0.0;
        floor_level[i] = g > 0.0 ? 1.0 / g : inf;
        lowest = std::min(lowest, floor_level[i]);
    }
    if (lowest == inf)
        throw std::runtime_error("water-filling infeasible: every channel gain is zero");

    // Bisect the water level until the spent budget matches, then solve the
    // level in closed form for the active set so the budget is conserved to
    // rounding error.
    double lo = lowest;
    double hi = lowest + electrical_budget;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        double spent = 0.0;
        for (double f : floor_level)
            if (mid > f) spent += mid - f;
        (spent < electrical_budget ? lo : hi) = mid;
    }
    double level = 0.5 * (lo + hi);
    for (std::size_t pass = 0; pass <= users.size(); ++pass) {
        double sum = 0.0;
        int active = 0;
        for (double f : floor_level) {
            if (level > f) {
                sum += f;
                ++active;
            }
        }
        if (active == 0) break;  // budget too small to lift anyone: leave zeros
        const double exact = (electrical_budget + sum) / active;
        if (exact == level) break;
        level = exact;
    }
    for (std::size_t i = 0; i < users.size(); ++i)
        if (level > floor_level[i]) out.powers[i] = std::sqrt(level - floor_level[i]);
    return out;
}

PowerAllocation allocate_channel_inversion(std::span<const PlacedUser> users,
                                           double electrical_budget, double bandwidth,
                                           const Receiver& rx, const RateModel& model) {
    if (!(electrical_budget >= 0.0))
        throw std::invalid_argument("electrical budget must be non-negative");
    PowerAllocation out;
    out.scheme = PowerScheme::ChannelInversion;
    out.powers.assign(users.size(), 0.0);
    if (users.empty()) return out;

    std::vector<double> inverse(users.size(), 0.0);
    double inverse_sum = 0.0;
    int included = 0;
    for (std::size_t i = 0; i < users.size(); ++i) {
        if (users[i].gain > 0.0) {
            inverse[i] = 1.0 / electrical_gain(users[i].gain, bandwidth, rx, model);
            inverse_sum += inverse[i];
            ++included;
        } else {
            ++out.excluded;  // cannot invert a dead link; it keeps zero power
        }
    }
    if (included == 0)
        throw std::runtime_error("channel inversion infeasible: every channel gain is zero");
    // Every served user lands on the same post-allocation SNR.
    const double common_snr = electrical_budget / inverse_sum;
    for (std::size_t i = 0; i < users.size(); ++i)
        if (inverse[i] > 0.0) out.powers[i] = std::sqrt(common_snr * inverse[i]);
    return out;
}

namespace {

PowerAllocation allocate_for(PowerScheme scheme, std::span<const PlacedUser> users,
                             double subcarrier_power, double bandwidth,
                             const Receiver& rx, const RateModel& model) {
    const double budget =
        static_cast<double>(users.size()) * subcarrier_power * subcarrier_power;
    switch (scheme) {
        case PowerScheme::Equal:
            return allocate_equal(users, subcarrier_power);
        case PowerScheme::WaterFilling:
            return allocate_waterfilling(users, budget, bandwidth, rx, model);
        case PowerScheme::ChannelInversion:
            return allocate_channel_inversion(users, budget, bandwidth, rx, model);
    }
    throw std::logic_error("unhandled power scheme");
}

}  // namespace

TrialReport run_trial(const ZonePair& zones, PowerScheme scheme, const AccessPoint& ap,
                      const Receiver& rx, const RateModel& model,
                      double plane_separation, std::uint64_t seed) {
    if (ap.subcarriers < 1) throw std::domain_error("subcarrier count must be positive");
    const int total = ap.subcarriers;
    const double p_sub = ap.optical_power / total;
    const double b_sub = ap.bandwidth / total;

    auto sample_group = [&](UserZone zone, double inner, double outer, int count,
                            std::uint64_t stream, PowerScheme group_scheme) {
        std::mt19937_64 rng(derive_seed(seed, stream));
        auto placed = place_users(zone, inner, outer, count, rng);
        for (auto& user : placed)
            user.gain = channel_gain(ap, rx, LinkGeometry{user.radial, plane_separation});
        const auto alloc = allocate_for(group_scheme, placed, p_sub, b_sub, rx, model);
        std::vector<TrialUser> group(placed.size());
        for (std::size_t i = 0; i < placed.size(); ++i) {
            const SubcarrierShare share{
                b_sub, snr(alloc.powers[i], b_sub, placed[i].gain, rx, model)};
            group[i] = TrialUser{placed[i].radial, placed[i].gain, alloc.powers[i],
                                 achievable_rate(std::span<const SubcarrierShare>(&share, 1),
                                                 model)};
        }
        return group;
    };

    TrialReport report;
    report.zones = zones;
    report.seed = seed;
    report.zone0 = sample_group(UserZone::Zone0, 0.0, zones.zone0_radius,
                                zones.zone0_subcarriers, 0, scheme);
    report.zone1 = sample_group(UserZone::Zone1, zones.zone0_radius, zones.cell_radius,
                                zones.zone1_subcarriers, 1, scheme);
    // The reference population spreads one user per subcarrier over the whole
    // cell with a flat power split, on its own substream.
    report.benchmark = sample_group(UserZone::FullCell, 0.0, zones.cell_radius, total, 2,
                                    PowerScheme::Equal);
    return report;
}

}  // namespace attocell
