#include "attocell/scenario.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace attocell {

namespace {

using json = nlohmann::ordered_json;

constexpr double kDegToRad = std::numbers::pi / 180.0;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw std::runtime_error("config: " + path + ": " + message);
}

void expect_object(const json& node, const std::string& path) {
    if (!node.is_object()) fail(path, "expected an object");
}

void check_keys(const json& node, const std::string& path,
                std::initializer_list<const char*> allowed) {
    for (const auto& item : node.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) fail(path + "." + item.key(), "unknown key");
    }
}

double as_number(const json& node, const std::string& path) {
    if (!node.is_number()) fail(path, "expected a number");
    return node.get<double>();
}

double positive(const json& node, const std::string& path) {
    const double v = as_number(node, path);
    if (!(v > 0.0)) fail(path, "must be positive");
    return v;
}

double open_unit(const json& node, const std::string& path) {
    const double v = as_number(node, path);
    if (!(v > 0.0) || !(v < 1.0)) fail(path, "must lie in (0, 1)");
    return v;
}

double unit_fraction(const json& node, const std::string& path) {
    const double v = as_number(node, path);
    if (!(v > 0.0) || v > 1.0) fail(path, "must lie in (0, 1]");
    return v;
}

double half_angle_deg(const json& node, const std::string& path) {
    const double v = as_number(node, path);
    if (!(v > 0.0) || !(v < 90.0)) fail(path, "must lie in (0, 90) degrees");
    return v;
}

double fov_deg(const json& node, const std::string& path) {
    const double v = as_number(node, path);
    if (!(v > 0.0) || v > 90.0) fail(path, "must lie in (0, 90] degrees");
    return v;
}

int positive_int(const json& node, const std::string& path) {
    if (!node.is_number_integer()) fail(path, "expected an integer");
    const auto v = node.get<long long>();
    if (v < 1) fail(path, "must be at least 1");
    if (v > 1'000'000) fail(path, "unreasonably large");
    return static_cast<int>(v);
}

bool as_bool(const json& node, const std::string& path) {
    if (!node.is_boolean()) fail(path, "expected true or false");
    return node.get<bool>();
}

std::uint64_t as_seed(const json& node, const std::string& path) {
    if (node.is_number_unsigned()) return node.get<std::uint64_t>();
    if (node.is_number_integer() && node.get<long long>() >= 0)
        return static_cast<std::uint64_t>(node.get<long long>());
    fail(path, "expected a non-negative integer");
}

std::vector<double> number_list(const json& node, const std::string& path,
                                double (*check)(const json&, const std::string&)) {
    if (!node.is_array()) fail(path, "expected an array");
    if (node.empty()) fail(path, "must not be empty");
    std::vector<double> values;
    values.reserve(node.size());
    for (std::size_t i = 0; i < node.size(); ++i)
        values.push_back(check(node[i], path + "[" + std::to_string(i) + "]"));
    return values;
}

void parse_room(const json& node, const std::string& path, RoomDims& room) {
    expect_object(node, path);
    check_keys(node, path, {"width_m", "depth_m", "height_m"});
    if (node.contains("width_m")) room.width = positive(node["width_m"], path + ".width_m");
    if (node.contains("depth_m")) room.depth = positive(node["depth_m"], path + ".depth_m");
    if (node.contains("height_m")) room.height = positive(node["height_m"], path + ".height_m");
}

ApSpec parse_ap(const json& node, const std::string& path) {
    expect_object(node, path);
    check_keys(node, path,
               {"id", "position_m", "half_angle_deg", "optical_power_w", "bandwidth_hz",
                "subcarriers"});
    ApSpec ap;
    if (node.contains("id")) {
        if (!node["id"].is_number_integer()) fail(path + ".id", "expected an integer");
        ap.id = node["id"].get<int>();
    }
    if (node.contains("position_m")) {
        const auto& pos = node["position_m"];
        if (!pos.is_array() || pos.size() != 3)
            fail(path + ".position_m", "expected an array of three numbers");
        for (int k = 0; k < 3; ++k)
            ap.position[static_cast<std::size_t>(k)] =
                as_number(pos[k], path + ".position_m[" + std::to_string(k) + "]");
    }
    if (node.contains("half_angle_deg"))
        ap.half_angle_deg = half_angle_deg(node["half_angle_deg"], path + ".half_angle_deg");
    if (node.contains("optical_power_w"))
        ap.optical_power = positive(node["optical_power_w"], path + ".optical_power_w");
    if (node.contains("bandwidth_hz"))
        ap.bandwidth = positive(node["bandwidth_hz"], path + ".bandwidth_hz");
    if (node.contains("subcarriers"))
        ap.subcarriers = positive_int(node["subcarriers"], path + ".subcarriers");
    return ap;
}

void parse_receiver(const json& node, const std::string& path, ReceiverSpec& rx) {
    expect_object(node, path);
    check_keys(node, path,
               {"detector_area_cm2", "fov_deg", "refractive_index", "filter_gain",
                "oe_efficiency_a_per_w", "noise_density_a2_per_hz"});
    if (node.contains("detector_area_cm2"))
        rx.detector_area_cm2 = positive(node["detector_area_cm2"], path + ".detector_area_cm2");
    if (node.contains("fov_deg")) rx.fov_deg = fov_deg(node["fov_deg"], path + ".fov_deg");
    if (node.contains("refractive_index"))
        rx.refractive_index = positive(node["refractive_index"], path + ".refractive_index");
    if (node.contains("filter_gain"))
        rx.filter_gain = positive(node["filter_gain"], path + ".filter_gain");
    if (node.contains("oe_efficiency_a_per_w"))
        rx.oe_efficiency = positive(node["oe_efficiency_a_per_w"], path + ".oe_efficiency_a_per_w");
    if (node.contains("noise_density_a2_per_hz"))
        rx.noise_density =
            positive(node["noise_density_a2_per_hz"], path + ".noise_density_a2_per_hz");
}

void parse_rate_model(const json& node, const std::string& path, RateModel& model) {
    expect_object(node, path);
    check_keys(node, path, {"clipping_ratio", "rate_constant", "half_factor"});
    if (node.contains("clipping_ratio"))
        model.clipping_ratio = positive(node["clipping_ratio"], path + ".clipping_ratio");
    if (node.contains("rate_constant"))
        model.rate_constant = positive(node["rate_constant"], path + ".rate_constant");
    if (node.contains("half_factor"))
        model.half_factor = as_bool(node["half_factor"], path + ".half_factor");
}

void parse_policy(const json& node, const std::string& path, ZonePolicy& policy) {
    expect_object(node, path);
    check_keys(node, path, {"rho", "beta", "radius_step_m"});
    if (node.contains("rho")) policy.rho = open_unit(node["rho"], path + ".rho");
    if (node.contains("beta")) policy.beta = unit_fraction(node["beta"], path + ".beta");
    if (node.contains("radius_step_m"))
        policy.radius_step = positive(node["radius_step_m"], path + ".radius_step_m");
}

void parse_illumination(const json& node, const std::string& path, IlluminationSpec& illum) {
    expect_object(node, path);
    check_keys(node, path, {"enabled", "min_lux", "max_lux"});
    if (node.contains("enabled")) illum.enabled = as_bool(node["enabled"], path + ".enabled");
    if (node.contains("min_lux")) illum.min_lux = positive(node["min_lux"], path + ".min_lux");
    if (node.contains("max_lux")) illum.max_lux = positive(node["max_lux"], path + ".max_lux");
    if (illum.max_lux < illum.min_lux) fail(path, "max_lux must be at least min_lux");
}

void parse_sweeps(const json& node, const std::string& path, SweepSpec& sweeps) {
    expect_object(node, path);
    check_keys(node, path, {"rho", "beta", "theta_deg", "d12_m", "schemes"});
    if (node.contains("rho")) sweeps.rho = number_list(node["rho"], path + ".rho", open_unit);
    if (node.contains("beta"))
        sweeps.beta = number_list(node["beta"], path + ".beta", unit_fraction);
    if (node.contains("theta_deg"))
        sweeps.theta_deg = number_list(node["theta_deg"], path + ".theta_deg", half_angle_deg);
    if (node.contains("d12_m"))
        sweeps.d12 = number_list(node["d12_m"], path + ".d12_m", positive);
    if (node.contains("schemes")) {
        const auto& list = node["schemes"];
        if (!list.is_array() || list.empty())
            fail(path + ".schemes", "expected a non-empty array");
        sweeps.schemes.clear();
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string item_path = path + ".schemes[" + std::to_string(i) + "]";
            if (!list[i].is_string()) fail(item_path, "expected a string");
            try {
                sweeps.schemes.push_back(scheme_from_name(list[i].get<std::string>()));
            } catch (const std::exception& e) {
                fail(item_path, e.what());
            }
        }
    }
}

}  // namespace

AccessPoint ScenarioConfig::access_point(std::size_t index) const {
    if (index >= aps.size()) throw std::out_of_range("access point index outside config");
    const ApSpec& spec = aps[index];
    AccessPoint ap;
    ap.id = spec.id;
    ap.position = spec.position;
    ap.half_angle = spec.half_angle_deg * kDegToRad;
    ap.optical_power = spec.optical_power;
    ap.bandwidth = spec.bandwidth;
    ap.subcarriers = spec.subcarriers;
    return ap;
}

Receiver ScenarioConfig::receiver_model() const {
    Receiver rx;
    rx.detector_area = receiver.detector_area_cm2 * 1e-4;  // cm^2 to m^2
    rx.fov = receiver.fov_deg * kDegToRad;
    rx.refractive_index = receiver.refractive_index;
    rx.filter_gain = receiver.filter_gain;
    rx.oe_efficiency = receiver.oe_efficiency;
    rx.noise_density = receiver.noise_density;
    return rx;
}

ApLayout ScenarioConfig::layout() const {
    ApLayout out;
    out.plane_separation = plane_separation;
    out.aps.reserve(aps.size());
    for (std::size_t i = 0; i < aps.size(); ++i) out.aps.push_back(access_point(i));
    return out;
}

ScenarioConfig default_config() {
    return ScenarioConfig{};
}

ScenarioConfig parse_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("config: ") + e.what());
    }
    expect_object(root, "$");
    check_keys(root, "$",
               {"room", "plane_separation_m", "aps", "receiver", "rate_model", "zone_policy",
                "illumination", "sweeps", "map_resolution_m", "trials", "seed"});

    ScenarioConfig cfg = default_config();
    if (root.contains("room")) parse_room(root["room"], "room", cfg.room);
    if (root.contains("plane_separation_m"))
        cfg.plane_separation = positive(root["plane_separation_m"], "plane_separation_m");
    if (root.contains("aps")) {
        const auto& list = root["aps"];
        if (!list.is_array() || list.empty()) fail("aps", "expected a non-empty array");
        cfg.aps.clear();
        for (std::size_t i = 0; i < list.size(); ++i)
            cfg.aps.push_back(parse_ap(list[i], "aps[" + std::to_string(i) + "]"));
    }
    if (root.contains("receiver")) parse_receiver(root["receiver"], "receiver", cfg.receiver);
    if (root.contains("rate_model"))
        parse_rate_model(root["rate_model"], "rate_model", cfg.rate_model);
    if (root.contains("zone_policy")) parse_policy(root["zone_policy"], "zone_policy", cfg.policy);
    if (root.contains("illumination"))
        parse_illumination(root["illumination"], "illumination", cfg.illumination);
    if (root.contains("sweeps")) parse_sweeps(root["sweeps"], "sweeps", cfg.sweeps);
    if (root.contains("map_resolution_m"))
        cfg.map_resolution = positive(root["map_resolution_m"], "map_resolution_m");
    if (root.contains("trials")) cfg.trials = positive_int(root["trials"], "trials");
    if (root.contains("seed")) cfg.seed = as_seed(root["seed"], "seed");

    std::set<int> ids;
    for (std::size_t i = 0; i < cfg.aps.size(); ++i) {
        const std::string path = "aps[" + std::to_string(i) + "]";
        const auto& ap = cfg.aps[i];
        if (!ids.insert(ap.id).second) fail(path + ".id", "duplicate access point id");
        if (ap.position[0] < 0.0 || ap.position[0] > cfg.room.width ||
            ap.position[1] < 0.0 || ap.position[1] > cfg.room.depth)
            fail(path + ".position_m", "outside the room footprint");
    }
    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string serialize_config(const ScenarioConfig& config) {
    json root;
    root["room"] = {{"width_m", config.room.width},
                    {"depth_m", config.room.depth},
                    {"height_m", config.room.height}};
    root["plane_separation_m"] = config.plane_separation;
    root["aps"] = json::array();
    for (const auto& ap : config.aps) {
        root["aps"].push_back({{"id", ap.id},
                               {"position_m", ap.position},
                               {"half_angle_deg", ap.half_angle_deg},
                               {"optical_power_w", ap.optical_power},
                               {"bandwidth_hz", ap.bandwidth},
                               {"subcarriers", ap.subcarriers}});
    }
    root["receiver"] = {{"detector_area_cm2", config.receiver.detector_area_cm2},
                        {"fov_deg", config.receiver.fov_deg},
                        {"refractive_index", config.receiver.refractive_index},
                        {"filter_gain", config.receiver.filter_gain},
                        {"oe_efficiency_a_per_w", config.receiver.oe_efficiency},
                        {"noise_density_a2_per_hz", config.receiver.noise_density}};
    root["rate_model"] = {{"clipping_ratio", config.rate_model.clipping_ratio},
                          {"rate_constant", config.rate_model.rate_constant},
                          {"half_factor", config.rate_model.half_factor}};
    root["zone_policy"] = {{"rho", config.policy.rho},
                           {"beta", config.policy.beta},
                           {"radius_step_m", config.policy.radius_step}};
    root["illumination"] = {{"enabled", config.illumination.enabled},
                            {"min_lux", config.illumination.min_lux},
                            {"max_lux", config.illumination.max_lux}};
    json schemes = json::array();
    for (PowerScheme scheme : config.sweeps.schemes) schemes.push_back(scheme_name(scheme));
    root["sweeps"] = {{"rho", config.sweeps.rho},
                      {"beta", config.sweeps.beta},
                      {"theta_deg", config.sweeps.theta_deg},
                      {"d12_m", config.sweeps.d12},
                      {"schemes", schemes}};
    root["map_resolution_m"] = config.map_resolution;
    root["trials"] = config.trials;
    root["seed"] = config.seed;
    return root.dump(2) + "\n";
}

RateMap rate_map(const ScenarioConfig& config) {
    if (config.aps.empty()) throw std::runtime_error("no access points configured");
    const Receiver rx = config.receiver_model();
    const double dv = config.plane_separation;

    RateMap map;
    map.resolution = config.map_resolution;
    map.nx = static_cast<std::size_t>(std::floor(config.room.width / map.resolution)) + 1;
    map.ny = static_cast<std::size_t>(std::floor(config.room.depth / map.resolution)) + 1;
    const std::size_t nodes = map.nx * map.ny;
    map.serving.assign(nodes, -1);
    map.rate.assign(nodes, 0.0);
    map.in_zone0.assign(nodes, 0);

    std::vector<AccessPoint> aps(config.aps.size());
    std::vector<ZonePair> zones(config.aps.size());
    for (std::size_t k = 0; k < config.aps.size(); ++k) {
        aps[k] = config.access_point(k);
        // Isolated per-AP split: the map shows each cell's own footprint.
        ApLayout solo;
        solo.aps = {aps[k]};
        solo.plane_separation = dv;
        zones[k] =
            define_zones(aps[k], rx, config.rate_model, solo, config.policy, config.illumination);
    }

    for (std::size_t j = 0; j < map.ny; ++j) {
        const double y = map.y(j);
        for (std::size_t i = 0; i < map.nx; ++i) {
            const double x = map.x(i);
            double best_gain = 0.0;
            double best_radial = 0.0;
            std::size_t best = aps.size();
            for (std::size_t k = 0; k < aps.size(); ++k) {
                const double radial =
                    std::hypot(x - aps[k].position[0], y - aps[k].position[1]);
                const double gain = channel_gain(aps[k], rx, LinkGeometry{radial, dv});
                if (gain > best_gain) {
                    best_gain = gain;
                    best_radial = radial;
                    best = k;
                }
            }
            if (best == aps.size()) continue;  // nothing reaches this node
            const auto& ap = aps[best];
            const double b_sub = ap.bandwidth / ap.subcarriers;
            const double p_sub = ap.optical_power / ap.subcarriers;
            const SubcarrierShare share{b_sub, snr(p_sub, b_sub, best_gain, rx, config.rate_model)};
            const double one_carrier =
                achievable_rate(std::span<const SubcarrierShare>(&share, 1), config.rate_model);
            const std::size_t idx = map.at(i, j);
            // The probe rate grants the node the AP's entire subcarrier set.
            map.rate[idx] = static_cast<double>(ap.subcarriers) * one_carrier;
            map.serving[idx] = ap.id;
            map.in_zone0[idx] = best_radial <= zones[best].zone0_radius ? 1 : 0;
        }
    }
    return map;
}

}  // namespace attocell
