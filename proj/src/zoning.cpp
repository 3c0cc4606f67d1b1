#include "attocell/zoning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace attocell {

double cell_radius(double plane_separation, double half_angle) {
    if (!(plane_separation > 0.0)) throw std::domain_error("plane separation must be positive");
    if (!(half_angle > 0.0) || !(half_angle < std::numbers::pi / 2))
        throw std::domain_error("half-intensity angle must lie in (0, pi/2)");
    return plane_separation * std::tan(half_angle);
}

double overlap_limit(std::size_t index, const ApLayout& layout, std::span<const double> radii) {
    if (index >= layout.aps.size()) throw std::out_of_range("access point index outside layout");
    if (radii.size() != layout.aps.size())
        throw std::invalid_argument("one cell radius per access point required");
    const auto& own = layout.aps[index].position;
    double worst = 0.0;
    for (std::size_t q = 0; q < layout.aps.size(); ++q) {
        if (q == index) continue;
        const auto& other = layout.aps[q].position;
        const double spacing = std::hypot(other[0] - own[0], other[1] - own[1]);
        worst = std::max(worst, std::max(radii[index] + radii[q] - spacing, 0.0));
    }
    return radii[index] - worst;
}

double lambda_param(const AccessPoint& ap, const Receiver& rx, const RateModel& model,
                    double subcarrier_power, double subcarrier_bandwidth,
                    double plane_separation) {
    if (!(subcarrier_power > 0.0)) throw std::domain_error("subcarrier power must be positive");
    if (!(subcarrier_bandwidth > 0.0)) throw std::domain_error("subcarrier bandwidth must be positive");
    if (!(plane_separation > 0.0)) throw std::domain_error("plane separation must be positive");
    if (!(rx.noise_density > 0.0)) throw std::domain_error("noise density must be positive");
    if (!(model.clipping_ratio > 0.0)) throw std::domain_error("clipping ratio must be positive");
    const double m = lambertian_order(ap.half_angle);
    const double g = concentrator_gain(0.0, rx.refractive_index, rx.fov);
    const double k = (m + 1.0) * rx.oe_efficiency * subcarrier_power * rx.filter_gain * g *
                     std::pow(plane_separation, m + 1.0) * rx.detector_area;
    const double pi2 = std::numbers::pi * std::numbers::pi;
    return k * k /
           (4.0 * rx.noise_density * model.clipping_ratio * subcarrier_bandwidth * pi2);
}

double zone0_radius(double rho, double zone_budget, double total_subcarriers,
                    double lambda, double order, double plane_separation,
                    double overlap_cap, double illumination_cap) {
    if (!(rho > 0.0) || rho > 1.0) throw std::domain_error("rate fraction must lie in (0, 1]");
    if (!(zone_budget >= 1.0) || zone_budget > total_subcarriers)
        throw std::domain_error("zone budget must lie in [1, total subcarriers]");
    if (!(lambda > 0.0)) throw std::domain_error("SNR constant must be positive");
    if (!(plane_separation > 0.0)) throw std::domain_error("plane separation must be positive");
    const double dv2 = plane_separation * plane_separation;
    const double center_snr = lambda * std::pow(dv2, -(order + 3.0));
    const double exponent = rho * total_subcarriers / zone_budget;
    // Inverting the edge-rate condition: the edge SNR must satisfy
    // (1 + edge)^budget = (1 + center)^(rho * total). Exponent one means the
    // edge target equals the centre SNR; short-circuit it so the radius
    // collapses to an exact zero instead of the square root of float dust.
    double analytic = 0.0;
    if (exponent != 1.0) {
        const double edge_snr = std::expm1(exponent * std::log1p(center_snr));
        const double radicand = std::pow(lambda / edge_snr, 1.0 / (order + 3.0)) - dv2;
        if (radicand > 0.0) analytic = std::sqrt(radicand);
    }
    return std::max(0.0, std::min({analytic, overlap_cap, illumination_cap}));
}

int zone0_subcarriers(double rho, int total_subcarriers, double lambda, double order,
                      double plane_separation, double radius) {
    if (!(rho > 0.0) || rho > 1.0) throw std::domain_error("rate fraction must lie in (0, 1]");
    if (total_subcarriers < 1) throw std::domain_error("subcarrier count must be positive");
    if (!(lambda > 0.0)) throw std::domain_error("SNR constant must be positive");
    if (!(radius >= 0.0)) throw std::domain_error("radius must be non-negative");
    if (!(plane_separation > 0.0)) throw std::domain_error("plane separation must be positive");
    const double dv2 = plane_separation * plane_separation;
    // Same expression for centre and edge so a zero radius cancels exactly.
    const double center = std::log1p(lambda * std::pow(dv2 + 0.0, -(order + 3.0)));
    const double edge = std::log1p(lambda * std::pow(dv2 + radius * radius, -(order + 3.0)));
    if (!(edge > 0.0)) return total_subcarriers;
    const double demand = rho * total_subcarriers * center / edge;
    // The floor guard keeps constructed equalities (demand integral in exact
    // arithmetic) from losing a subcarrier to the last rounding error.
    const double floored = std::floor(demand + 1e-9);
    return static_cast<int>(std::min(floored, static_cast<double>(total_subcarriers)));
}

double illuminance(double center_intensity, double order, double plane_separation,
                   double radial) {
    if (!(center_intensity >= 0.0)) throw std::domain_error("intensity must be non-negative");
    if (!(plane_separation > 0.0)) throw std::domain_error("plane separation must be positive");
    const double u = plane_separation * plane_separation + radial * radial;
    return center_intensity * std::pow(plane_separation, order + 1.0) /
           std::pow(u, (order + 3.0) / 2.0);
}

double illumination_limit(const IlluminationSpec& spec, double order,
                          double plane_separation) {
    if (!spec.enabled) return std::numeric_limits<double>::infinity();
    if (!(spec.min_lux > 0.0) || spec.max_lux < spec.min_lux)
        throw std::invalid_argument("illuminance window must satisfy 0 < min <= max");
    if (!(plane_separation > 0.0)) throw std::domain_error("plane separation must be positive");
    const double ratio = spec.max_lux / spec.min_lux;
    return plane_separation * std::sqrt(std::pow(ratio, 2.0 / (order + 3.0)) - 1.0);
}

ZonePair define_zones(const AccessPoint& ap, const Receiver& rx, const RateModel& model,
                      const ApLayout& layout, const ZonePolicy& policy,
                      const IlluminationSpec& illum) {
    if (ap.subcarriers < 1) throw std::domain_error("subcarrier count must be positive");
    if (!(policy.rho > 0.0) || !(policy.rho < 1.0))
        throw std::domain_error("rate fraction must lie in (0, 1)");
    if (!(policy.beta > 0.0) || policy.beta > 1.0)
        throw std::domain_error("subcarrier cap fraction must lie in (0, 1]");
    if (!(policy.radius_step > 0.0)) throw std::domain_error("radius step must be positive");

    const int total = ap.subcarriers;
    const double p_sub = ap.optical_power / total;
    const double b_sub = ap.bandwidth / total;
    const double dv = layout.plane_separation;
    const double order = lambertian_order(ap.half_angle);
    const double rc = cell_radius(dv, ap.half_angle);
    const double lambda = lambda_param(ap, rx, model, p_sub, b_sub, dv);

    // Neighbour overlap cap from the layout; an AP absent from it is isolated.
    double gamma_cap = rc;
    std::size_t index = layout.aps.size();
    for (std::size_t i = 0; i < layout.aps.size(); ++i) {
        if (layout.aps[i].id == ap.id) {
            index = i;
            break;
        }
    }
    if (index < layout.aps.size()) {
        std::vector<double> radii(layout.aps.size());
        for (std::size_t i = 0; i < layout.aps.size(); ++i)
            radii[i] = cell_radius(dv, layout.aps[i].half_angle);
        gamma_cap = overlap_limit(index, layout, radii);
    }
    const double lambda_cap = illumination_limit(illum, order, dv);

    const long long cap_ll = std::clamp<long long>(
        std::llround(policy.beta * total), 1, total);
    const int cap = static_cast<int>(cap_ll);

    // Step one: the largest admissible radius under the full permitted budget.
    double r = zone0_radius(policy.rho, cap, total, lambda, order, dv, gamma_cap, lambda_cap);

    // Step two: walk the radius down until the subcarrier demand fits the cap.
    int n0 = 0;
    bool accepted = false;
    for (; r > 0.0; r -= policy.radius_step) {
        n0 = zone0_subcarriers(policy.rho, total, lambda, order, dv, r);
        if (n0 <= cap) {
            accepted = true;
            break;
        }
    }
    if (!accepted) {
        // Even the cell centre demands more than the cap allows: collapse the
        // zone and report the nominal demand so the misconfiguration shows.
        r = 0.0;
        n0 = zone0_subcarriers(policy.rho, total, lambda, order, dv, 0.0);
    }
    if (r >= rc) n0 = cap;  // zone fills the cell: hand it the whole budget

    ZonePair out;
    out.zone0_radius = r;
    out.zone0_subcarriers = n0;
    out.zone1_width = rc - r;
    out.zone1_subcarriers = total - n0;
    out.cell_radius = rc;
    return out;
}

}  // namespace attocell
