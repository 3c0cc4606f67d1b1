#include "attocell/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace attocell {

double LinkGeometry::distance() const {
    return std::hypot(radial, vertical);
}

double LinkGeometry::incidence_angle() const {
    if (!(vertical > 0.0)) throw std::domain_error("plane separation must be positive");
    if (!(radial >= 0.0)) throw std::domain_error("radial offset must be non-negative");
    return std::atan(radial / vertical);
}

double lambertian_order(double half_angle) {
    if (!(half_angle > 0.0) || !(half_angle < std::numbers::pi / 2))
        throw std::domain_error("half-intensity angle must lie in (0, pi/2)");
    return -1.0 / std::log2(std::cos(half_angle));
}

double concentrator_gain(double incidence, double refractive_index, double fov) {
    if (!(incidence >= 0.0)) throw std::domain_error("incidence angle must be non-negative");
    if (!(fov > 0.0) || fov > std::numbers::pi / 2)
        throw std::domain_error("field of view must lie in (0, pi/2]");
    if (!(refractive_index > 0.0)) throw std::domain_error("refractive index must be positive");
    if (incidence > fov) return 0.0;
    const double s = std::sin(fov);
    return refractive_index * refractive_index / (s * s);
}

double channel_gain(const AccessPoint& ap, const Receiver& rx, const LinkGeometry& geom) {
    if (!(rx.detector_area > 0.0)) throw std::domain_error("detector area must be positive");
    const double g = concentrator_gain(geom.incidence_angle(), rx.refractive_index, rx.fov);
    if (g == 0.0) return 0.0;
    // Parallel planes make the emission and incidence cosines equal, each
    // being the plane separation over the euclidean distance; the Lambertian
    // lobe and both cosines collapse into the two powers below.
    const double m = lambertian_order(ap.half_angle);
    const double d = geom.distance();
    return (m + 1.0) * rx.detector_area * rx.filter_gain * g *
           std::pow(geom.vertical, m + 1.0) /
           (2.0 * std::numbers::pi * std::pow(d, m + 3.0));
}

double sinr(double power, double bandwidth, double gain,
            std::span<const InterferenceTerm> interferers,
            const Receiver& rx, const RateModel& model) {
    if (!(power >= 0.0)) throw std::domain_error("optical power must be non-negative");
    if (!(bandwidth > 0.0)) throw std::domain_error("subcarrier bandwidth must be positive");
    if (!(gain >= 0.0)) throw std::domain_error("channel gain must be non-negative");
    if (!(rx.noise_density > 0.0)) throw std::domain_error("noise density must be positive");
    if (!(model.clipping_ratio > 0.0)) throw std::domain_error("clipping ratio must be positive");
    const double gamma = rx.oe_efficiency;
    const double signal = gamma * power * gain;
    double interference = 0.0;
    for (const auto& term : interferers) {
        const double current = gamma * term.power * term.gain;
        interference += current * current;
    }
    const double noise = model.clipping_ratio * rx.noise_density * bandwidth;
    return signal * signal / (noise + interference);
}

double snr(double power, double bandwidth, double gain,
           const Receiver& rx, const RateModel& model) {
    return sinr(power, bandwidth, gain, {}, rx, model);
}

double achievable_rate(std::span<const SubcarrierShare> shares, const RateModel& model) {
    const double c2 = model.rate_constant * model.rate_constant;
    double sum = 0.0;
    for (const auto& share : shares) {
        if (!(share.sinr >= 0.0)) throw std::domain_error("SINR must be non-negative");
        if (!(share.bandwidth >= 0.0)) throw std::domain_error("bandwidth must be non-negative");
        sum += share.bandwidth * std::log2(1.0 + c2 * share.sinr);
    }
    return model.half_factor ? 0.5 * sum : sum;
}

}  // namespace attocell
