#pragma once

#include <array>
#include <span>

namespace attocell {

// Downlink LED access point. Angles in radians, power in watts, bandwidth
// in hertz. The optical power and bandwidth are cell totals; OFDMA splits
// them evenly across the subcarriers.
struct AccessPoint {
    int id = 0;
    std::array<double, 3> position{};  // metres, in the transmitter plane
    double half_angle = 0.0;           // half-intensity semi-angle
    double optical_power = 0.0;
    double bandwidth = 0.0;
    int subcarriers = 1;
};

// Photodiode front end shared by every user terminal.
struct Receiver {
    double detector_area = 0.0;     // m^2
    double fov = 0.0;               // field of view, radians
    double refractive_index = 1.0;  // concentrator lens index
    double filter_gain = 1.0;       // optical filter transmission
    double oe_efficiency = 0.0;     // optical-to-electrical conversion, A/W
    double noise_density = 0.0;     // noise PSD, A^2/Hz
};

// DCO-OFDM electrical rate model. The clipping ratio relates optical power
// to usable electrical signal power; the rate constant scales SINR inside
// the log; the half factor accounts for Hermitian-symmetric subcarriers.
struct RateModel {
    double clipping_ratio = 3.0;
    double rate_constant = 1.0;
    bool half_factor = true;
};

// Relative transmitter/receiver geometry for parallel planes: a horizontal
// offset plus the fixed vertical separation. With parallel planes the
// emission and incidence angles coincide.
struct LinkGeometry {
    double radial = 0.0;
    double vertical = 0.0;
    double distance() const;
    double incidence_angle() const;
};

// One interfering downlink observed on the same subcarrier.
struct InterferenceTerm {
    double power = 0.0;  // optical power the interferer spends there, watts
    double gain = 0.0;   // its line-of-sight gain toward the victim
};

// Bandwidth/SINR pair for one allocated subcarrier.
struct SubcarrierShare {
    double bandwidth = 0.0;
    double sinr = 0.0;
};

// Order of the Lambertian radiation lobe from the half-intensity semi-angle.
double lambertian_order(double half_angle);

// Idealised non-imaging concentrator: flat gain inside the field of view,
// nothing collected outside it.
double concentrator_gain(double incidence, double refractive_index, double fov);

// Line-of-sight DC channel gain between parallel planes.
double channel_gain(const AccessPoint& ap, const Receiver& rx, const LinkGeometry& geom);

// Electrical SINR of one subcarrier after optical-to-electrical conversion.
double sinr(double power, double bandwidth, double gain,
            std::span<const InterferenceTerm> interferers,
            const Receiver& rx, const RateModel& model);

// Interference-free special case of sinr().
double snr(double power, double bandwidth, double gain,
           const Receiver& rx, const RateModel& model);

// Shannon sum rate over the given subcarrier shares, bit/s.
double achievable_rate(std::span<const SubcarrierShare> shares, const RateModel& model);

}  // namespace attocell
