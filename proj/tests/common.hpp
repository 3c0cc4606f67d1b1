#pragma once

#include <numbers>

#include "attocell/channel.hpp"

// Reference cell shared across the test files: a 9 W, 20 MHz, 64-subcarrier
// AP with a 60 degree half-angle mounted 3.5 m above the receive plane.
namespace testutil {

inline attocell::AccessPoint reference_ap() {
    attocell::AccessPoint ap;
    ap.id = 1;
    ap.position = {5.0, 4.5, 3.5};
    ap.half_angle = std::numbers::pi / 3;
    ap.optical_power = 9.0;
    ap.bandwidth = 20e6;
    ap.subcarriers = 64;
    return ap;
}

inline attocell::Receiver reference_rx() {
    attocell::Receiver rx;
    rx.detector_area = 1e-4;
    rx.fov = std::numbers::pi / 2;
    rx.refractive_index = 1.5;
    rx.filter_gain = 1.0;
    rx.oe_efficiency = 0.53;
    rx.noise_density = 1e-21;
    return rx;
}

inline attocell::RateModel reference_model() {
    attocell::RateModel model;
    model.clipping_ratio = 3.0;
    model.rate_constant = 1.0;
    model.half_factor = true;
    return model;
}

}  // namespace testutil
