#pragma once

#include <ostream>
#include <span>
#include <string>

#include "attocell/sweeps.hpp"

namespace attocell {

// Shortest round-trip decimal form: parsing the string recovers the exact
// double. Infinities render as "inf"/"-inf".
std::string format_double(double value);

// Writers emit a header line, '\n' line ends, and fully reproducible bytes.
void write_zone_sweep(std::ostream& os, std::span<const ZoneSweepRow> rows);
void write_eta_sweep(std::ostream& os, std::span<const EtaSweepRow> rows);
void write_rate_map(std::ostream& os, const RateMap& map);
void write_trial(std::ostream& os, const TrialReport& report);

}  // namespace attocell
