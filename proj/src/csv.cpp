#include "attocell/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstddef>

namespace attocell {

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0.0 ? "inf" : "-inf";
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, result.ptr);
}

void write_zone_sweep(std::ostream& os, std::span<const ZoneSweepRow> rows) {
    os << "rho,beta,theta_deg,d12_m,r0_m,N0,r1_m,N1,Lambda_m,Gamma_m\n";
    for (const auto& row : rows) {
        os << format_double(row.rho) << ',' << format_double(row.beta) << ','
           << format_double(row.theta_deg) << ',' << format_double(row.d12) << ','
           << format_double(row.r0) << ',' << row.n0 << ',' << format_double(row.r1) << ','
           << row.n1 << ',' << format_double(row.illumination_cap) << ','
           << format_double(row.overlap_cap) << '\n';
    }
}

void write_eta_sweep(std::ostream& os, std::span<const EtaSweepRow> rows) {
    os << "rho,beta,scheme,illum,trials,eta_mean,eta_stderr,zeta_mean\n";
    for (const auto& row : rows) {
        os << format_double(row.rho) << ',' << format_double(row.beta) << ','
           << scheme_name(row.scheme) << ',' << (row.illumination ? 1 : 0) << ','
           << row.trials << ',' << format_double(row.eta_mean) << ','
           << format_double(row.eta_stderr) << ',';
        // A missing fairness ratio stays an empty field, never a fake zero.
        if (row.zeta_mean) os << format_double(*row.zeta_mean);
        os << '\n';
    }
}

void write_rate_map(std::ostream& os, const RateMap& map) {
    os << "x_m,y_m,serving_ap,rate_bps,in_zone0\n";
    for (std::size_t j = 0; j < map.ny; ++j) {
        for (std::size_t i = 0; i < map.nx; ++i) {
            const std::size_t idx = map.at(i, j);
            os << format_double(map.x(i)) << ',' << format_double(map.y(j)) << ','
               << map.serving[idx] << ',' << format_double(map.rate[idx]) << ','
               << static_cast<int>(map.in_zone0[idx]) << '\n';
        }
    }
}

void write_trial(std::ostream& os, const TrialReport& report) {
    os << "group,user,r_m,gain,power_w,rate_bps\n";
    const auto dump = [&os](const char* group, const std::vector<TrialUser>& users) {
        for (std::size_t i = 0; i < users.size(); ++i) {
            os << group << ',' << i << ',' << format_double(users[i].radial) << ','
               << format_double(users[i].gain) << ',' << format_double(users[i].power) << ','
               << format_double(users[i].rate) << '\n';
        }
    };
    dump("zone0", report.zone0);
    dump("zone1", report.zone1);
    dump("benchmark", report.benchmark);
}

}  // namespace attocell
