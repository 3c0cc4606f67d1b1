#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "attocell/zoning.hpp"
#include "common.hpp"

using namespace attocell;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double reference_lambda() {
    const auto ap = testutil::reference_ap();
    return lambda_param(ap, testutil::reference_rx(), testutil::reference_model(),
                        ap.optical_power / 64, ap.bandwidth / 64, 3.5);
}

AccessPoint ap_at(int id, double x, double y) {
    auto ap = testutil::reference_ap();
    ap.id = id;
    ap.position = {x, y, 3.5};
    return ap;
}

double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

TEST_CASE("cell radius spans the half-angle cone") {
    CHECK(cell_radius(3.0, kPi / 3) == Approx(5.19615242270663).epsilon(1e-12));
    CHECK(cell_radius(3.5, kPi / 3) == Approx(6.062177826491069).epsilon(1e-12));
    CHECK(cell_radius(3.5, kPi / 6) == Approx(2.02072594216369).epsilon(1e-12));
    CHECK_THROWS_AS(cell_radius(0.0, kPi / 3), std::domain_error);
    CHECK_THROWS_AS(cell_radius(3.0, kPi / 2), std::domain_error);
}

TEST_CASE("overlap limit against neighbour footprints") {
    ApLayout layout;
    layout.plane_separation = 3.5;

    SUBCASE("an isolated cell keeps its full radius") {
        layout.aps = {ap_at(1, 0.0, 0.0)};
        const std::vector<double> radii{2.0};
        CHECK(overlap_limit(0, layout, radii) == 2.0);
    }
    SUBCASE("equal cells three metres apart") {
        layout.aps = {ap_at(1, 0.0, 0.0), ap_at(2, 3.0, 0.0)};
        const std::vector<double> radii{2.0, 2.0};
        CHECK(overlap_limit(0, layout, radii) == Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("separated cells are unconstrained") {
        layout.aps = {ap_at(1, 0.0, 0.0), ap_at(2, 5.0, 0.0)};
        const std::vector<double> radii{2.0, 2.0};
        CHECK(overlap_limit(0, layout, radii) == 2.0);
    }
    SUBCASE("unequal radii") {
        layout.aps = {ap_at(1, 0.0, 0.0), ap_at(2, 2.5, 0.0)};
        const std::vector<double> radii{2.0, 1.0};
        CHECK(overlap_limit(0, layout, radii) == Approx(1.5).epsilon(1e-12));
        CHECK(overlap_limit(1, layout, radii) == Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("the worst neighbour binds") {
        layout.aps = {ap_at(1, 0.0, 0.0), ap_at(2, 5.0, 0.0), ap_at(3, 0.0, 2.5)};
        const std::vector<double> radii{2.0, 2.0, 1.0};
        CHECK(overlap_limit(0, layout, radii) == Approx(1.5).epsilon(1e-12));
    }
    SUBCASE("deep overlap turns the limit negative") {
        layout.aps = {ap_at(1, 0.0, 0.0), ap_at(2, 1.0, 0.0)};
        const std::vector<double> radii{2.0, 2.0};
        CHECK(overlap_limit(0, layout, radii) == Approx(-1.0).epsilon(1e-12));
    }
    SUBCASE("argument validation") {
        layout.aps = {ap_at(1, 0.0, 0.0)};
        const std::vector<double> radii{2.0, 2.0};
        CHECK_THROWS_AS(overlap_limit(0, layout, radii), std::invalid_argument);
        CHECK_THROWS_AS(overlap_limit(5, layout, std::vector<double>{2.0}), std::out_of_range);
    }
}

TEST_CASE("closed-form SNR constant at the reference cell") {
    // Frozen from an independent scalar evaluation for 64 subcarriers and
    // for the whole cell riding a single carrier.
    const auto ap = testutil::reference_ap();
    const auto rx = testutil::reference_rx();
    const auto model = testutil::reference_model();
    CHECK(lambda_param(ap, rx, model, 9.0 / 64, 20e6 / 64, 3.5) ==
          Approx(4560820.7297627395).epsilon(1e-12));
    CHECK(lambda_param(ap, rx, model, 9.0, 20e6, 3.5) ==
          Approx(291892526.7048153).epsilon(1e-12));
}

TEST_CASE("closed-form SNR matches the assembled per-subcarrier SNR") {
    // The zoning shortcut lambda * (dv^2 + r^2)^-(m+3) must agree with the
    // full path: geometry -> gain -> photocurrent -> SNR.
    const auto rx = testutil::reference_rx();
    const auto model = testutil::reference_model();
    std::mt19937_64 rng(77);
    for (int i = 0; i < 500; ++i) {
        auto ap = testutil::reference_ap();
        ap.half_angle = (20.0 + 50.0 * unit_draw(rng)) * kPi / 180.0;
        const double dv = 2.0 + 2.0 * unit_draw(rng);
        const double r = cell_radius(dv, ap.half_angle) * unit_draw(rng);
        const double p_sub = ap.optical_power / ap.subcarriers;
        const double b_sub = ap.bandwidth / ap.subcarriers;
        const double lambda = lambda_param(ap, rx, model, p_sub, b_sub, dv);
        const double order = lambertian_order(ap.half_angle);
        const double closed = lambda * std::pow(dv * dv + r * r, -(order + 3.0));
        const double assembled =
            snr(p_sub, b_sub, channel_gain(ap, rx, LinkGeometry{r, dv}), rx, model);
        CHECK(closed == Approx(assembled).epsilon(1e-12));
    }
}

TEST_CASE("zone radius under a 50-of-64 budget: frozen references") {
    const double lambda = reference_lambda();
    const double order = lambertian_order(kPi / 3);
    // Frozen from an independent inversion of the edge-rate condition.
    CHECK(zone0_radius(0.7, 50, 64, lambda, order, 3.5, kInf, kInf) ==
          Approx(1.352229188621626).epsilon(1e-9));
    CHECK(zone0_radius(0.5, 50, 64, lambda, order, 3.5, kInf, kInf) ==
          Approx(2.767544375934398).epsilon(1e-9));
    CHECK(zone0_radius(0.3, 50, 64, lambda, order, 3.5, kInf, kInf) ==
          Approx(4.05873299959524).epsilon(1e-9));
}

TEST_CASE("zone radius caps and degenerate cases") {
    const double lambda = reference_lambda();
    const double order = lambertian_order(kPi / 3);

    SUBCASE("a budget equal to the demanded share collapses to exactly zero") {
        CHECK(zone0_radius(0.5, 32, 64, lambda, order, 3.5, kInf, kInf) == 0.0);
        CHECK(zone0_radius(1.0, 64, 64, lambda, order, 3.5, kInf, kInf) == 0.0);
    }
    SUBCASE("a budget below the demanded share collapses to zero") {
        CHECK(zone0_radius(0.9, 32, 64, lambda, order, 3.5, kInf, kInf) == 0.0);
    }
    SUBCASE("the overlap cap clips the analytic radius") {
        CHECK(zone0_radius(0.5, 64, 64, lambda, order, 3.5, 1.0, kInf) == 1.0);
    }
    SUBCASE("the illumination cap clips the analytic radius") {
        CHECK(zone0_radius(0.5, 64, 64, lambda, order, 3.5, kInf, 0.5) == 0.5);
    }
    SUBCASE("a negative overlap cap floors at zero") {
        CHECK(zone0_radius(0.5, 64, 64, lambda, order, 3.5, -1.0, kInf) == 0.0);
    }
    SUBCASE("domain errors") {
        CHECK_THROWS_AS(zone0_radius(0.0, 50, 64, lambda, order, 3.5, kInf, kInf),
                        std::domain_error);
        CHECK_THROWS_AS(zone0_radius(0.5, 0, 64, lambda, order, 3.5, kInf, kInf),
                        std::domain_error);
        CHECK_THROWS_AS(zone0_radius(0.5, 65, 64, lambda, order, 3.5, kInf, kInf),
                        std::domain_error);
        CHECK_THROWS_AS(zone0_radius(0.5, 50, 64, 0.0, order, 3.5, kInf, kInf),
                        std::domain_error);
    }
}

TEST_CASE("zone radius never grows with the rate fraction") {
    const double order = lambertian_order(kPi / 3);
    const double lambda64 = reference_lambda();
    const auto ap = testutil::reference_ap();
    const double lambda1 = lambda_param(ap, testutil::reference_rx(),
                                        testutil::reference_model(), 9.0, 20e6, 3.5);
    for (double lambda : {lambda64, lambda1}) {
        double previous = kInf;
        for (double rho = 0.02; rho < 0.99; rho += 0.02) {
            const double r = zone0_radius(rho, 64, 64, lambda, order, 3.5, kInf, kInf);
            CHECK(r <= previous);
            previous = r;
        }
    }
}

TEST_CASE("zone subcarrier demand at a collapsed zone is the exact floor") {
    const double lambda = reference_lambda();
    const double order = lambertian_order(kPi / 3);
    CHECK(zone0_subcarriers(0.3, 64, lambda, order, 3.5, 0.0) == 19);
    CHECK(zone0_subcarriers(0.5, 64, lambda, order, 3.5, 0.0) == 32);
    CHECK(zone0_subcarriers(0.9, 64, lambda, order, 3.5, 0.0) == 57);
    CHECK(zone0_subcarriers(1.0, 64, lambda, order, 3.5, 0.0) == 64);
    CHECK(zone0_subcarriers(0.5, 7, lambda, order, 3.5, 0.0) == 3);
}

TEST_CASE("zone subcarrier demand reference points") {
    const double lambda = reference_lambda();
    const double order = lambertian_order(kPi / 3);
    // Frozen from an independent evaluation at a 2.4 m zone edge.
    CHECK(zone0_subcarriers(0.5, 64, lambda, order, 3.5, 2.4) == 44);
    // Demand saturates at the cell total far outside the footprint.
    CHECK(zone0_subcarriers(0.5, 64, lambda, order, 3.5, 20.0) == 64);
}

TEST_CASE("zone subcarrier demand is monotone") {
    const double lambda = reference_lambda();
    const double order = lambertian_order(kPi / 3);
    int previous = 0;
    for (double r = 0.0; r <= 6.0; r += 0.1) {
        const int n = zone0_subcarriers(0.5, 64, lambda, order, 3.5, r);
        CHECK(n >= previous);
        previous = n;
    }
    previous = 0;
    for (double rho = 0.05; rho < 1.0; rho += 0.05) {
        const int n = zone0_subcarriers(rho, 64, lambda, order, 3.5, 2.4);
        CHECK(n >= previous);
        previous = n;
    }
}

TEST_CASE("radius and subcarrier demand invert each other") {
    const double lambda = reference_lambda();
    const double order = lambertian_order(kPi / 3);
    // For budgets above the demanded share the analytic radius is positive
    // and feeding it back demands exactly that budget.
    for (int budget = 32; budget <= 63; ++budget) {
        const double r =
            zone0_radius(0.5, budget, 64, lambda, order, 3.5, kInf, kInf);
        if (budget > 32) CHECK(r > 0.0);
        CHECK(zone0_subcarriers(0.5, 64, lambda, order, 3.5, r) == budget);
    }
}

TEST_CASE("subcarrier demand agrees with a direct integer scan") {
    // Independent oracle: the floor semantics scanned directly, the largest
    // n whose n-subcarrier edge rate stays within the rho fraction of the
    // centre rate.
    const double lambda = reference_lambda();
    const double order = lambertian_order(kPi / 3);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const double r = 6.0 * unit_draw(rng);
        const double rho = 0.05 + 0.9 * unit_draw(rng);
        const double center = std::log1p(lambda * std::pow(3.5 * 3.5, -(order + 3.0)));
        const double edge =
            std::log1p(lambda * std::pow(3.5 * 3.5 + r * r, -(order + 3.0)));
        int scan = 0;
        for (int n = 64; n >= 0; --n) {
            if (static_cast<double>(n) * edge <= rho * 64.0 * center + 1e-9 * edge) {
                scan = n;
                break;
            }
        }
        CHECK(zone0_subcarriers(rho, 64, lambda, order, 3.5, r) == scan);
    }
}

TEST_CASE("illuminance profile") {
    // 7200 cd at 3 m with a unity Lambertian order: 200 lux at a 3 m offset,
    // 800 lux at nadir, both exact.
    CHECK(illuminance(7200.0, 1.0, 3.0, 3.0) == 200.0);
    CHECK(illuminance(7200.0, 1.0, 3.0, 0.0) == 800.0);
    double previous = kInf;
    for (double r = 0.0; r <= 5.0; r += 0.5) {
        const double e = illuminance(7200.0, 1.0, 3.0, r);
        CHECK(e < previous);
        previous = e;
    }
    CHECK_THROWS_AS(illuminance(-1.0, 1.0, 3.0, 0.0), std::domain_error);
}

TEST_CASE("illumination limit") {
    IlluminationSpec spec;
    spec.enabled = true;
    spec.min_lux = 200.0;
    spec.max_lux = 800.0;
    // A 4:1 window with a unity order gives exactly 3 m at a 3 m separation.
    CHECK(illumination_limit(spec, 1.0, 3.0) == 3.0);
    CHECK(illumination_limit(spec, lambertian_order(kPi / 3), 3.0) ==
          Approx(3.0).epsilon(1e-12));
    // At the reference separation the same window caps the zone at 3.5 m.
    CHECK(illumination_limit(spec, 1.0, 3.5) == 3.5);

    spec.min_lux = 50.0;  // 16:1 window
    CHECK(illumination_limit(spec, 2.0, 3.5) == Approx(4.988492345338895).epsilon(1e-12));

    spec.min_lux = spec.max_lux = 300.0;
    CHECK(illumination_limit(spec, 1.0, 3.0) == 0.0);

    spec.enabled = false;
    CHECK(std::isinf(illumination_limit(spec, 1.0, 3.0)));

    spec.enabled = true;
    spec.min_lux = 800.0;
    spec.max_lux = 200.0;
    CHECK_THROWS_AS(illumination_limit(spec, 1.0, 3.0), std::invalid_argument);
    spec.min_lux = 0.0;
    CHECK_THROWS_AS(illumination_limit(spec, 1.0, 3.0), std::invalid_argument);
}

TEST_CASE("define_zones at the reference cell") {
    const auto ap = testutil::reference_ap();
    const auto rx = testutil::reference_rx();
    const auto model = testutil::reference_model();
    ApLayout layout;
    layout.plane_separation = 3.5;
    layout.aps = {ap};
    IlluminationSpec no_illum;

    SUBCASE("interior analytic radius with the full budget") {
        ZonePolicy policy{0.9, 1.0, 1e-3};
        const auto zones = define_zones(ap, rx, model, layout, policy, no_illum);
        // Frozen from an independent inversion of the edge-rate condition.
        CHECK(zones.zone0_radius == Approx(1.3241030402074423).epsilon(1e-12));
        CHECK(zones.zone0_subcarriers == 64);
        CHECK(zones.zone1_subcarriers == 0);
        CHECK(zones.cell_radius == Approx(6.062177826491069).epsilon(1e-12));
        CHECK(zones.zone1_width == zones.cell_radius - zones.zone0_radius);
    }
    SUBCASE("a 0.9 cap leaves six subcarriers for the outer ring") {
        for (double rho : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            ZonePolicy policy{rho, 0.9, 1e-3};
            const auto zones = define_zones(ap, rx, model, layout, policy, no_illum);
            CHECK(zones.zone0_subcarriers == 58);
            CHECK(zones.zone1_subcarriers == 6);
            CHECK(zones.zone0_radius > 0.0);
            CHECK(zones.zone0_radius < zones.cell_radius);
        }
        ZonePolicy lo{0.1, 0.9, 1e-3};
        ZonePolicy hi{0.9, 0.9, 1e-3};
        CHECK(define_zones(ap, rx, model, layout, lo, no_illum).zone0_radius ==
              Approx(6.0536979189674245).epsilon(1e-9));
        CHECK(define_zones(ap, rx, model, layout, hi, no_illum).zone0_radius ==
              Approx(0.33668988167799274).epsilon(1e-9));
    }
    SUBCASE("an impossible cap collapses the zone and reports the demand") {
        ZonePolicy policy{0.9, 0.5, 1e-3};  // cap 32 against a demand of 57
        const auto zones = define_zones(ap, rx, model, layout, policy, no_illum);
        CHECK(zones.zone0_radius == 0.0);
        CHECK(zones.zone0_subcarriers == 57);
        CHECK(zones.zone1_subcarriers == 7);
    }
    SUBCASE("the illumination window caps the zone radius") {
        IlluminationSpec illum;
        illum.enabled = true;
        illum.min_lux = 200.0;
        illum.max_lux = 800.0;
        ZonePolicy policy{0.3, 1.0, 1e-3};  // analytic radius 4.54 m, window 3.5 m
        const auto zones = define_zones(ap, rx, model, layout, policy, illum);
        const double cap = illumination_limit(illum, lambertian_order(ap.half_angle), 3.5);
        CHECK(zones.zone0_radius == cap);
        CHECK(zones.zone0_subcarriers ==
              zone0_subcarriers(0.3, 64, reference_lambda(),
                                lambertian_order(ap.half_angle), 3.5, cap));
    }
    SUBCASE("a close neighbour pins the zone to the overlap limit") {
        ApLayout pair;
        pair.plane_separation = 3.5;
        pair.aps = {ap_at(1, 0.0, 0.0), ap_at(2, 8.0, 0.0)};
        auto own = pair.aps[0];
        ZonePolicy policy{0.5, 1.0, 1e-3};
        const auto zones = define_zones(own, rx, model, pair, policy, no_illum);
        // Frozen: the two 6.06 m footprints 8 m apart leave 1.9378 m of
        // private radius, demanding 39 subcarriers at rho = 0.5.
        CHECK(zones.zone0_radius == Approx(1.9378221735089314).epsilon(1e-12));
        CHECK(zones.zone0_subcarriers == 39);
        CHECK(zones.zone1_subcarriers == 25);
    }
}

TEST_CASE("define_zones narrow-beam plateau") {
    auto ap = testutil::reference_ap();
    ap.half_angle = kPi / 6;
    const auto rx = testutil::reference_rx();
    const auto model = testutil::reference_model();
    ApLayout layout;
    layout.plane_separation = 3.5;
    layout.aps = {ap};
    IlluminationSpec no_illum;
    const double rc = cell_radius(3.5, kPi / 6);

    // The narrow beam keeps the whole footprint above the rate target up to
    // a 0.6 fraction: the zone fills the cell and takes every subcarrier.
    for (double rho : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6}) {
        ZonePolicy policy{rho, 1.0, 1e-3};
        const auto zones = define_zones(ap, rx, model, layout, policy, no_illum);
        CHECK(zones.zone0_radius == rc);
        CHECK(zones.zone0_subcarriers == 64);
        CHECK(zones.zone1_subcarriers == 0);
    }
    ZonePolicy beyond{0.7, 1.0, 1e-3};
    const auto zones = define_zones(ap, rx, model, layout, beyond, no_illum);
    CHECK(zones.zone0_radius < rc);
    CHECK(zones.zone0_radius == Approx(2.0154273154685463).epsilon(1e-9));
    CHECK(zones.zone0_subcarriers == 64);
}

TEST_CASE("define_zones invariants over random scenarios") {
    const auto rx = testutil::reference_rx();
    const auto model = testutil::reference_model();
    IlluminationSpec no_illum;
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 200; ++i) {
        auto ap = testutil::reference_ap();
        ap.half_angle = (20.0 + 50.0 * unit_draw(rng)) * kPi / 180.0;
        ap.subcarriers = 4 + static_cast<int>(92.0 * unit_draw(rng));
        const double dv = 2.0 + 2.0 * unit_draw(rng);
        ZonePolicy policy;
        policy.rho = 0.05 + 0.9 * unit_draw(rng);
        policy.beta = 0.3 + 0.7 * unit_draw(rng);
        policy.radius_step = 1e-3;
        ApLayout layout;
        layout.plane_separation = dv;
        layout.aps = {ap};

        const auto zones = define_zones(ap, rx, model, layout, policy, no_illum);
        const double rc = cell_radius(dv, ap.half_angle);
        const int total = ap.subcarriers;
        const long long cap = std::llround(policy.beta * total);
        const int capped = static_cast<int>(std::min<long long>(std::max<long long>(cap, 1), total));

        CHECK(zones.cell_radius == rc);
        CHECK(zones.zone0_radius >= 0.0);
        CHECK(zones.zone0_radius <= rc);
        CHECK(zones.zone0_subcarriers + zones.zone1_subcarriers == total);
        CHECK(zones.zone1_width == rc - zones.zone0_radius);
        if (zones.zone0_subcarriers > capped) {
            // Degenerate outcome: collapsed zone reporting the raw demand.
            CHECK(zones.zone0_radius == 0.0);
            CHECK(zones.zone0_subcarriers ==
                  static_cast<int>(std::floor(policy.rho * total + 1e-9)));
        } else if (zones.zone0_radius >= rc) {
            CHECK(zones.zone0_subcarriers == capped);
        }
        if (zones.zone0_radius > 0.0 && zones.zone0_radius < rc &&
            zones.zone0_subcarriers < capped) {
            // Interior acceptance: the floor semantics sandwich the demand.
            const double p_sub = ap.optical_power / total;
            const double b_sub = ap.bandwidth / total;
            const double lambda = lambda_param(ap, rx, model, p_sub, b_sub, dv);
            const double order = lambertian_order(ap.half_angle);
            const double center = std::log1p(lambda * std::pow(dv * dv, -(order + 3.0)));
            const double edge = std::log1p(
                lambda * std::pow(dv * dv + zones.zone0_radius * zones.zone0_radius,
                                  -(order + 3.0)));
            const double n0 = zones.zone0_subcarriers;
            CHECK(n0 * edge <= policy.rho * total * center * (1.0 + 1e-9) + 1e-9 * edge);
            if (zones.zone0_subcarriers < total)
                CHECK((n0 + 1.0) * edge > policy.rho * total * center * (1.0 - 1e-9));
        }
    }
}
