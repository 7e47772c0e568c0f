#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>

#include "absim/constants.hpp"
#include "absim/defaults.hpp"
#include "absim/platform.hpp"

using namespace absim;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Independent evaluation of the hover-power expression, written as one
// pow-based formula rather than the split profile/induced routines.
double hover_power_oracle(const RotorParams& r, double weight_n) {
    const double disc = std::numbers::pi * std::pow(r.rotor_radius_m, 2.0);
    return r.profile_drag_coeff / 8.0 * r.air_density_kg_m3 * r.solidity * disc *
               std::pow(r.angular_velocity_rad_s, 3.0) * std::pow(r.rotor_radius_m, 3.0) +
           (1.0 + r.correction_factor) * std::pow(weight_n, 1.5) /
               std::sqrt(2.0 * r.air_density_kg_m3 * disc);
}

}  // namespace

TEST_CASE("rotary-wing hover power at zero weight is the profile term", "[platform]") {
    const RotorParams rotor = defaults::rotor();
    const double profile = rwd_profile_power(rotor);
    CHECK(profile == Catch::Approx(79.80147994942652).epsilon(1e-12));
    CHECK(rwd_hover_power(rotor, 0.0) == profile);
    CHECK(rwd_hover_power(rotor, 0.0) == Catch::Approx(hover_power_oracle(rotor, 0.0)));
}

TEST_CASE("rotary-wing hover power at reference take-off masses", "[platform]") {
    const RotorParams rotor = defaults::rotor();
    const double g = constants::kGravityMps2;

    // 8 kg structure + 3 kg pico + 5 kg battery
    const double p16 = rwd_hover_power(rotor, 16.0 * g);
    CHECK(p16 == Catch::Approx(2026.0298673557668).epsilon(1e-12));
    CHECK(p16 == Catch::Approx(hover_power_oracle(rotor, 16.0 * g)).epsilon(1e-12));

    // without the BS: 74% of the 2.04 kW deployment total
    const double p13 = rwd_hover_power(rotor, 13.0 * g);
    CHECK(p13 == Catch::Approx(1505.1755608750984).epsilon(1e-12));
    CHECK(100.0 * p13 / (p16 + defaults::kPicoCommW) == Catch::Approx(74.0).margin(1.0));

    CHECK(rwd_hover_power(rotor, 25.0 * g) == Catch::Approx(3881.0287991024356).epsilon(1e-12));
}

TEST_CASE("rotary-wing induced power scales exactly with weight^(3/2)", "[platform]") {
    const RotorParams rotor = defaults::rotor();
    for (const double w : {17.5, 98.0, 156.8, 245.0, 1234.5}) {
        CHECK(rwd_induced_power(rotor, 4.0 * w) == 8.0 * rwd_induced_power(rotor, w));
    }
    // and the full hover power recovers the same ratio to rounding
    const double profile = rwd_profile_power(rotor);
    const double ratio = (rwd_hover_power(rotor, 4.0 * 156.8) - profile) /
                         (rwd_hover_power(rotor, 156.8) - profile);
    CHECK(ratio == Catch::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("rotary-wing hover power is strictly increasing in weight", "[platform]") {
    const RotorParams rotor = defaults::rotor();
    double previous = rwd_hover_power(rotor, 0.0);
    for (double w = 10.0; w <= 400.0; w += 10.0) {
        const double p = rwd_hover_power(rotor, w);
        CHECK(p > previous);
        previous = p;
    }
}

TEST_CASE("rotary-wing power rejects bad inputs", "[platform]") {
    const RotorParams rotor = defaults::rotor();
    CHECK_THROWS_AS(rwd_hover_power(rotor, -1.0), DomainError);
    CHECK_THROWS_AS(rwd_hover_power(rotor, std::nan("")), DomainError);
    RotorParams bad = rotor;
    bad.air_density_kg_m3 = 0.0;
    CHECK_THROWS_AS(rwd_hover_power(bad, 100.0), DomainError);
    bad = rotor;
    bad.rotor_radius_m = -0.4;
    CHECK_THROWS_AS(rwd_hover_power(bad, 100.0), DomainError);
}

TEST_CASE("fixed-wing propulsion power at reference masses", "[platform]") {
    const double g = constants::kGravityMps2;
    FixedWingParams fw5;
    fw5.wingspan_m = 5.0;
    CHECK(fwd_propulsion_power(fw5, 55.0 * g) == Catch::Approx(993.3439501214959).epsilon(1e-12));
    CHECK(fwd_propulsion_power(fw5, 44.0 * g) == Catch::Approx(824.1012228145995).epsilon(1e-12));

    FixedWingParams fw10;
    fw10.wingspan_m = 10.0;
    CHECK(fwd_propulsion_power(fw10, 60.0 * g) ==
          Catch::Approx(2232.771075199262).epsilon(1e-12));
    CHECK(fwd_propulsion_power(fw10, 50.0 * g) ==
          Catch::Approx(2190.033012748025).epsilon(1e-12));
}

TEST_CASE("fixed-wing induced coefficient is quadratic in weight", "[platform]") {
    FixedWingParams fw;
    fw.wingspan_m = 5.0;
    for (const double w : {100.0, 539.0, 588.0, 1000.0}) {
        CHECK(fwd_drag_coeffs(fw, 2.0 * w).induced == 4.0 * fwd_drag_coeffs(fw, w).induced);
    }
}

TEST_CASE("straight flight never costs more than turning", "[platform]") {
    FixedWingParams turning;
    turning.wingspan_m = 10.0;
    FixedWingParams straight = turning;
    straight.turn_radius_m = kInf;
    for (const double w : {100.0, 539.0, 588.0, 2000.0}) {
        const double p_straight = fwd_propulsion_power(straight, w);
        CHECK(p_straight <= fwd_propulsion_power(turning, w));
        const FwdDragCoeffs c = fwd_drag_coeffs(straight, w);
        const double v = straight.speed_m_s;
        CHECK(p_straight == Catch::Approx(c.parasitic * v * v * v + c.induced / v));
    }
}

TEST_CASE("fixed-wing power rejects zero speed", "[platform]") {
    FixedWingParams fw;
    fw.speed_m_s = 0.0;
    CHECK_THROWS_AS(fwd_propulsion_power(fw, 539.0), DomainError);
    fw = FixedWingParams{};
    fw.turn_radius_m = 0.0;
    CHECK_THROWS_AS(fwd_propulsion_power(fw, 539.0), DomainError);
}

TEST_CASE("HAP propulsion power does not depend on weight", "[platform]") {
    HapParams hap;
    hap.wing_area_m2 = 1.0;
    // the closed-form collapse: C_D rho A_w V^3 / (2 eta_p)
    const double collapsed = hap.drag_coeff * hap.air_density_kg_m3 * hap.wing_area_m2 *
                             std::pow(hap.speed_m_s, 3.0) / (2.0 * hap.propeller_efficiency);
    CHECK(collapsed == Catch::Approx(3.156305).epsilon(1e-12));
    for (const double w : {1.0, 100.0, 1000.0, 2000.0, 123456.0}) {
        CHECK(hap_propulsion_power(hap, w) == Catch::Approx(collapsed).epsilon(1e-9));
    }
    const double diff = hap_propulsion_power(hap, 1000.0) - hap_propulsion_power(hap, 2000.0);
    CHECK(std::abs(diff) / collapsed < 1e-9);

    HapParams big = hap;
    big.wing_area_m2 = 340.0;
    CHECK(hap_propulsion_power(big, 5000.0) == Catch::Approx(1073.1437).epsilon(1e-9));
}

TEST_CASE("HAP avionics power is mass times the ratio", "[platform]") {
    HapParams hap;
    hap.wing_area_m2 = 54.0;
    CHECK(hap_avionics_power(hap) == Catch::Approx(132.0));
    hap.avionics_mass_kg = 0.0;
    CHECK(hap_avionics_power(hap) == 0.0);
    hap.avionics_mass_kg = 10.0;
    CHECK(hap_avionics_power(hap) == Catch::Approx(60.0));
}

TEST_CASE("HAP power rejects degenerate parameters", "[platform]") {
    HapParams hap;
    hap.wing_area_m2 = 0.0;
    CHECK_THROWS_AS(hap_propulsion_power(hap, 100.0), DomainError);
    hap.wing_area_m2 = 54.0;
    CHECK_THROWS_AS(hap_propulsion_power(hap, 0.0), DomainError);
    hap.speed_m_s = 0.0;
    CHECK_THROWS_AS(hap_propulsion_power(hap, 100.0), DomainError);
}

TEST_CASE("derived areas match their closed forms exactly", "[platform]") {
    const RotorParams rotor = defaults::rotor();
    CHECK(rotor.disc_area_m2() ==
          std::numbers::pi * rotor.rotor_radius_m * rotor.rotor_radius_m);
    FixedWingParams fw;
    fw.wingspan_m = 7.3;
    CHECK(fw.wing_area_m2() == fw.wingspan_m * fw.wingspan_m / fw.aspect_ratio);
}

TEST_CASE("mechanical power dispatches over the airframe variant", "[platform]") {
    PlatformSpec rwd = defaults::rwd();
    rwd.mass.bs_kg = 3.0;
    rwd.mass.battery_kg = 5.0;
    CHECK(mechanical_power(rwd) == Catch::Approx(2026.0298673557668).epsilon(1e-12));

    PlatformSpec fwd10 = defaults::fwd(10.0);
    fwd10.mass.bs_kg = 10.0;  // any mounted BS flies at rated payload
    CHECK(mechanical_power(fwd10) == Catch::Approx(2232.771075199262).epsilon(1e-12));
    fwd10.mass.bs_kg = 0.0;
    CHECK(mechanical_power(fwd10) == Catch::Approx(2190.033012748025).epsilon(1e-12));

    PlatformSpec hap60 = defaults::hap(60.0);
    hap60.mass.bs_kg = 30.0;
    CHECK(mechanical_power(hap60) == Catch::Approx(1205.1437).epsilon(1e-9));
}

TEST_CASE("power models stay finite and positive over operating ranges", "[platform]") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        RotorParams rotor;
        rotor.profile_drag_coeff = 0.005 + 0.02 * unit(gen);
        rotor.correction_factor = 0.05 + 0.2 * unit(gen);
        rotor.air_density_kg_m3 = 0.9 + 0.4 * unit(gen);
        rotor.solidity = 0.02 + 0.08 * unit(gen);
        rotor.rotor_radius_m = 0.2 + 0.6 * unit(gen);
        rotor.angular_velocity_rad_s = 150.0 + 300.0 * unit(gen);
        const double w = 400.0 * unit(gen);
        const double p_rotor = rwd_hover_power(rotor, w);
        CHECK(std::isfinite(p_rotor));
        CHECK(p_rotor > 0.0);

        FixedWingParams fw;
        fw.wingspan_m = 3.0 + 12.0 * unit(gen);
        fw.speed_m_s = 10.0 + 30.0 * unit(gen);
        fw.turn_radius_m = 50.0 + 500.0 * unit(gen);
        const double p_fw = fwd_propulsion_power(fw, 100.0 + 800.0 * unit(gen));
        CHECK(std::isfinite(p_fw));
        CHECK(p_fw > 0.0);

        HapParams hap;
        hap.wing_area_m2 = 20.0 + 400.0 * unit(gen);
        hap.speed_m_s = 10.0 + 30.0 * unit(gen);
        const double p_hap = hap_propulsion_power(hap, 500.0 + 8000.0 * unit(gen));
        CHECK(std::isfinite(p_hap));
        CHECK(p_hap > 0.0);
    }
}
