#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "absim/coverage.hpp"
#include "absim/defaults.hpp"

using namespace absim;

TEST_CASE("calibrated sensitivities land the reference radii", "[coverage]") {
    const ChannelEnvironment env = defaults::urban_2000mhz();
    const CoverageSearch search{};  // 0.99, 10^4 samples, seed 42, 1 m steps

    const BsProfile pico = defaults::pico();
    const CoverageResult rc_pico =
        coverage_radius(pico.tx_power_w, *pico.rx_sensitivity_dbm, 100.0, env, search);
    CHECK(rc_pico.covered);
    CHECK(rc_pico.radius_m == Catch::Approx(251.0).epsilon(0.02));
    CHECK(rc_pico.outage_at_radius <= 1.0 - search.reliability + 1e-12);

    const BsProfile micro = defaults::micro();
    const CoverageResult rc_micro =
        coverage_radius(micro.tx_power_w, *micro.rx_sensitivity_dbm, 100.0, env, search);
    CHECK(rc_micro.covered);
    CHECK(rc_micro.radius_m == Catch::Approx(351.0).epsilon(0.02));
}

TEST_CASE("an unreachable sensitivity yields no coverage", "[coverage]") {
    const ChannelEnvironment env = defaults::urban_2000mhz();
    CoverageSearch search;
    search.samples_per_radius = 1000;
    const CoverageResult result =
        coverage_radius(0.13, std::numeric_limits<double>::max(), 100.0, env, search);
    CHECK_FALSE(result.covered);
    CHECK(result.radius_m == 0.0);
}

TEST_CASE("identical seeds give identical results", "[coverage]") {
    const ChannelEnvironment env = defaults::urban_2000mhz();
    CoverageSearch search;
    search.samples_per_radius = 2000;
    search.seed = 1234;
    const CoverageResult a = coverage_radius(0.13, -113.0, 100.0, env, search);
    const CoverageResult b = coverage_radius(0.13, -113.0, 100.0, env, search);
    CHECK(a.radius_m == b.radius_m);
    CHECK(a.outage_at_radius == b.outage_at_radius);

    search.seed = 4321;
    const CoverageResult c = coverage_radius(0.13, -113.0, 100.0, env, search);
    // different seed may move the radius, but never far
    CHECK(std::abs(c.radius_m - a.radius_m) < 30.0);
}

TEST_CASE("radius shrinks as the sensitivity tightens", "[coverage]") {
    const ChannelEnvironment env = defaults::urban_2000mhz();
    CoverageSearch search;
    search.samples_per_radius = 2000;
    double previous = std::numeric_limits<double>::max();
    for (double pmin = -116.0; pmin <= -108.0; pmin += 2.0) {
        const CoverageResult r = coverage_radius(0.13, pmin, 100.0, env, search);
        CHECK(r.radius_m <= previous);
        previous = r.radius_m;
    }
}

TEST_CASE("radius grows with transmit power", "[coverage]") {
    const ChannelEnvironment env = defaults::urban_2000mhz();
    CoverageSearch search;
    search.samples_per_radius = 2000;
    double previous = 0.0;
    for (const double tx_w : {0.05, 0.13, 0.5, 2.0}) {
        const CoverageResult r = coverage_radius(tx_w, -113.0, 100.0, env, search);
        CHECK(r.radius_m >= previous);
        previous = r.radius_m;
    }
}

TEST_CASE("search controls are validated", "[coverage]") {
    const ChannelEnvironment env = defaults::urban_2000mhz();
    CoverageSearch search;
    search.reliability = 1.0;
    CHECK_THROWS_AS(coverage_radius(0.13, -113.0, 100.0, env, search), DomainError);
    search = CoverageSearch{};
    search.radius_step_m = 0.0;
    CHECK_THROWS_AS(coverage_radius(0.13, -113.0, 100.0, env, search), DomainError);
    search = CoverageSearch{};
    CHECK_THROWS_AS(coverage_radius(0.0, -113.0, 100.0, env, search), DomainError);
    CHECK_THROWS_AS(coverage_radius(0.13, -113.0, 0.0, env, search), DomainError);

    ChannelEnvironment no_floor = env;
    no_floor.min_elevation_deg = 0.0;  // scan range would be unbounded
    CHECK_THROWS_AS(coverage_radius(0.13, -113.0, 100.0, no_floor, CoverageSearch{}),
                    DomainError);
}
