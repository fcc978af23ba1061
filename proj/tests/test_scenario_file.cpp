#include <catch2/catch_amalgamated.hpp>

#include "vlclink/scenario_file.hpp"

using namespace vlclink;

TEST_CASE("parse_scenario defaults", "[scenario_file]") {
    SECTION("empty text yields the default scenario") {
        CHECK(parse_scenario("") == default_scenario());
    }
    SECTION("comments and blank lines are ignored") {
        CHECK(parse_scenario("# a comment\n\n   \n# another\n") == default_scenario());
    }
    SECTION("default values match the reference table") {
        const Scenario s = default_scenario();
        CHECK(s.room == RoomModel{5.0, 5.0, 3.0});
        CHECK(s.source.transmit_power == 15.0);
        CHECK(s.source.lambertian_order == 1.3);
        CHECK(s.source.half_power_deg == 60.0);
        CHECK(s.frontend.area == 2.25e-6);
        CHECK(s.frontend.fov_deg == 90.0);
        CHECK(s.frontend.filter_gain == 1.0);
        CHECK(s.frontend.refractive_index == 1.5);
        CHECK(s.frontend.responsivity == 0.6);
        CHECK(s.noise.electron_charge == 1.6e-19);
        CHECK(s.noise.bandwidth == 5e7);
        CHECK(s.noise.background_current == 5.1e-3);
        CHECK(s.noise.noise_bandwidth_factor == 0.562);
        CHECK(s.noise.thermal_variance == 0.0);
        CHECK(s.convention.mode == AngleMode::geometric);
    }
}

TEST_CASE("parse_scenario overrides", "[scenario_file]") {
    SECTION("a single key overrides just that field") {
        const Scenario s = parse_scenario("led.m = 1.0\n");
        Scenario expected = default_scenario();
        expected.source.lambertian_order = 1.0;
        CHECK(s == expected);
    }
    SECTION("spacing around '=' is free and inline comments are allowed") {
        const Scenario s = parse_scenario("led.tx_power_w=8 # dimmed\n  pd.fov_deg =  60\n");
        CHECK(s.source.transmit_power == 8.0);
        CHECK(s.frontend.fov_deg == 60.0);
    }
    SECTION("unit conversion happens at the boundary") {
        const Scenario s = parse_scenario("pd.area_mm2 = 1\n");
        CHECK(s.frontend.area == 1e-6);
    }
    SECTION("convention keys") {
        const Scenario s =
            parse_scenario("convention.mode = fixed_elevation\nconvention.theta_deg = 60\n");
        CHECK(s.convention == AngleConvention::fixed_elevation(60.0));
    }
    SECTION("scientific notation values") {
        const Scenario s = parse_scenario("noise.bandwidth_hz = 5e7\nnoise.q_c = 1.602176634e-19\n");
        CHECK(s.noise.bandwidth == 5e7);
        CHECK(s.noise.electron_charge == 1.602176634e-19);
    }
}

TEST_CASE("parse_scenario errors", "[scenario_file]") {
    SECTION("unknown key reports its line") {
        try {
            parse_scenario("led.mm = 1\n");
            FAIL("expected UnknownKey");
        } catch (const UnknownKey& e) {
            CHECK(e.line == 1);
        }
    }
    SECTION("duplicate key reports the second occurrence") {
        try {
            parse_scenario("led.m = 1\nled.m = 2\n");
            FAIL("expected DuplicateKey");
        } catch (const DuplicateKey& e) {
            CHECK(e.line == 2);
        }
    }
    SECTION("malformed lines") {
        CHECK_THROWS_AS(parse_scenario("led.m\n"), ParseError);
        CHECK_THROWS_AS(parse_scenario("= 3\n"), ParseError);
        CHECK_THROWS_AS(parse_scenario("led.m =\n"), ParseError);
        CHECK_THROWS_AS(parse_scenario("led.m = abc\n"), ParseError);
        CHECK_THROWS_AS(parse_scenario("led.m = 1.0x\n"), ParseError);
        try {
            parse_scenario("led.m = 1\nnot a line\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 2);
        }
    }
    SECTION("domain violations") {
        CHECK_THROWS_AS(parse_scenario("pd.fov_deg = 120\n"), DomainError);
        CHECK_THROWS_AS(parse_scenario("pd.fov_deg = 0\n"), DomainError);
        CHECK_THROWS_AS(parse_scenario("room.length_m = -5\n"), DomainError);
        CHECK_THROWS_AS(parse_scenario("led.tx_power_w = -1\n"), DomainError);
        CHECK_THROWS_AS(parse_scenario("led.m = 0\n"), DomainError);
        CHECK_THROWS_AS(parse_scenario("pd.refractive_index = 0.9\n"), DomainError);
        CHECK_THROWS_AS(parse_scenario("convention.theta_deg = 95\n"), DomainError);
        CHECK_THROWS_AS(parse_scenario("convention.mode = sideways\n"), DomainError);
        CHECK_THROWS_AS(parse_scenario("noise.thermal_var_a2 = -1e-15\n"), DomainError);
    }
}

TEST_CASE("format_scenario round-trips", "[scenario_file]") {
    SECTION("defaults") {
        const Scenario s = default_scenario();
        CHECK(parse_scenario(format_scenario(s)) == s);
    }
    SECTION("overridden scenario") {
        const Scenario s = parse_scenario(
            "led.tx_power_w = 8\nled.m = 2\npd.area_mm2 = 1.5\npd.fov_deg = 70\n"
            "noise.thermal_var_a2 = 1e-15\nconvention.mode = fixed_elevation\n"
            "convention.theta_deg = 75\n");
        CHECK(parse_scenario(format_scenario(s)) == s);
    }
    SECTION("every known key appears in the output") {
        const std::string text = format_scenario(default_scenario());
        for (const char* key :
             {"room.length_m", "room.width_m", "room.height_m", "led.tx_power_w", "led.m",
              "led.half_power_deg", "pd.area_mm2", "pd.fov_deg", "pd.filter_gain",
              "pd.refractive_index", "pd.responsivity_a_per_w", "noise.bandwidth_hz",
              "noise.background_current_a", "noise.i2", "noise.q_c", "noise.thermal_var_a2",
              "convention.mode", "convention.theta_deg"})
            CHECK(text.find(key) != std::string::npos);
    }
}
