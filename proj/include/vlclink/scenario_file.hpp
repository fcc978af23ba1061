#pragma once

#include <charconv>
#include <cmath>
#include <set>
#include <string>
#include <string_view>

#include "vlclink/errors.hpp"
#include "vlclink/format.hpp"
#include "vlclink/scenario.hpp"

namespace vlclink {

/// Baseline parameter set: 5 x 5 x 3 m room, centred 15 W source with
/// Lambertian order 1.3 and 60 degree half-power angle, 2.25 mm^2 receiver
/// with 90 degree FOV, unity filter gain, n = 1.5, 0.6 A/W responsivity,
/// 50 MHz noise bandwidth, 5.1 mA background current, I_2 = 0.562,
/// q = 1.6e-19 C, zero thermal variance, geometric incidence convention.
inline Scenario default_scenario() {
    Scenario s;
    s.room = RoomModel{5.0, 5.0, 3.0};
    s.source = LambertianSource{15.0, 1.3, 60.0};
    s.frontend = OpticalFrontEnd{2.25 * 1e-6, 90.0, 1.0, 1.5, 0.6};
    s.noise.electron_charge = 1.6e-19;
    s.noise.bandwidth = 5e7;
    s.noise.background_current = 5.1e-3;
    s.noise.noise_bandwidth_factor = 0.562;
    s.noise.thermal_variance = 0.0;
    s.convention = AngleConvention::geometric();
    return s;
}

/// Range checks over a fully-assembled scenario.
inline void validate(const Scenario& s) {
    const auto require = [](bool ok, const char* what) {
        if (!ok) throw DomainError(what);
    };
    const auto finite = [](double v) { return std::isfinite(v); };

    require(finite(s.room.length) && s.room.length > 0.0, "room.length_m must be > 0");
    require(finite(s.room.width) && s.room.width > 0.0, "room.width_m must be > 0");
    require(finite(s.room.height) && s.room.height > 0.0, "room.height_m must be > 0");
    require(finite(s.source.transmit_power) && s.source.transmit_power >= 0.0,
            "led.tx_power_w must be >= 0");
    require(finite(s.source.lambertian_order) && s.source.lambertian_order > 0.0,
            "led.m must be > 0");
    require(finite(s.source.half_power_deg) && s.source.half_power_deg > 0.0 &&
                s.source.half_power_deg < 90.0,
            "led.half_power_deg must be in (0, 90)");
    require(finite(s.frontend.area) && s.frontend.area > 0.0, "pd.area_mm2 must be > 0");
    require(finite(s.frontend.fov_deg) && s.frontend.fov_deg > 0.0 && s.frontend.fov_deg <= 90.0,
            "pd.fov_deg must be in (0, 90]");
    require(finite(s.frontend.filter_gain) && s.frontend.filter_gain >= 0.0,
            "pd.filter_gain must be >= 0");
    require(finite(s.frontend.refractive_index) && s.frontend.refractive_index >= 1.0,
            "pd.refractive_index must be >= 1");
    require(finite(s.frontend.responsivity) && s.frontend.responsivity > 0.0,
            "pd.responsivity_a_per_w must be > 0");
    require(finite(s.noise.electron_charge) && s.noise.electron_charge >= 0.0,
            "noise.q_c must be >= 0");
    require(finite(s.noise.bandwidth) && s.noise.bandwidth >= 0.0,
            "noise.bandwidth_hz must be >= 0");
    require(finite(s.noise.background_current) && s.noise.background_current >= 0.0,
            "noise.background_current_a must be >= 0");
    require(finite(s.noise.noise_bandwidth_factor) && s.noise.noise_bandwidth_factor >= 0.0,
            "noise.i2 must be >= 0");
    require(finite(s.noise.thermal_variance) && s.noise.thermal_variance >= 0.0,
            "noise.thermal_var_a2 must be >= 0");
    require(finite(s.convention.theta_deg) && s.convention.theta_deg > 0.0 &&
                s.convention.theta_deg <= 90.0,
            "convention.theta_deg must be in (0, 90]");
}

namespace detail {

inline std::string_view trim(std::string_view text) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
    while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
    return text;
}

inline double parse_double(int line_no, std::string_view key, std::string_view text) {
    double value{};
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const std::from_chars_result res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last)
        throw ParseError(line_no, "invalid number '" + std::string(text) + "' for key '" +
                                      std::string(key) + "'");
    return value;
}

}  // namespace detail

/// Parses the line-based "key = value" scenario format. '#' starts a
/// comment, blank lines are skipped, absent keys keep their defaults,
/// unknown and duplicate keys are hard errors.
inline Scenario parse_scenario(std::string_view text) {
    Scenario s = default_scenario();

    static const std::set<std::string_view> known = {
        "room.length_m", "room.width_m", "room.height_m",
        "led.tx_power_w", "led.m", "led.half_power_deg",
        "pd.area_mm2", "pd.fov_deg", "pd.filter_gain",
        "pd.refractive_index", "pd.responsivity_a_per_w",
        "noise.bandwidth_hz", "noise.background_current_a", "noise.i2",
        "noise.q_c", "noise.thermal_var_a2",
        "convention.mode", "convention.theta_deg",
    };
    std::set<std::string> seen;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError(line_no, "expected 'key = value', got '" + std::string(line) + "'");
        const std::string key{detail::trim(line.substr(0, eq))};
        const std::string_view value = detail::trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError(line_no, "empty key");
        if (value.empty()) throw ParseError(line_no, "empty value for key '" + key + "'");
        if (!known.contains(key)) throw UnknownKey(line_no, key);
        if (!seen.insert(key).second) throw DuplicateKey(line_no, key);

        if (key == "convention.mode") {
            if (value == "geometric")
                s.convention.mode = AngleMode::geometric;
            else if (value == "fixed_elevation")
                s.convention.mode = AngleMode::fixed_elevation;
            else
                throw DomainError("convention.mode must be 'geometric' or 'fixed_elevation'");
            continue;
        }

        const double v = detail::parse_double(line_no, key, value);
        if (key == "room.length_m") s.room.length = v;
        else if (key == "room.width_m") s.room.width = v;
        else if (key == "room.height_m") s.room.height = v;
        else if (key == "led.tx_power_w") s.source.transmit_power = v;
        else if (key == "led.m") s.source.lambertian_order = v;
        else if (key == "led.half_power_deg") s.source.half_power_deg = v;
        else if (key == "pd.area_mm2") s.frontend.area = v * 1e-6;
        else if (key == "pd.fov_deg") s.frontend.fov_deg = v;
        else if (key == "pd.filter_gain") s.frontend.filter_gain = v;
        else if (key == "pd.refractive_index") s.frontend.refractive_index = v;
        else if (key == "pd.responsivity_a_per_w") s.frontend.responsivity = v;
        else if (key == "noise.bandwidth_hz") s.noise.bandwidth = v;
        else if (key == "noise.background_current_a") s.noise.background_current = v;
        else if (key == "noise.i2") s.noise.noise_bandwidth_factor = v;
        else if (key == "noise.q_c") s.noise.electron_charge = v;
        else if (key == "noise.thermal_var_a2") s.noise.thermal_variance = v;
        else if (key == "convention.theta_deg") s.convention.theta_deg = v;
    }

    validate(s);
    return s;
}

/// Serializes a scenario as parseable "key = value" text; parsing the
/// output reproduces the identical scenario.
inline std::string format_scenario(const Scenario& s) {
    std::string out;
    const auto emit = [&](std::string_view key, double value) {
        out += key;
        out += " = ";
        out += format_shortest(value);
        out += "\n";
    };
    emit("room.length_m", s.room.length);
    emit("room.width_m", s.room.width);
    emit("room.height_m", s.room.height);
    emit("led.tx_power_w", s.source.transmit_power);
    emit("led.m", s.source.lambertian_order);
    emit("led.half_power_deg", s.source.half_power_deg);
    emit("pd.area_mm2", s.frontend.area / 1e-6);
    emit("pd.fov_deg", s.frontend.fov_deg);
    emit("pd.filter_gain", s.frontend.filter_gain);
    emit("pd.refractive_index", s.frontend.refractive_index);
    emit("pd.responsivity_a_per_w", s.frontend.responsivity);
    emit("noise.bandwidth_hz", s.noise.bandwidth);
    emit("noise.background_current_a", s.noise.background_current);
    emit("noise.i2", s.noise.noise_bandwidth_factor);
    emit("noise.q_c", s.noise.electron_charge);
    emit("noise.thermal_var_a2", s.noise.thermal_variance);
    out += "convention.mode = ";
    out += s.convention.mode == AngleMode::geometric ? "geometric" : "fixed_elevation";
    out += "\n";
    emit("convention.theta_deg", s.convention.theta_deg);
    return out;
}

}  // namespace vlclink
