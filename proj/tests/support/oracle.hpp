#pragma once

// Test-only reference model: a straight-line transcription of the LOS
// link-budget equations, kept independent of the library under test.
// Everything is recomputed from raw coordinates and scalar parameters in
// plain <cmath>; nothing here includes or calls vlclink code.

#include <cmath>

namespace oracle {

inline constexpr double kPi = 3.14159265358979323846;

struct Config {
    // transmitter
    double led_x, led_y, led_z;
    double tx_power_w;
    double m;
    // receiver optics
    double area_m2;
    double fov_deg;
    double filter_gain;
    double refractive_index;
    double responsivity_a_per_w;
    // noise
    double q_c;
    double bandwidth_hz;
    double background_current_a;
    double i2;
    double thermal_var_a2;
    // incidence convention: elevation_deg < 0 means geometric incidence
    double elevation_deg;
};

struct Evaluation {
    double distance_m;
    double cos_phi;
    double theta_deg;
    double cos_theta;
    double received_power_w;
    double gain_eq10;
    double shot_var_a2;
    double snr_db;  // NaN when received power is zero
};

inline Evaluation evaluate(const Config& c, double pd_x, double pd_y, double pd_z) {
    Evaluation e{};

    const double dx = c.led_x - pd_x;
    const double dy = c.led_y - pd_y;
    const double dz = c.led_z - pd_z;
    e.distance_m = std::sqrt(dx * dx + dy * dy + dz * dz);
    e.cos_phi = (c.led_z - pd_z) / e.distance_m;

    if (c.elevation_deg >= 0.0) {
        e.theta_deg = 90.0 - c.elevation_deg;
        e.cos_theta = std::cos(e.theta_deg * kPi / 180.0);
    } else {
        e.theta_deg = std::acos(e.cos_phi) * 180.0 / kPi;
        e.cos_theta = e.cos_phi;
    }

    const double radiant = (c.m + 1.0) / (2.0 * kPi) * std::pow(e.cos_phi, c.m);

    double concentrator = 0.0;
    if (e.theta_deg >= 0.0 && e.theta_deg <= c.fov_deg) {
        const double s = std::sin(c.fov_deg * kPi / 180.0);
        concentrator = c.refractive_index * c.refractive_index / (s * s);
    }
    double effective_area = 0.0;
    if (e.theta_deg <= c.fov_deg)
        effective_area = c.area_m2 * c.filter_gain * concentrator * e.cos_theta;

    e.received_power_w =
        c.tx_power_w / (e.distance_m * e.distance_m) * radiant * effective_area;

    e.gain_eq10 = 0.0;
    if (e.theta_deg <= c.fov_deg)
        e.gain_eq10 = (c.m + 1.0) * c.area_m2 / (2.0 * kPi * e.distance_m * e.distance_m) *
                      std::pow(e.cos_phi, c.m) * e.cos_theta;

    e.shot_var_a2 = 2.0 * c.q_c * c.responsivity_a_per_w * e.received_power_w * c.bandwidth_hz +
                    2.0 * c.q_c * c.background_current_a * c.i2 * c.bandwidth_hz;

    if (e.received_power_w > 0.0) {
        const double signal = e.received_power_w * c.responsivity_a_per_w;
        e.snr_db = 10.0 * std::log10(signal * signal / (e.shot_var_a2 + c.thermal_var_a2));
    } else {
        e.snr_db = std::nan("");
    }
    return e;
}

/// Table-parameter baseline used throughout the tests, geometric incidence.
inline Config table_config() {
    Config c{};
    c.led_x = 2.5;
    c.led_y = 2.5;
    c.led_z = 3.0;
    c.tx_power_w = 15.0;
    c.m = 1.3;
    c.area_m2 = 2.25e-6;
    c.fov_deg = 90.0;
    c.filter_gain = 1.0;
    c.refractive_index = 1.5;
    c.responsivity_a_per_w = 0.6;
    c.q_c = 1.6e-19;
    c.bandwidth_hz = 5e7;
    c.background_current_a = 5.1e-3;
    c.i2 = 0.562;
    c.thermal_var_a2 = 0.0;
    c.elevation_deg = -1.0;
    return c;
}

/// Composite Simpson quadrature of the hemispherical radiant-intensity
/// integral 2 pi * integral_0^{pi/2} f(phi) sin(phi) dphi.
inline double hemispherical_integral(double m, int intervals) {
    if (intervals % 2 != 0) ++intervals;  // Simpson needs an even count
    const double a = 0.0;
    const double b = kPi / 2.0;
    const double h = (b - a) / intervals;
    const auto integrand = [m](double phi) {
        return (m + 1.0) / (2.0 * kPi) * std::pow(std::cos(phi), m) * std::sin(phi);
    };
    double sum = integrand(a) + integrand(b);
    for (int i = 1; i < intervals; ++i)
        sum += (i % 2 == 1 ? 4.0 : 2.0) * integrand(a + i * h);
    return 2.0 * kPi * sum * h / 3.0;
}

}  // namespace oracle
