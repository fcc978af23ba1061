#pragma once

#include <cmath>
#include <optional>

#include "vlclink/angles.hpp"
#include "vlclink/errors.hpp"
#include "vlclink/geometry.hpp"

namespace vlclink {

/// Lambertian LED source. The order m is an independent scenario input;
/// lambertian_order() derives one from a half-power angle but is never
/// applied implicitly.
struct LambertianSource {
    double transmit_power{};    // W
    double lambertian_order{};  // dimensionless, > 0
    double half_power_deg{};    // degrees, informational unless used to derive m

    bool operator==(const LambertianSource&) const = default;
};

/// Photodiode optics and responsivity.
struct OpticalFrontEnd {
    double area{};              // m^2
    double fov_deg{};           // field-of-view half-angle, degrees (0, 90]
    double filter_gain{};       // optical filter gain, constant scalar
    double refractive_index{};  // concentrator refractive index, >= 1
    double responsivity{};      // A/W

    bool operator==(const OpticalFrontEnd&) const = default;
};

enum class AngleMode {
    /// Incidence angle follows the LED-PD geometry (physically standard).
    geometric,
    /// Incidence pinned by a configured elevation above the receiver plane:
    /// cos(theta) = sin(theta_cfg), so 90 degrees is boresight.
    fixed_elevation,
};

struct AngleConvention {
    AngleMode mode = AngleMode::geometric;
    double theta_deg = 90.0;  // configured elevation, only read in fixed_elevation mode

    static AngleConvention geometric() { return {AngleMode::geometric, 90.0}; }

    static AngleConvention fixed_elevation(double theta_cfg_deg) {
        if (!(theta_cfg_deg > 0.0) || theta_cfg_deg > 90.0)
            throw InvalidAngle("fixed-elevation angle must be in (0, 90] degrees");
        return {AngleMode::fixed_elevation, theta_cfg_deg};
    }

    bool operator==(const AngleConvention&) const = default;
};

/// Receiver-side incidence cosine and the corresponding polar angle.
struct IncidenceFactor {
    double cos_theta{};
    double theta_deg{};
};

/// Lambertian order m = -ln 2 / ln(cos(phi_half)); strictly decreasing in
/// the half-power angle, 1 at 60 degrees, 2 at 45 degrees.
inline double lambertian_order(double half_power_deg) {
    if (!(half_power_deg > 0.0) || !(half_power_deg < 90.0))
        throw InvalidAngle("half-power angle must be in (0, 90) degrees");
    return -std::log(2.0) / std::log(cos_deg(half_power_deg));
}

/// Lambertian radiant intensity f = ((m+1)/2pi) cos^m(phi_irr), per steradian.
inline double radiant_intensity(double m, double cos_irr) {
    return (m + 1.0) / (2.0 * pi) * std::pow(cos_irr, m);
}

/// Non-imaging concentrator gain: n^2 / sin^2(FOV) inside the field of
/// view, zero outside.
inline double concentrator_gain(double refractive_index, double fov_deg, double theta_deg) {
    if (theta_deg < 0.0 || theta_deg > fov_deg) return 0.0;
    const double s = sin_deg(fov_deg);
    return refractive_index * refractive_index / (s * s);
}

/// Effective collection area A h g(theta) cos(theta); zero beyond the FOV
/// (theta == FOV is inside).
inline double effective_area(const OpticalFrontEnd& fe, double cos_theta, double theta_deg) {
    if (theta_deg > fe.fov_deg) return 0.0;
    return fe.area * fe.filter_gain * concentrator_gain(fe.refractive_index, fe.fov_deg, theta_deg) *
           cos_theta;
}

/// Resolves the receiver-side incidence cosine under the configured
/// convention. The irradiance angle is always geometric; only the
/// incidence factor is pinned in fixed-elevation mode.
inline IncidenceFactor incidence_factor(const AngleConvention& convention,
                                        const LinkGeometry& geom) {
    if (convention.mode == AngleMode::fixed_elevation) {
        return IncidenceFactor{sin_deg(convention.theta_deg), 90.0 - convention.theta_deg};
    }
    return IncidenceFactor{geom.cos_incidence_geometric,
                           acos_deg(geom.cos_incidence_geometric)};
}

/// LOS received optical power: P_trans / d^2 * f(phi_irr) * A_eff(theta).
/// Zero when the incidence angle exceeds the FOV.
inline double received_power(const LambertianSource& src, const OpticalFrontEnd& fe,
                             const LinkGeometry& geom, const AngleConvention& convention) {
    if (!(geom.distance > 0.0)) throw DegenerateLink("link distance must be positive");
    const IncidenceFactor inc = incidence_factor(convention, geom);
    return src.transmit_power / (geom.distance * geom.distance) *
           radiant_intensity(src.lambertian_order, geom.cos_irradiance) *
           effective_area(fe, inc.cos_theta, inc.theta_deg);
}

/// Dimensionless free-space LOS channel gain:
/// (m+1) A / (2 pi d^2) * cos^m(phi_irr) * cos(theta). Zero beyond the FOV.
/// Note this is the raw kernel; filter and concentrator gains do not enter.
inline double channel_gain_eq10(const LambertianSource& src, const OpticalFrontEnd& fe,
                                const LinkGeometry& geom, const AngleConvention& convention) {
    if (!(geom.distance > 0.0)) throw DegenerateLink("link distance must be positive");
    const IncidenceFactor inc = incidence_factor(convention, geom);
    if (inc.theta_deg > fe.fov_deg) return 0.0;
    return (src.lambertian_order + 1.0) * fe.area /
           (2.0 * pi * geom.distance * geom.distance) *
           std::pow(geom.cos_irradiance, src.lambertian_order) * inc.cos_theta;
}

/// Channel gain expressed as attenuation in decibels.
inline double path_loss_db(double gain) {
    if (!(gain > 0.0)) throw InfiniteLoss("path loss is unbounded for zero channel gain");
    return -10.0 * std::log10(gain);
}

/// Metrics computed at one receiver position. snr_db and path_loss_db are
/// absent ("no signal") when the position receives no power or the gain
/// is zero, e.g. outside the field of view.
struct LinkSample {
    Point3 position;
    LinkGeometry geometry;
    double theta_deg{};          // receiver-side incidence angle actually applied
    double received_power{};     // W
    double channel_gain_eq10{};  // dimensionless
    double shot_variance{};      // A^2, evaluated at this sample's received power
    std::optional<double> path_loss_db;  // dB
    std::optional<double> snr_db;        // dB
};

}  // namespace vlclink
