#pragma once

#include <cmath>
#include <numbers>

namespace vlclink {

inline constexpr double pi = std::numbers::pi;

inline double deg_to_rad(double deg) { return deg * pi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / pi; }

inline double cos_deg(double deg) { return std::cos(deg_to_rad(deg)); }
inline double sin_deg(double deg) { return std::sin(deg_to_rad(deg)); }

/// Degrees of the angle whose cosine is given, clamped against round-off
/// spill just outside [-1, 1].
inline double acos_deg(double cosine) {
    if (cosine >= 1.0) return 0.0;
    if (cosine <= -1.0) return 180.0;
    return rad_to_deg(std::acos(cosine));
}

}  // namespace vlclink
