#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "vlclink/errors.hpp"

namespace vlclink {

struct Point3 {
    double x{};
    double y{};
    double z{};

    bool operator==(const Point3&) const = default;
};

/// Axis-aligned room box; the floor is the z = 0 plane.
struct RoomModel {
    double length{};  // extent along x, metres
    double width{};   // extent along y, metres
    double height{};  // extent along z, metres

    bool operator==(const RoomModel&) const = default;
};

/// Ceiling luminaire. Boresight is fixed straight down (-z).
struct LuminairePose {
    Point3 position;

    bool operator==(const LuminairePose&) const = default;
};

/// Floor-plane receiver. Normal is fixed straight up (+z).
struct ReceiverPose {
    Point3 position;

    bool operator==(const ReceiverPose&) const = default;
};

/// Per-position distance/angle bundle for one LED-PD link. Angles are
/// stored as cosines; degree conversions happen at I/O boundaries only.
/// With the fixed down/up orientations the irradiance and geometric
/// incidence cosines coincide (both equal vertical drop over distance).
struct LinkGeometry {
    double distance{};
    double cos_irradiance{};
    double cos_incidence_geometric{};

    bool operator==(const LinkGeometry&) const = default;
};

inline double distance(const Point3& a, const Point3& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

inline LinkGeometry link_geometry(const LuminairePose& led, const ReceiverPose& pd) {
    const double drop = led.position.z - pd.position.z;
    if (!(drop > 0.0))
        throw DegenerateLink("luminaire must be strictly above the receiver plane");
    const double d = distance(led.position, pd.position);
    const double cosine = drop / d;
    return LinkGeometry{d, cosine, cosine};
}

/// Receiver positions along the half-diagonal from the floor-plane centre
/// towards the (0, 0) corner, with equal per-axis displacements. The step
/// is the per-axis half-extent divided by (count - 1), truncated to whole
/// centimetres; for the default 5 x 5 x 3 room and count 10 this yields a
/// 0.27 m step and a final point 0.07 m short of the corner. Sub-centimetre
/// spacings fall back to the exact step so positions always advance.
inline std::vector<Point3> half_diagonal_trajectory(const RoomModel& room, int count) {
    if (count < 2) throw InvalidCount("trajectory needs at least 2 positions");

    const double cx = room.length / 2.0;
    const double cy = room.width / 2.0;
    const auto cm_step = [&](double half_extent) {
        const double exact = half_extent / static_cast<double>(count - 1);
        const double truncated = std::floor(exact * 100.0 + 1e-9) / 100.0;
        return truncated > 0.0 ? truncated : exact;
    };
    const double step_x = cm_step(cx);
    const double step_y = cm_step(cy);

    std::vector<Point3> points;
    points.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        points.push_back(Point3{cx - i * step_x, cy - i * step_y, 0.0});
    return points;
}

/// Lattice points along one axis: floor(extent/resolution) + 1, with a
/// guard against the quotient landing one ulp under an integer.
inline std::size_t grid_axis_count(double extent, double resolution) {
    return static_cast<std::size_t>(std::floor(extent / resolution + 1e-9)) + 1;
}

/// Regular floor-plane lattice of (floor(length/res)+1) x (floor(width/res)+1)
/// points starting at (0, 0), rows over y, columns over x.
inline std::vector<Point3> floor_grid(const RoomModel& room, double resolution) {
    if (!(resolution > 0.0) || resolution > std::min(room.length, room.width))
        throw InvalidResolution("grid resolution must be in (0, min(length, width)]");

    const std::size_t nx = grid_axis_count(room.length, resolution);
    const std::size_t ny = grid_axis_count(room.width, resolution);

    std::vector<Point3> points;
    points.reserve(nx * ny);
    for (std::size_t iy = 0; iy < ny; ++iy) {
        const double y = std::min(static_cast<double>(iy) * resolution, room.width);
        for (std::size_t ix = 0; ix < nx; ++ix) {
            const double x = std::min(static_cast<double>(ix) * resolution, room.length);
            points.push_back(Point3{x, y, 0.0});
        }
    }
    return points;
}

}  // namespace vlclink
