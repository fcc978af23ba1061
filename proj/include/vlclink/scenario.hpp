#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "vlclink/channel.hpp"
#include "vlclink/errors.hpp"
#include "vlclink/format.hpp"
#include "vlclink/geometry.hpp"
#include "vlclink/noise.hpp"

namespace vlclink {

/// Full experiment configuration: room, centred ceiling luminaire,
/// floor-plane receiver template, noise model, and incidence convention.
/// All values are immutable once built; evaluation is pure and may run in
/// parallel over positions.
struct Scenario {
    RoomModel room;
    LambertianSource source;
    OpticalFrontEnd frontend;
    NoiseModel noise;
    AngleConvention convention;

    Point3 led_position() const {
        return Point3{room.length / 2.0, room.width / 2.0, room.height};
    }

    bool operator==(const Scenario&) const = default;
};

enum class SweepAxis { incidence_angle, transmit_power, lambertian_order };

enum class Metric { snr_db, received_power, gain_eq10, path_loss_db };

struct SweepSpec {
    SweepAxis axis{};
    std::vector<double> values;
};

struct CurveSummary {
    double min_value{};
    double max_value{};
    std::size_t argmin{};  // first index attaining the minimum
    std::size_t argmax{};  // first index attaining the maximum
    Point3 argmin_position;
    Point3 argmax_position;
};

struct SweepCurve {
    std::string label;
    double axis_value{};
    std::vector<LinkSample> samples;
    std::optional<CurveSummary> summary;  // over snr_db; absent if no cell has signal
};

struct SweepResult {
    SweepAxis axis{};
    std::vector<SweepCurve> curves;
};

/// Row-major floor map of one metric; absent values mark no-signal cells.
struct GridResult {
    double resolution{};
    std::size_t nx{};
    std::size_t ny{};
    Metric metric{};
    std::vector<Point3> points;
    std::vector<std::optional<double>> values;
};

/// The ten-position half-diagonal receiver trajectory used as the default
/// for trajectory runs and sweeps.
inline std::vector<Point3> default_trajectory(const RoomModel& room) {
    return half_diagonal_trajectory(room, 10);
}

/// Computes every metric at one receiver position. The shot variance is
/// evaluated at this sample's own received power; zero received power
/// (e.g. outside the FOV) yields no-signal SNR and path loss rather than
/// an error.
inline LinkSample evaluate_point(const Scenario& s, const Point3& position) {
    const LinkGeometry geom =
        link_geometry(LuminairePose{s.led_position()}, ReceiverPose{position});
    const IncidenceFactor inc = incidence_factor(s.convention, geom);
    LinkSample sample;
    sample.position = position;
    sample.geometry = geom;
    sample.theta_deg = inc.theta_deg;
    sample.received_power = received_power(s.source, s.frontend, geom, s.convention);
    sample.channel_gain_eq10 = channel_gain_eq10(s.source, s.frontend, geom, s.convention);
    sample.shot_variance = shot_noise_variance(s.noise, s.frontend.responsivity,
                                               sample.received_power);
    if (sample.channel_gain_eq10 > 0.0)
        sample.path_loss_db = path_loss_db(sample.channel_gain_eq10);
    if (sample.received_power > 0.0) {
        const NoiseBreakdown noise =
            total_noise(sample.shot_variance, s.noise.thermal_variance);
        sample.snr_db = snr_db(sample.received_power, s.frontend.responsivity, noise.total);
    }
    return sample;
}

inline double metric_value(const LinkSample& sample, Metric metric) {
    switch (metric) {
        case Metric::received_power: return sample.received_power;
        case Metric::gain_eq10: return sample.channel_gain_eq10;
        case Metric::path_loss_db: return sample.path_loss_db.value();
        case Metric::snr_db: default: return sample.snr_db.value();
    }
}

/// Whether the sample carries a value for the metric. Out-of-FOV cells
/// report none for every metric; the channel gain and path loss do not
/// depend on the transmit power and stay reportable when it is zero.
inline bool has_metric(const LinkSample& sample, Metric metric) {
    switch (metric) {
        case Metric::received_power: return sample.received_power > 0.0;
        case Metric::gain_eq10: return sample.channel_gain_eq10 > 0.0;
        case Metric::path_loss_db: return sample.path_loss_db.has_value();
        case Metric::snr_db: default: return sample.snr_db.has_value();
    }
}

namespace detail {

inline void check_in_footprint(const RoomModel& room, std::span<const Point3> positions) {
    for (std::size_t i = 0; i < positions.size(); ++i) {
        const Point3& p = positions[i];
        const double slack = 1e-12;
        if (p.x < -slack || p.x > room.length + slack || p.y < -slack ||
            p.y > room.width + slack || p.z < -slack || p.z > room.height + slack)
            throw PositionOutOfRoom(i);
    }
}

inline std::optional<CurveSummary> summarize_samples(std::span<const LinkSample> samples,
                                                     Metric metric) {
    std::optional<CurveSummary> summary;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!has_metric(samples[i], metric)) continue;
        const double v = metric_value(samples[i], metric);
        if (!summary) {
            summary = CurveSummary{v, v, i, i, samples[i].position, samples[i].position};
            continue;
        }
        if (v < summary->min_value) {
            summary->min_value = v;
            summary->argmin = i;
            summary->argmin_position = samples[i].position;
        }
        if (v > summary->max_value) {
            summary->max_value = v;
            summary->argmax = i;
            summary->argmax_position = samples[i].position;
        }
    }
    return summary;
}

}  // namespace detail

/// One fully-populated sample per position, order preserved.
inline std::vector<LinkSample> run_trajectory(const Scenario& s,
                                              std::span<const Point3> positions) {
    if (positions.empty()) throw InvalidArgument("trajectory positions must be non-empty");
    detail::check_in_footprint(s.room, positions);
    std::vector<LinkSample> samples;
    samples.reserve(positions.size());
    for (const Point3& p : positions) samples.push_back(evaluate_point(s, p));
    return samples;
}

/// Returns the scenario with exactly one axis overridden; every other
/// field is untouched.
inline Scenario apply_axis(const Scenario& s, SweepAxis axis, double value) {
    Scenario out = s;
    switch (axis) {
        case SweepAxis::incidence_angle:
            if (!(value > 0.0) || value > 90.0)
                throw InvalidSweepValue("incidence angle must be in (0, 90] degrees");
            out.convention = AngleConvention::fixed_elevation(value);
            break;
        case SweepAxis::transmit_power:
            if (!(value >= 0.0)) throw InvalidSweepValue("transmit power must be >= 0 W");
            out.source.transmit_power = value;
            break;
        case SweepAxis::lambertian_order:
            if (!(value > 0.0)) throw InvalidSweepValue("Lambertian order must be > 0");
            out.source.lambertian_order = value;
            break;
    }
    return out;
}

inline std::string sweep_axis_name(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::incidence_angle: return "angle";
        case SweepAxis::transmit_power: return "power";
        case SweepAxis::lambertian_order: default: return "m";
    }
}

/// One curve per sweep value over a common position list; per-curve
/// summaries are taken over snr_db.
inline SweepResult run_sweep(const Scenario& s, const SweepSpec& spec,
                             std::span<const Point3> positions) {
    if (spec.values.empty()) throw InvalidSweepValue("sweep needs at least one value");
    SweepResult result;
    result.axis = spec.axis;
    result.curves.reserve(spec.values.size());
    for (double value : spec.values) {
        const Scenario curve_scenario = apply_axis(s, spec.axis, value);
        SweepCurve curve;
        curve.label = sweep_axis_name(spec.axis) + "=" + format_shortest(value);
        curve.axis_value = value;
        curve.samples = run_trajectory(curve_scenario, positions);
        curve.summary = detail::summarize_samples(curve.samples, Metric::snr_db);
        result.curves.push_back(std::move(curve));
    }
    return result;
}

/// Per-curve extrema of the chosen metric, recomputed from the samples.
/// Ties break to the lowest index.
inline std::vector<std::optional<CurveSummary>> summarize(const SweepResult& result,
                                                          Metric metric = Metric::snr_db) {
    std::vector<std::optional<CurveSummary>> summaries;
    summaries.reserve(result.curves.size());
    for (const SweepCurve& curve : result.curves)
        summaries.push_back(detail::summarize_samples(curve.samples, metric));
    return summaries;
}

/// Evaluates one metric over the floor lattice. Cells with no received
/// power carry no value. `threads` > 1 splits the lattice across worker
/// threads; assembly is index-ordered, so the result is identical to a
/// sequential run.
inline GridResult run_grid(const Scenario& s, double resolution, Metric metric,
                           unsigned threads = 1) {
    GridResult grid;
    grid.resolution = resolution;
    grid.metric = metric;
    grid.points = floor_grid(s.room, resolution);
    grid.nx = grid_axis_count(s.room.length, resolution);
    grid.ny = grid_axis_count(s.room.width, resolution);
    grid.values.resize(grid.points.size());

    const auto evaluate_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const LinkSample sample = evaluate_point(s, grid.points[i]);
            grid.values[i] = has_metric(sample, metric)
                                 ? std::optional<double>(metric_value(sample, metric))
                                 : std::nullopt;
        }
    };

    if (threads <= 1) {
        evaluate_range(0, grid.points.size());
        return grid;
    }
    std::vector<std::thread> workers;
    const std::size_t total = grid.points.size();
    const std::size_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t begin = std::min(static_cast<std::size_t>(t) * chunk, total);
        const std::size_t end = std::min(begin + chunk, total);
        if (begin < end) workers.emplace_back(evaluate_range, begin, end);
    }
    for (std::thread& w : workers) w.join();
    return grid;
}

}  // namespace vlclink
