#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "vlclink/angles.hpp"
#include "vlclink/format.hpp"
#include "vlclink/scenario.hpp"

namespace vlclink {

inline constexpr std::string_view csv_samples_header =
    "curve_label,index,x_m,y_m,z_m,d_m,phi_irr_deg,theta_deg,p_received_w,"
    "gain_eq10,path_loss_db,shot_var_a2,snr_db";

inline constexpr std::string_view csv_grid_header = "x_m,y_m,value";

inline constexpr std::string_view csv_no_signal = "NOSIGNAL";

namespace detail {

inline void append_number(std::string& out, double value) {
    out += format_scientific9(value);
}

inline void append_optional(std::string& out, const std::optional<double>& value) {
    if (value)
        append_number(out, *value);
    else
        out += csv_no_signal;
}

inline void append_sample_row(std::string& out, std::string_view label, std::size_t index,
                              const LinkSample& s) {
    out += label;
    out += ',';
    out += std::to_string(index);
    out += ',';
    append_number(out, s.position.x);
    out += ',';
    append_number(out, s.position.y);
    out += ',';
    append_number(out, s.position.z);
    out += ',';
    append_number(out, s.geometry.distance);
    out += ',';
    append_number(out, acos_deg(s.geometry.cos_irradiance));
    out += ',';
    append_number(out, s.theta_deg);
    out += ',';
    append_number(out, s.received_power);
    out += ',';
    append_number(out, s.channel_gain_eq10);
    out += ',';
    append_optional(out, s.path_loss_db);
    out += ',';
    append_number(out, s.shot_variance);
    out += ',';
    append_optional(out, s.snr_db);
    out += '\n';
}

}  // namespace detail

/// CSV for a single labelled sample list (header plus one row per sample).
inline std::string samples_to_csv(std::string_view label, std::span<const LinkSample> samples) {
    std::string out{csv_samples_header};
    out += '\n';
    for (std::size_t i = 0; i < samples.size(); ++i)
        detail::append_sample_row(out, label, i, samples[i]);
    return out;
}

/// CSV for a sweep: curves concatenated, each row carrying its curve label
/// and per-curve 0-based index.
inline std::string sweep_to_csv(const SweepResult& result) {
    std::string out{csv_samples_header};
    out += '\n';
    for (const SweepCurve& curve : result.curves)
        for (std::size_t i = 0; i < curve.samples.size(); ++i)
            detail::append_sample_row(out, curve.label, i, curve.samples[i]);
    return out;
}

/// CSV for a grid map, row-major; no-signal cells render as NOSIGNAL.
inline std::string grid_to_csv(const GridResult& grid) {
    std::string out{csv_grid_header};
    out += '\n';
    for (std::size_t i = 0; i < grid.points.size(); ++i) {
        detail::append_number(out, grid.points[i].x);
        out += ',';
        detail::append_number(out, grid.points[i].y);
        out += ',';
        detail::append_optional(out, grid.values[i]);
        out += '\n';
    }
    return out;
}

}  // namespace vlclink
