#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vlclink/vlclink.hpp"

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw vlclink::IoError("cannot read scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw vlclink::IoError("failed reading scenario file: " + path);
    return buf.str();
}

vlclink::Scenario load_scenario(const std::string& path) {
    if (path.empty()) return vlclink::default_scenario();
    return vlclink::parse_scenario(read_file(path));
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw vlclink::IoError("cannot open output file: " + out_path);
    out << text;
    out.flush();
    if (!out) throw vlclink::IoError("failed writing output file: " + out_path);
}

std::vector<double> parse_values(const std::string& list) {
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        const std::size_t comma = list.find(',', pos);
        const std::string item =
            list.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        pos = comma == std::string::npos ? list.size() + 1 : comma + 1;
        double v{};
        const char* first = item.data();
        const char* last = item.data() + item.size();
        const std::from_chars_result res = std::from_chars(first, last, v);
        if (item.empty() || res.ec != std::errc{} || res.ptr != last)
            throw UsageError("invalid --values entry '" + item + "'");
        values.push_back(v);
    }
    return values;
}

vlclink::SweepAxis parse_axis(const std::string& axis) {
    if (axis == "angle") return vlclink::SweepAxis::incidence_angle;
    if (axis == "power") return vlclink::SweepAxis::transmit_power;
    return vlclink::SweepAxis::lambertian_order;
}

vlclink::Metric parse_metric(const std::string& metric) {
    if (metric == "power") return vlclink::Metric::received_power;
    if (metric == "gain") return vlclink::Metric::gain_eq10;
    if (metric == "ploss") return vlclink::Metric::path_loss_db;
    return vlclink::Metric::snr_db;
}

std::string table2_csv() {
    const vlclink::Scenario s = vlclink::default_scenario();
    const std::vector<vlclink::Point3> points = vlclink::default_trajectory(s.room);
    const vlclink::LuminairePose led{s.led_position()};
    std::string out = "index,x_m,y_m,z_m,d_m\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        out += vlclink::format_scientific9(points[i].x);
        out += ',';
        out += vlclink::format_scientific9(points[i].y);
        out += ',';
        out += vlclink::format_scientific9(points[i].z);
        out += ',';
        out += vlclink::format_scientific9(
            vlclink::distance(led.position, points[i]));
        out += '\n';
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Indoor LOS visible-light link budget simulator"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_path;
    int count = 10;
    std::string axis;
    std::string values_list;
    double resolution = 0.05;
    std::string metric = "snr";

    CLI::App* trajectory = app.add_subcommand(
        "trajectory", "Evaluate the half-diagonal receiver trajectory");
    trajectory->add_option("--scenario", scenario_path, "Scenario file");
    trajectory->add_option("--count", count, "Number of trajectory positions")
        ->capture_default_str();
    trajectory->add_option("--out", out_path, "Output CSV path (default: stdout)");

    CLI::App* sweep = app.add_subcommand(
        "sweep", "Sweep one parameter over the trajectory, one curve per value");
    sweep->add_option("--axis", axis, "Sweep axis")
        ->required()
        ->check(CLI::IsMember({"angle", "power", "m"}));
    sweep->add_option("--values", values_list, "Comma-separated sweep values")->required();
    sweep->add_option("--scenario", scenario_path, "Scenario file");
    sweep->add_option("--out", out_path, "Output CSV path (default: stdout)");

    CLI::App* grid = app.add_subcommand("grid", "Evaluate one metric over the floor lattice");
    grid->add_option("--resolution", resolution, "Lattice spacing in metres")
        ->capture_default_str();
    grid->add_option("--metric", metric, "Metric to map")
        ->check(CLI::IsMember({"snr", "power", "gain", "ploss"}))
        ->capture_default_str();
    grid->add_option("--scenario", scenario_path, "Scenario file");
    grid->add_option("--out", out_path, "Output CSV path (default: stdout)");

    CLI::App* table2 = app.add_subcommand(
        "table2", "Print the default ten-position trajectory with LED-PD distances");
    CLI::App* defaults = app.add_subcommand(
        "defaults", "Print the effective default scenario in scenario-file form");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "vlclink: " << e.what() << "\n";
        return 1;
    }

    try {
        if (*trajectory) {
            const vlclink::Scenario s = load_scenario(scenario_path);
            const std::vector<vlclink::Point3> points =
                vlclink::half_diagonal_trajectory(s.room, count);
            const std::vector<vlclink::LinkSample> samples = vlclink::run_trajectory(s, points);
            emit(vlclink::samples_to_csv("trajectory", samples), out_path);
        } else if (*sweep) {
            const vlclink::Scenario s = load_scenario(scenario_path);
            const vlclink::SweepSpec spec{parse_axis(axis), parse_values(values_list)};
            const std::vector<vlclink::Point3> points = vlclink::default_trajectory(s.room);
            emit(vlclink::sweep_to_csv(vlclink::run_sweep(s, spec, points)), out_path);
        } else if (*grid) {
            const vlclink::Scenario s = load_scenario(scenario_path);
            emit(vlclink::grid_to_csv(vlclink::run_grid(s, resolution, parse_metric(metric))),
                 out_path);
        } else if (*table2) {
            emit(table2_csv(), "");
        } else if (*defaults) {
            emit(vlclink::format_scenario(vlclink::default_scenario()), "");
        }
    } catch (const UsageError& e) {
        std::cerr << "vlclink: " << e.what() << "\n";
        return 1;
    } catch (const vlclink::ScenarioError& e) {
        std::cerr << "vlclink: " << e.what() << "\n";
        return 2;
    } catch (const vlclink::Error& e) {
        std::cerr << "vlclink: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "vlclink: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
