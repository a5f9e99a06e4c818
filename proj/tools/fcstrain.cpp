/**
 * Copyright 2026 The fcstrain Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// fcstrain: counting statistics of identical-particle trains on a resonant barrier.
//
//   fcstrain scan --config run.json [--out scan.csv]
//   fcstrain figure fig2b --particles 6 --out fig2b.csv
//   fcstrain density --out fig3.csv
//   fcstrain overlaps --config run.json --at 0.05
//   fcstrain selftest

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fcs/config.hpp"
#include "fcs/csv.hpp"
#include "fcs/density.hpp"
#include "fcs/errors.hpp"
#include "fcs/presets.hpp"
#include "fcs/scan.hpp"
#include "fcs/selftest.hpp"

namespace {

struct Overrides {
    std::string out;
    std::optional<std::size_t> particles;
    std::string statistics;
    std::string grid;
    std::optional<bool> clamp;
    unsigned workers = 0;
};

void add_overrides(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--out", o.out, "output CSV path (default: stdout)");
    cmd->add_option("--particles", o.particles, "number of particles N")->check(CLI::PositiveNumber);
    cmd->add_option("--statistics", o.statistics, "comma-separated: boson,fermion,distinguishable");
    cmd->add_option("--grid", o.grid, "E0T grid as start:stop:points");
    cmd->add_flag_function(
        "--clamp,!--no-clamp", [&o](std::int64_t count) { o.clamp = count > 0; }, "clamp |T(p)|^2 at 1");
    cmd->add_option("--workers", o.workers, "worker threads (0 = all cores)");
}

fcs::GridSpec parse_grid_flag(const std::string& text) {
    std::vector<std::string> fields;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ':');) fields.push_back(item);
    if (fields.size() != 3) throw fcs::ParseError("--grid", "expected start:stop:points");
    fcs::GridSpec grid;
    grid.start = fcs::parse_double(fields[0]);
    grid.stop = fcs::parse_double(fields[1]);
    const double points = fcs::parse_double(fields[2]);
    if (!(points >= 1.0) || points != std::floor(points)) throw fcs::ParseError("--grid", "points must be a positive integer");
    grid.points = static_cast<std::size_t>(points);
    if (!(grid.start >= 0.0)) throw fcs::ValidationError("--grid: start must be >= 0");
    if (grid.points > 1 && !(grid.stop > grid.start)) throw fcs::ValidationError("--grid: stop must exceed start");
    return grid;
}

void apply(const Overrides& o, fcs::RunConfig& config) {
    if (!o.out.empty()) config.output = o.out;
    if (o.particles) {
        config.train.n_particles = *o.particles;
        config.particle_counts = {*o.particles};
    }
    if (!o.statistics.empty()) {
        config.train.statistics.clear();
        for (const auto& name : fcs::split_csv_line(o.statistics)) {
            const auto s = fcs::parse_statistics(name);
            if (!s) throw fcs::ParseError("--statistics", "unknown statistics '" + name + "'");
            config.train.statistics.push_back(*s);
        }
    }
    if (!o.grid.empty()) config.grid = parse_grid_flag(o.grid);
    if (o.clamp) {
        config.train.barrier = fcs::BarrierModel(config.train.barrier.resonances(), *o.clamp,
                                                 config.train.barrier.units());
    }
    fcs::validate(config.train);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw fcs::IoError("cannot read '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_sidecar(const fcs::RunConfig& config, const std::filesystem::path& csv_path) {
    auto sidecar = csv_path;
    sidecar += ".json";
    std::ofstream out(sidecar);
    if (!out) throw fcs::IoError("cannot open '" + sidecar.string() + "' for writing");
    out << fcs::to_json(config).dump(2) << '\n';
    if (!out) throw fcs::IoError("write to '" + sidecar.string() + "' failed");
}

std::filesystem::path output_for(const fcs::RunConfig& config, std::size_t n) {
    std::filesystem::path path(config.output);
    if (config.particle_counts.size() <= 1) return path;
    auto stem = path.stem().string() + "_N" + std::to_string(n);
    return path.parent_path() / (stem + path.extension().string());
}

int run(const fcs::RunConfig& base, unsigned workers) {
    auto options = fcs::scan_options(base);
    options.workers = workers;
    const auto grid = base.grid.values();
    for (auto n : base.particle_counts) {
        auto config = base;
        config.train.n_particles = n;
        config.particle_counts = {n};
        const auto result = fcs::run_scan(config.train, grid, options);
        if (base.output.empty()) {
            fcs::write_scan_csv(result, std::cout);
        } else {
            const auto path = output_for(base, n);
            fcs::emit_csv(result, path);
            write_sidecar(config, path);
            std::cerr << "wrote " << path.string() << " (" << result.rows.size() << " grid points)\n";
        }
    }
    return 0;
}

int run_density(double p0_sigma, double e0_spacing, double e0_time, std::size_t points, const std::string& out) {
    const fcs::PhysicalUnits units;
    const fcs::WavePacketSpec first{fcs::GaussianAmplitude{1.0, p0_sigma}, 0.0};
    const fcs::WavePacketSpec second{fcs::GaussianAmplitude{1.0, p0_sigma}, units.time_from_ratio(e0_spacing)};
    const double t = units.time_from_ratio(e0_time);
    auto grid = fcs::default_density_grid(first, second, t, units);
    grid.points = points;
    const auto profile = fcs::density_profile(first, second, t, grid, units);
    if (out.empty()) {
        fcs::write_density_csv(profile, std::cout);
    } else {
        fcs::emit_density_csv(profile, out);
        std::cerr << "wrote " << out << " (I12 = " << profile.overlap << ")\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Full counting statistics of identical-particle trains on a resonant barrier"};
    app.require_subcommand(1);

    Overrides scan_overrides;
    std::string config_path;
    auto* scan = app.add_subcommand("scan", "sweep the emission spacing for a configured train");
    scan->add_option("--config", config_path, "JSON run document")->required();
    add_overrides(scan, scan_overrides);

    Overrides figure_overrides;
    std::string preset;
    auto* figure = app.add_subcommand("figure", "reproduce a figure preset (fig2a fig2b fig3 fig4 fig5 fig6)");
    figure->add_option("preset", preset, "preset name")->required();
    add_overrides(figure, figure_overrides);

    const auto density_defaults = fcs::density_preset();
    double p0_sigma = density_defaults.p0_sigma;
    double e0_spacing = density_defaults.e0_spacing;
    double e0_time = density_defaults.e0_time;
    std::size_t density_points = 4096;
    std::string density_out;
    auto* density = app.add_subcommand("density", "one-particle density of an N = 2 pair");
    density->add_option("--p0-sigma", p0_sigma, "packet p0 * sigma")->check(CLI::PositiveNumber);
    density->add_option("--spacing", e0_spacing, "emission spacing E0 T")->check(CLI::NonNegativeNumber);
    density->add_option("--time", e0_time, "observation time E0 t")->check(CLI::NonNegativeNumber);
    density->add_option("--points", density_points, "grid points")->check(CLI::Range(2, 1 << 22));
    density->add_option("--out", density_out, "output CSV path (default: stdout)");

    std::string overlap_config;
    double overlap_at = 0.0;
    auto* overlaps = app.add_subcommand("overlaps", "dump I, T, R at one spacing as CSV");
    overlaps->add_option("--config", overlap_config, "JSON run document")->required();
    overlaps->add_option("--at", overlap_at, "emission spacing E0 T")->required();

    fcs::SelftestOptions selftest_options;
    auto* selftest = app.add_subcommand("selftest", "run the invariant suites");
    selftest->add_option("--quadrature-tol", selftest_options.quadrature_tolerance, "overlap quadrature tolerance");
    selftest->add_flag("--inject-sign-flip", selftest_options.flip_parity_sign,
                       "use the + parity sign for fermions (mutation check)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : fcs::exit_code(fcs::ErrorCategory::parse);
    }

    try {
        if (*scan) {
            auto config = fcs::parse_config(read_file(config_path));
            apply(scan_overrides, config);
            return run(config, scan_overrides.workers);
        }
        if (*figure) {
            if (preset == "fig3") return run_density(p0_sigma, e0_spacing, e0_time, density_points, figure_overrides.out);
            auto config = fcs::preset_config(preset);
            apply(figure_overrides, config);
            return run(config, figure_overrides.workers);
        }
        if (*density) return run_density(p0_sigma, e0_spacing, e0_time, density_points, density_out);
        if (*overlaps) {
            const auto config = fcs::parse_config(read_file(overlap_config));
            const auto options = fcs::scan_options(config);
            const auto set = fcs::build_overlap_set(fcs::build_train(config.train, overlap_at), config.train.barrier,
                                                    options.overlap);
            fcs::write_overlap_csv(set, std::cout);
            return 0;
        }
        if (*selftest) {
            const auto reports = fcs::run_selftest(selftest_options);
            fcs::print_report(reports, std::cout);
            const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
            return ok ? 0 : 1;
        }
    } catch (const fcs::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return fcs::exit_code(e.category());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
