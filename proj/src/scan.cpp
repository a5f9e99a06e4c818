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

#include "fcs/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "fcs/errors.hpp"

namespace fcs {

void validate(const TrainConfig& config) {
    if (config.n_particles < 1) throw ValidationError("train: need at least one particle");
    validate(config.packet);
    if (config.statistics.empty()) throw ValidationError("train: no statistics selected");
    if (const auto* explicit_spacing = std::get_if<ExplicitSpacing>(&config.spacing)) {
        const auto& pattern = explicit_spacing->pattern;
        if (pattern.size() != config.n_particles) {
            throw ValidationError("train: explicit emission times must list one entry per particle");
        }
        if (pattern.front() != 0.0) throw ValidationError("train: the first emission time must be 0");
        for (std::size_t i = 1; i < pattern.size(); ++i) {
            if (!(pattern[i] >= pattern[i - 1])) throw ValidationError("train: emission times must be non-decreasing");
        }
    }
}

std::vector<double> emission_times(const TrainConfig& config, double e0_spacing) {
    std::vector<double> times(config.n_particles);
    if (const auto* explicit_spacing = std::get_if<ExplicitSpacing>(&config.spacing)) {
        for (std::size_t i = 0; i < times.size(); ++i) times[i] = e0_spacing * explicit_spacing->pattern[i];
    } else {
        for (std::size_t i = 0; i < times.size(); ++i) times[i] = e0_spacing * static_cast<double>(i);
    }
    return times;
}

std::vector<WavePacketSpec> build_train(const TrainConfig& config, double e0_spacing, const PhysicalUnits& units) {
    std::vector<WavePacketSpec> specs;
    for (double e0_t : emission_times(config, e0_spacing)) {
        specs.push_back({config.packet, units.time_from_ratio(e0_t)});
    }
    return specs;
}

const ScanOutcome* ScanRow::find(ExchangeStatistics statistics) const {
    for (const auto& outcome : outcomes) {
        if (outcome.statistics == statistics) return &outcome;
    }
    return nullptr;
}

namespace {

ScanRow scan_point(const TrainConfig& config, double e0_spacing, const ScanOptions& options) {
    ScanRow row;
    row.e0_spacing = e0_spacing;
    const auto times = emission_times(config, e0_spacing);
    const auto specs = build_train(config, e0_spacing, options.overlap.units);
    row.overlaps = build_overlap_set(specs, config.barrier, options.overlap);
    row.baseline = counting_statistics(row.overlaps, ExchangeStatistics::distinguishable, options.counting);
    row.baseline.delay_config = times;
    for (auto statistics : config.statistics) {
        ScanOutcome outcome{statistics, std::nullopt, {}};
        try {
            outcome.result = counting_statistics(row.overlaps, statistics, options.counting);
            outcome.result->delay_config = times;
        } catch (const SingularNormalizationError& e) {
            outcome.failure = e.what();
        }
        row.outcomes.push_back(std::move(outcome));
    }
    return row;
}

}  // namespace

ScanResult run_scan(const TrainConfig& config, std::span<const double> grid, const ScanOptions& options) {
    validate(config);
    if (grid.empty()) throw ValidationError("run_scan: empty grid");
    for (double value : grid) {
        if (!(value >= 0.0) || !std::isfinite(value)) throw ValidationError("run_scan: grid values must be >= 0");
    }

    std::vector<double> sorted(grid.begin(), grid.end());
    std::sort(sorted.begin(), sorted.end());

    ScanResult result{config, std::vector<ScanRow>(sorted.size())};
    std::vector<std::exception_ptr> failures(sorted.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < sorted.size(); i = next++) {
            try {
                result.rows[i] = scan_point(config, sorted[i], options);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };

    unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, sorted.size()));
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    pool.clear();

    for (std::size_t i = 0; i < failures.size(); ++i) {
        if (!failures[i]) continue;
        std::ostringstream where;
        where << "grid point E0T = " << sorted[i] << ": ";
        try {
            std::rethrow_exception(failures[i]);
        } catch (const NumericalAccuracyError& e) {
            throw NumericalAccuracyError(where.str() + e.what(), e.residual());
        } catch (const Error& e) {
            throw Error(e.category(), where.str() + e.what());
        }
    }
    return result;
}

std::optional<double> channel_value(const ScanRow& row, const Channel& channel) {
    const CountingResult* counting = nullptr;
    if (const auto* outcome = row.find(channel.statistics)) {
        if (outcome->result) counting = &*outcome->result;
    } else if (channel.statistics == ExchangeStatistics::distinguishable) {
        counting = &row.baseline;
    }
    if (!counting) return std::nullopt;
    if (!channel.transmitted) return counting->mean;
    if (*channel.transmitted > counting->n_particles) return std::nullopt;
    return counting->probabilities(static_cast<Eigen::Index>(*channel.transmitted));
}

std::vector<Extremum> locate_extrema(const ScanResult& result, const Channel& channel) {
    std::vector<Extremum> extrema;
    std::vector<std::pair<double, double>> run;
    auto flush = [&] {
        for (std::size_t i = 1; i + 1 < run.size(); ++i) {
            const double v = run[i].second;
            if (v > run[i - 1].second && v > run[i + 1].second) {
                extrema.push_back({run[i].first, v, Extremum::Kind::maximum});
            } else if (v < run[i - 1].second && v < run[i + 1].second) {
                extrema.push_back({run[i].first, v, Extremum::Kind::minimum});
            }
        }
        run.clear();
    };
    for (const auto& row : result.rows) {
        if (auto value = channel_value(row, channel)) {
            run.emplace_back(row.e0_spacing, *value);
        } else {
            flush();
        }
    }
    flush();
    return extrema;
}

std::vector<double> uniform_grid(double start, double stop, std::size_t points) {
    if (points == 0) throw ValidationError("grid: need at least one point");
    if (points == 1) return {start};
    if (!(stop > start)) throw ValidationError("grid: stop must exceed start");
    std::vector<double> grid(points);
    const double step = (stop - start) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) grid[i] = start + step * static_cast<double>(i);
    grid.back() = stop;
    return grid;
}

}  // namespace fcs
