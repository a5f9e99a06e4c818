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

#ifndef FCS_SCAN_HPP
#define FCS_SCAN_HPP

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fcs/barrier.hpp"
#include "fcs/counting.hpp"
#include "fcs/overlaps.hpp"
#include "fcs/packets.hpp"
#include "fcs/statistics.hpp"

namespace fcs {

/// t_n = (n - 1) * T for the scanned spacing T.
struct EqualSpacing {
    bool operator==(const EqualSpacing&) const = default;
};

/// t_n = T * pattern[n - 1]; with a grid of {1} the pattern is the list of emission times E0 t_n.
struct ExplicitSpacing {
    std::vector<double> pattern;

    bool operator==(const ExplicitSpacing&) const = default;
};

using SpacingMode = std::variant<EqualSpacing, ExplicitSpacing>;

/// A train of identical packets sent at a barrier.
struct TrainConfig {
    std::size_t n_particles = 1;
    SpacingMode spacing = EqualSpacing{};
    AmplitudeFamily packet = GaussianAmplitude{};
    BarrierModel barrier{{{1.0, 0.1}}};
    std::vector<ExchangeStatistics> statistics{ExchangeStatistics::boson, ExchangeStatistics::fermion,
                                               ExchangeStatistics::distinguishable};

    bool operator==(const TrainConfig&) const = default;
};

/// Throws ValidationError for an inconsistent configuration.
void validate(const TrainConfig& config);

/// Emission times E0 t_n at spacing E0 T.
std::vector<double> emission_times(const TrainConfig& config, double e0_spacing);

/// Packet specs (internal units) at spacing E0 T.
std::vector<WavePacketSpec> build_train(const TrainConfig& config, double e0_spacing, const PhysicalUnits& units = {});

/// Result for one statistics at one grid point; `result` is empty when the point is singular.
struct ScanOutcome {
    ExchangeStatistics statistics;
    std::optional<CountingResult> result;
    std::string failure;
};

struct ScanRow {
    double e0_spacing = 0.0;
    OverlapSet overlaps;
    std::vector<ScanOutcome> outcomes;
    /// Distinguishable-particle baseline, always present.
    CountingResult baseline;

    const ScanOutcome* find(ExchangeStatistics statistics) const;
};

struct ScanResult {
    TrainConfig config;
    std::vector<ScanRow> rows;
};

struct ScanOptions {
    OverlapOptions overlap{};
    CountingOptions counting{};
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned workers = 0;
};

/**
 * Sweeps the emission spacing over `grid` (values of E0 T). Grid points are
 * independent work items; rows come back sorted by E0 T and the result is
 * bit-identical for identical input. A singular normalization is recorded in
 * the affected outcome; every other failure propagates, annotated with the
 * grid point.
 */
ScanResult run_scan(const TrainConfig& config, std::span<const double> grid, const ScanOptions& options = {});

/// Selects n_T (no `transmitted`) or W(n, N) of one statistics.
struct Channel {
    ExchangeStatistics statistics;
    std::optional<std::size_t> transmitted;
};

/// Channel value of a row, if that statistics was computed there.
std::optional<double> channel_value(const ScanRow& row, const Channel& channel);

struct Extremum {
    enum class Kind { maximum, minimum };
    double e0_spacing;
    double value;
    Kind kind;
};

/// Strict three-point local extrema over the consecutive rows where the channel is defined.
std::vector<Extremum> locate_extrema(const ScanResult& result, const Channel& channel);

/// `points` evenly spaced values from start to stop inclusive.
std::vector<double> uniform_grid(double start, double stop, std::size_t points);

}  // namespace fcs

#endif
