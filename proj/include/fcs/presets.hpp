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

#ifndef FCS_PRESETS_HPP
#define FCS_PRESETS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fcs/scan.hpp"

namespace fcs {

struct GridSpec {
    double start = 0.005;
    double stop = 1.2;
    std::size_t points = 241;

    std::vector<double> values() const { return uniform_grid(start, stop, points); }
    bool operator==(const GridSpec&) const = default;
};

/// Parameters of the N = 2 one-particle density figure.
struct DensityPreset {
    double p0_sigma = 6.0;
    /// Emission spacing E0 T.
    double e0_spacing = 4.5;
    /// Observation time E0 t.
    double e0_time = 4.5;
};

/// A named figure reproduction: train, grid, and the particle numbers it is drawn for.
struct FigurePreset {
    std::string name;
    std::string description;
    TrainConfig train;
    GridSpec grid;
    std::vector<std::size_t> particle_counts;
};

/// Single-resonance barrier: E^r/E0 = 0.41, Gamma/E0 = 0.0087, packets p0 sigma = 3.77.
TrainConfig single_resonance_train(std::size_t n_particles = 4, bool clamp = true);
/// Two-level barrier: E^r/E0 = 0.95, 3.82; Gamma/E0 = 0.038, 0.28; packets p0 sigma = 6.04.
TrainConfig two_resonance_train(std::size_t n_particles = 4, bool clamp = true);

/// Delay E0 T_k = 2 pi k / ((E^r_2 - E^r_1) / E0) at which two-level interference recurs.
double resonance_difference_delay(const BarrierModel& barrier, int k);

/// `fig2a`, `fig2b`, `fig4`, `fig5`, `fig6`; nullopt for unknown names (and for `fig3`, see density_preset()).
std::optional<FigurePreset> figure_preset(std::string_view name);
DensityPreset density_preset();
std::vector<std::string> preset_names();

}  // namespace fcs

#endif
