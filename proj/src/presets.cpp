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

#include "fcs/presets.hpp"

#include <numbers>

#include "fcs/errors.hpp"

namespace fcs {

TrainConfig single_resonance_train(std::size_t n_particles, bool clamp) {
    TrainConfig train;
    train.n_particles = n_particles;
    train.packet = GaussianAmplitude{1.0, 3.77};
    train.barrier = BarrierModel({{0.41, 0.0087}}, clamp);
    return train;
}

TrainConfig two_resonance_train(std::size_t n_particles, bool clamp) {
    TrainConfig train;
    train.n_particles = n_particles;
    train.packet = GaussianAmplitude{1.0, 6.04};
    train.barrier = BarrierModel({{0.95, 0.038}, {3.82, 0.28}}, clamp);
    return train;
}

double resonance_difference_delay(const BarrierModel& barrier, int k) {
    const auto& levels = barrier.resonances();
    if (levels.size() < 2) throw ValidationError("resonance_difference_delay: needs two resonances");
    return 2.0 * std::numbers::pi * k / (levels[1].energy - levels[0].energy);
}

std::optional<FigurePreset> figure_preset(std::string_view name) {
    // The two-level grid reaches past E0 T_2 so both recurrences are sampled.
    const GridSpec single_grid{0.005, 1.2, 241};
    const GridSpec two_level_grid{0.005, 5.0, 241};
    if (name == "fig2a") {
        return FigurePreset{"fig2a", "mean transmissions vs delay, one resonance", single_resonance_train(), single_grid,
                            {4}};
    }
    if (name == "fig2b") {
        return FigurePreset{"fig2b", "mean transmissions vs delay, two resonances", two_resonance_train(),
                            two_level_grid, {4}};
    }
    if (name == "fig4") {
        return FigurePreset{"fig4", "W(n,4) vs delay, one resonance", single_resonance_train(), single_grid, {4}};
    }
    if (name == "fig5") {
        return FigurePreset{"fig5", "W(n,4) vs delay, two resonances", two_resonance_train(), two_level_grid, {4}};
    }
    if (name == "fig6") {
        return FigurePreset{"fig6", "W(N,N) vs delay for N = 2, 4, 6, two resonances", two_resonance_train(),
                            two_level_grid, {2, 4, 6}};
    }
    return std::nullopt;
}

DensityPreset density_preset() { return {}; }

std::vector<std::string> preset_names() { return {"fig2a", "fig2b", "fig3", "fig4", "fig5", "fig6"}; }

}  // namespace fcs
