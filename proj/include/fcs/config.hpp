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

#ifndef FCS_CONFIG_HPP
#define FCS_CONFIG_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fcs/presets.hpp"
#include "fcs/scan.hpp"

namespace fcs {

struct Tolerances {
    double quadrature = 1e-10;
    double singular = 1e-12;

    bool operator==(const Tolerances&) const = default;
};

/// Everything a `scan` or `figure` run needs; validated on construction by parse_config.
struct RunConfig {
    /// Figure preset the document started from ("" for none).
    std::string preset;
    TrainConfig train;
    GridSpec grid;
    /// Particle numbers to run; `train.n_particles` is the first.
    std::vector<std::size_t> particle_counts;
    Tolerances tolerance;
    std::string output;

    bool operator==(const RunConfig&) const = default;
};

/**
 * Parses a JSON run document:
 *
 *   {
 *     "preset": "fig2a",                      optional; supplies every other key
 *     "particles": 4,                         or a list, e.g. [2, 4, 6]
 *     "packet": {"type": "gaussian", "p0_sigma": 3.77}
 *            | {"type": "tabulated", "samples": [[p/p0, re, im], ...]},
 *     "barrier": {"resonances": [{"energy": 0.41, "width": 0.0087}], "clamp_to_unity": true},
 *     "spacing": "equal" | {"explicit": [0, 0.5, 1.5]},
 *     "grid": {"start": 0.005, "stop": 1.2, "points": 241},
 *     "statistics": ["boson", "fermion", "distinguishable"],
 *     "tolerance": {"quadrature": 1e-10, "singular": 1e-12},
 *     "output": "scan.csv"
 *   }
 *
 * Energies and widths are in units of E0, grid values are E0 T. Without a
 * preset, "particles", "packet" and "barrier" are required. Unknown keys and
 * type mismatches raise ParseError naming the key path; physically invalid
 * values raise ValidationError.
 */
RunConfig parse_config(std::string_view text);
RunConfig config_from_json(const nlohmann::json& document);

/// Complete document (no preset indirection) that parses back to `config`.
nlohmann::json to_json(const RunConfig& config);

/// RunConfig of a figure preset; throws ValidationError for unknown names.
RunConfig preset_config(std::string_view name);

ScanOptions scan_options(const RunConfig& config);

}  // namespace fcs

#endif
