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

#ifndef FCS_STATISTICS_HPP
#define FCS_STATISTICS_HPP

#include <optional>
#include <string_view>

namespace fcs {

/// Boson selects the permanent (+), Fermion the determinant (-); Distinguishable bypasses both.
enum class ExchangeStatistics { boson, fermion, distinguishable };

constexpr std::string_view to_string(ExchangeStatistics s) {
    switch (s) {
        case ExchangeStatistics::boson: return "boson";
        case ExchangeStatistics::fermion: return "fermion";
        case ExchangeStatistics::distinguishable: return "distinguishable";
    }
    return "unknown";
}

constexpr std::optional<ExchangeStatistics> parse_statistics(std::string_view name) {
    if (name == "boson") return ExchangeStatistics::boson;
    if (name == "fermion") return ExchangeStatistics::fermion;
    if (name == "distinguishable" || name == "dp") return ExchangeStatistics::distinguishable;
    return std::nullopt;
}

/// Sign in front of the permutation parity: +1 for bosons, -1 for fermions.
constexpr int exchange_sign(ExchangeStatistics s) { return s == ExchangeStatistics::fermion ? -1 : 1; }

}  // namespace fcs

#endif
