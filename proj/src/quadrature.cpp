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

#include "fcs/quadrature.hpp"

#include <stdexcept>

namespace fcs {

std::vector<double> plan_panels(double lo, double hi, std::vector<double> forced,
                                const std::function<double(double)>& max_width, std::size_t max_panels) {
    if (!(hi > lo)) throw std::invalid_argument("plan_panels: empty interval");

    std::erase_if(forced, [&](double x) { return !(x > lo && x < hi); });
    forced.push_back(hi);
    std::sort(forced.begin(), forced.end());
    forced.erase(std::unique(forced.begin(), forced.end()), forced.end());

    const double floor_width = 1e-12 * (hi - lo);
    std::vector<double> edges{lo};
    double x = lo;
    for (double stop : forced) {
        while (x < stop) {
            double width = max_width(x);
            if (!(width > floor_width)) width = floor_width;
            // March in equal steps once the stop is within reach, so the last panel is not a sliver.
            const double remaining = stop - x;
            if (remaining <= width) {
                x = stop;
            } else if (remaining <= 2.0 * width) {
                x += 0.5 * remaining;
            } else {
                x += width;
            }
            edges.push_back(x);
            if (edges.size() > max_panels) throw std::length_error("plan_panels: panel budget exceeded");
        }
    }
    return edges;
}

}  // namespace fcs
