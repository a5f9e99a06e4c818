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

#ifndef FCS_UNITS_HPP
#define FCS_UNITS_HPP

namespace fcs {

/**
 * Mass and reference momentum of the particles.
 *
 * Everything internal runs in units with mass = 1 and p0 = 1, so the
 * reference energy E0 = p0^2 / 2 mass is 1/2. Energies and times cross the
 * public boundary as the dimensionless ratios E / E0 and E0 * t.
 */
struct PhysicalUnits {
    double mass = 1.0;
    double p0 = 1.0;

    constexpr double e0() const { return p0 * p0 / (2.0 * mass); }
    constexpr double kinetic_energy(double p) const { return p * p / (2.0 * mass); }
    constexpr double group_velocity(double p) const { return p / mass; }

    constexpr double energy_from_ratio(double ratio) const { return ratio * e0(); }
    constexpr double time_from_ratio(double e0_t) const { return e0_t / e0(); }
    constexpr double time_to_ratio(double t) const { return t * e0(); }

    bool operator==(const PhysicalUnits&) const = default;
};

}  // namespace fcs

#endif
