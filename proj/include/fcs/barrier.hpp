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

#ifndef FCS_BARRIER_HPP
#define FCS_BARRIER_HPP

#include <vector>

#include "fcs/units.hpp"

namespace fcs {

/// One Breit-Wigner level; energy E^r and half-width Gamma, both in units of E0.
struct Resonance {
    double energy;
    double width;

    bool operator==(const Resonance&) const = default;
};

/**
 * Transmission probability of a resonant scatterer,
 *
 *   |T(p)|^2 = sum_l Gamma_l^2 / ((E(p) - E^r_l)^2 + Gamma_l^2),
 *
 * optionally clamped at 1 where overlapping Lorentzian tails push the bare
 * sum above unity. Only |T|^2 is modelled; no phase information.
 */
class BarrierModel {
public:
    /// Throws ValidationError for an empty list, a non-positive width or unsorted energies.
    explicit BarrierModel(std::vector<Resonance> resonances, bool clamp_to_unity = true,
                          PhysicalUnits units = {});

    const std::vector<Resonance>& resonances() const noexcept { return resonances_; }
    bool clamp_to_unity() const noexcept { return clamp_; }
    const PhysicalUnits& units() const noexcept { return units_; }

    /// |T|^2 as a function of E / E0.
    double transmission_at_energy(double energy_ratio) const;

    /// Peak momenta +-sqrt(2 mass E^r_l) for every level with E^r_l > 0.
    std::vector<double> resonance_momenta() const;

    bool operator==(const BarrierModel&) const = default;

private:
    std::vector<Resonance> resonances_;
    bool clamp_;
    PhysicalUnits units_;
};

/// |T(p)|^2 at momentum p (internal units). Always >= 0.
double transmission_probability(const BarrierModel& model, double p);

}  // namespace fcs

#endif
