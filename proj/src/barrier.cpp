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

#include "fcs/barrier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fcs/errors.hpp"

namespace fcs {

BarrierModel::BarrierModel(std::vector<Resonance> resonances, bool clamp_to_unity, PhysicalUnits units)
    : resonances_(std::move(resonances)), clamp_(clamp_to_unity), units_(units) {
    if (resonances_.empty()) throw ValidationError("barrier: at least one resonance is required");
    for (std::size_t l = 0; l < resonances_.size(); ++l) {
        const auto& r = resonances_[l];
        if (!(r.width > 0.0) || !std::isfinite(r.width)) {
            std::ostringstream msg;
            msg << "barrier: resonance " << l << " has non-positive width " << r.width;
            throw ValidationError(msg.str());
        }
        if (!std::isfinite(r.energy)) {
            std::ostringstream msg;
            msg << "barrier: resonance " << l << " has non-finite energy";
            throw ValidationError(msg.str());
        }
        if (l > 0 && !(r.energy > resonances_[l - 1].energy)) {
            std::ostringstream msg;
            msg << "barrier: resonance energies must be strictly increasing (index " << l << ")";
            throw ValidationError(msg.str());
        }
    }
}

double BarrierModel::transmission_at_energy(double energy_ratio) const {
    double sum = 0.0;
    for (const auto& r : resonances_) {
        const double detuning = energy_ratio - r.energy;
        sum += r.width * r.width / (detuning * detuning + r.width * r.width);
    }
    return clamp_ ? std::min(sum, 1.0) : sum;
}

std::vector<double> BarrierModel::resonance_momenta() const {
    std::vector<double> momenta;
    for (const auto& r : resonances_) {
        if (r.energy <= 0.0) continue;
        const double p = std::sqrt(2.0 * units_.mass * units_.energy_from_ratio(r.energy));
        momenta.push_back(-p);
        momenta.push_back(p);
    }
    std::sort(momenta.begin(), momenta.end());
    return momenta;
}

double transmission_probability(const BarrierModel& model, double p) {
    const auto& units = model.units();
    return model.transmission_at_energy(units.kinetic_energy(p) / units.e0());
}

}  // namespace fcs
