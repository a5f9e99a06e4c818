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

#include "fcs/density.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "fcs/errors.hpp"
#include "fcs/overlaps.hpp"

namespace fcs {

double pair_density(std::complex<double> psi1, std::complex<double> psi2, std::complex<double> i12,
                    ExchangeStatistics statistics) {
    const double direct = std::norm(psi1) + std::norm(psi2);
    if (statistics == ExchangeStatistics::distinguishable) return direct;
    const double sign = exchange_sign(statistics);
    const double normalization = 1.0 + sign * std::norm(i12);
    if (!(normalization > kPairSingularThreshold)) {
        std::ostringstream msg;
        msg << "pair density: 1 - |I12|^2 = " << normalization << " is singular";
        throw SingularNormalizationError(msg.str(), normalization, normalization);
    }
    const double exchange = 2.0 * (i12 * psi1 * std::conj(psi2)).real();
    return (direct + sign * exchange) / normalization;
}

double two_particle_density(const WavePacketSpec& first, const WavePacketSpec& second, ExchangeStatistics statistics,
                            double x, double t, std::complex<double> i12, const PhysicalUnits& units,
                            const QuadratureOptions& options) {
    if (statistics == ExchangeStatistics::distinguishable) {
        throw ValidationError("two_particle_density: statistics must be boson or fermion");
    }
    return pair_density(position_wavefunction(first, x, t, units, options),
                        position_wavefunction(second, x, t, units, options), i12, statistics);
}

std::vector<double> DensityGrid::values() const {
    if (points < 2) throw ValidationError("density grid: need at least two points");
    std::vector<double> x(points);
    const double step = 2.0 * half_width / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) x[i] = center - half_width + step * static_cast<double>(i);
    return x;
}

DensityGrid default_density_grid(const WavePacketSpec& first, const WavePacketSpec& second, double t,
                                 const PhysicalUnits& units) {
    const double c1 = classical_center(first, t, units);
    const double c2 = classical_center(second, t, units);
    const double sigma = 1.0 / std::min(amplitude_scale(first.amplitude), amplitude_scale(second.amplitude));
    return {0.5 * (c1 + c2), 20.0 * sigma + 0.5 * std::abs(c1 - c2), 4096};
}

DensityProfile density_profile(const WavePacketSpec& first, const WavePacketSpec& second, double t,
                               const DensityGrid& grid, const PhysicalUnits& units,
                               const QuadratureOptions& options) {
    DensityProfile profile;
    profile.time = t;
    profile.x = grid.values();
    profile.overlap = overlap_I(first, second, {options, units});
    const auto n = profile.x.size();
    profile.boson.resize(n);
    profile.fermion.resize(n);
    profile.distinguishable.resize(n);
    const bool fermion_singular = !(1.0 - std::norm(profile.overlap) > kPairSingularThreshold);
    for (std::size_t i = 0; i < n; ++i) {
        const auto psi1 = position_wavefunction(first, profile.x[i], t, units, options);
        const auto psi2 = position_wavefunction(second, profile.x[i], t, units, options);
        profile.boson[i] = pair_density(psi1, psi2, profile.overlap, ExchangeStatistics::boson);
        profile.fermion[i] = fermion_singular ? std::numeric_limits<double>::quiet_NaN()
                                              : pair_density(psi1, psi2, profile.overlap, ExchangeStatistics::fermion);
        profile.distinguishable[i] = pair_density(psi1, psi2, profile.overlap, ExchangeStatistics::distinguishable);
    }
    return profile;
}

double trapezoid(const std::vector<double>& x, const std::vector<double>& y) {
    double sum = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) sum += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
    return sum;
}

}  // namespace fcs
