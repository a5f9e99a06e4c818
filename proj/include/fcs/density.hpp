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

#ifndef FCS_DENSITY_HPP
#define FCS_DENSITY_HPP

#include <complex>
#include <vector>

#include "fcs/packets.hpp"
#include "fcs/statistics.hpp"

namespace fcs {

/// Smallest 1 - |I12|^2 accepted for a fermion pair.
inline constexpr double kPairSingularThreshold = 1e-12;

/**
 * One-particle density of a symmetrized (boson) or antisymmetrized (fermion)
 * pair built from the single-particle values psi1(x), psi2(x) and the pair
 * overlap I12 = <psi1|psi2>:
 *
 *   rho(x) = [|psi1|^2 + |psi2|^2 +- 2 Re(I12 psi1 psi2*)] / (1 +- |I12|^2),
 *
 * normalized to 2. Distinguishable particles drop the exchange term and the
 * normalization.
 */
double pair_density(std::complex<double> psi1, std::complex<double> psi2, std::complex<double> i12,
                    ExchangeStatistics statistics);

/// Pair density at (x, t), evaluating both wave functions by quadrature.
double two_particle_density(const WavePacketSpec& first, const WavePacketSpec& second, ExchangeStatistics statistics,
                            double x, double t, std::complex<double> i12, const PhysicalUnits& units = {},
                            const QuadratureOptions& options = {});

/// Uniform x grid for a density profile.
struct DensityGrid {
    double center = 0.0;
    double half_width = 1.0;
    std::size_t points = 4096;

    std::vector<double> values() const;
};

/// 4096 points spanning +-20 sigma around the midpoint of the two classical centres (plus their separation).
DensityGrid default_density_grid(const WavePacketSpec& first, const WavePacketSpec& second, double t,
                                 const PhysicalUnits& units = {});

struct DensityProfile {
    std::vector<double> x;
    std::vector<double> boson;
    std::vector<double> fermion;
    std::vector<double> distinguishable;
    std::complex<double> overlap;
    double time = 0.0;
};

/// Boson, fermion and distinguishable densities on `grid`. Fermion entries are NaN for a singular pair.
DensityProfile density_profile(const WavePacketSpec& first, const WavePacketSpec& second, double t,
                               const DensityGrid& grid, const PhysicalUnits& units = {},
                               const QuadratureOptions& options = {});

/// Trapezoidal integral of samples y over the abscissae x.
double trapezoid(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace fcs

#endif
