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

#ifndef FCS_PACKETS_HPP
#define FCS_PACKETS_HPP

#include <complex>
#include <variant>
#include <vector>

#include "fcs/quadrature.hpp"
#include "fcs/units.hpp"

namespace fcs {

/// A(p) = (sigma^2 / 2 pi)^(1/4) exp[-(p - p0)^2 sigma^2 / 4]; sigma is a coordinate width.
struct GaussianAmplitude {
    double p0 = 1.0;
    double sigma = 1.0;

    bool operator==(const GaussianAmplitude&) const = default;
};

/// Complex samples on a strictly increasing momentum grid, linearly interpolated.
struct TabulatedAmplitude {
    std::vector<double> momenta;
    std::vector<std::complex<double>> values;

    bool operator==(const TabulatedAmplitude&) const = default;
};

using AmplitudeFamily = std::variant<GaussianAmplitude, TabulatedAmplitude>;

/// One emitted particle: momentum-space amplitude and emission time t_n (internal units).
struct WavePacketSpec {
    AmplitudeFamily amplitude = GaussianAmplitude{};
    double emission_time = 0.0;

    bool operator==(const WavePacketSpec&) const = default;
};

/// Tolerance on the square norm of a tabulated amplitude.
inline constexpr double kTabulatedNormTolerance = 1e-6;

/// Momentum interval carrying the amplitude: p0 +- 12/sigma, or the tabulated grid.
struct MomentumWindow {
    double lo;
    double hi;
};

MomentumWindow momentum_window(const AmplitudeFamily& family);
MomentumWindow momentum_window(const std::vector<WavePacketSpec>& specs);

/// Throws ValidationError when the family violates its invariants.
void validate(const AmplitudeFamily& family);
void validate(const WavePacketSpec& spec);

/// A(p). Throws OutOfRangeError for a tabulated family evaluated off its grid.
std::complex<double> amplitude(const AmplitudeFamily& family, double p);
inline std::complex<double> amplitude(const WavePacketSpec& spec, double p) { return amplitude(spec.amplitude, p); }

/// A(p) inside the family's support, zero outside it.
std::complex<double> amplitude_or_zero(const AmplitudeFamily& family, double p);

/// Natural panel boundaries of the family (the tabulated nodes; none for a Gaussian).
std::vector<double> amplitude_breakpoints(const AmplitudeFamily& family);

/// Momentum scale over which A(p) varies appreciably.
double amplitude_scale(const AmplitudeFamily& family);

/// Integral of |A(p)|^2 over the momentum window.
double square_norm(const AmplitudeFamily& family, const QuadratureOptions& options = {});

/**
 * Free-particle wave function
 *   psi_n(x, t) = (2 pi)^(-1/2) Int A(p) exp[i p x - i E(p) (t + t_n)] dp
 * by adaptive quadrature over the momentum window. Requires t >= 0; throws
 * NumericalAccuracyError when the quadrature does not reach `options.abs_tol`.
 */
std::complex<double> position_wavefunction(const WavePacketSpec& spec, double x, double t,
                                           const PhysicalUnits& units = {},
                                           const QuadratureOptions& options = {});

/// Classical position p0 (t + t_n) / mass of the packet centre.
double classical_center(const WavePacketSpec& spec, double t, const PhysicalUnits& units = {});

}  // namespace fcs

#endif
