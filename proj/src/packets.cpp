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

#include "fcs/packets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fcs/errors.hpp"

namespace fcs {

namespace {

constexpr double kGaussianWindowHalfWidth = 12.0;  // in units of 1/sigma

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

std::complex<double> interpolate(const TabulatedAmplitude& tab, double p) {
    const auto& ps = tab.momenta;
    auto it = std::upper_bound(ps.begin(), ps.end(), p);
    if (it == ps.end()) return tab.values.back();
    if (it == ps.begin()) return tab.values.front();
    const std::size_t hi = static_cast<std::size_t>(it - ps.begin());
    const std::size_t lo = hi - 1;
    const double u = (p - ps[lo]) / (ps[hi] - ps[lo]);
    return (1.0 - u) * tab.values[lo] + u * tab.values[hi];
}

bool in_support(const TabulatedAmplitude& tab, double p) { return p >= tab.momenta.front() && p <= tab.momenta.back(); }

double square_norm_unchecked(const AmplitudeFamily& family, const QuadratureOptions& options) {
    const auto window = momentum_window(family);
    auto edges = amplitude_breakpoints(family);
    if (edges.empty()) {
        const double scale = amplitude_scale(family);
        edges = plan_panels(window.lo, window.hi, {}, [scale](double) { return 0.5 * scale; });
    }
    auto result = integrate(
        [&](double p, std::span<std::complex<double>> out) { out[0] = std::norm(amplitude_or_zero(family, p)); }, 1,
        edges, options);
    return result.values[0].real();
}

}  // namespace

MomentumWindow momentum_window(const AmplitudeFamily& family) {
    return std::visit(overloaded{
                          [](const GaussianAmplitude& g) {
                              const double half = kGaussianWindowHalfWidth / g.sigma;
                              return MomentumWindow{g.p0 - half, g.p0 + half};
                          },
                          [](const TabulatedAmplitude& t) {
                              return MomentumWindow{t.momenta.front(), t.momenta.back()};
                          },
                      },
                      family);
}

MomentumWindow momentum_window(const std::vector<WavePacketSpec>& specs) {
    if (specs.empty()) throw ValidationError("momentum_window: no packets");
    MomentumWindow window = momentum_window(specs.front().amplitude);
    for (const auto& spec : specs) {
        const auto w = momentum_window(spec.amplitude);
        window.lo = std::min(window.lo, w.lo);
        window.hi = std::max(window.hi, w.hi);
    }
    return window;
}

void validate(const AmplitudeFamily& family) {
    std::visit(overloaded{
                   [](const GaussianAmplitude& g) {
                       if (!(g.p0 > 0.0) || !std::isfinite(g.p0))
                           throw ValidationError("gaussian amplitude: p0 must be positive and finite");
                       if (!(g.sigma > 0.0) || !std::isfinite(g.sigma))
                           throw ValidationError("gaussian amplitude: sigma must be positive and finite");
                   },
                   [&family](const TabulatedAmplitude& t) {
                       if (t.momenta.size() < 2 || t.momenta.size() != t.values.size())
                           throw ValidationError("tabulated amplitude: need at least two (p, A) samples");
                       for (std::size_t i = 1; i < t.momenta.size(); ++i) {
                           if (!(t.momenta[i] > t.momenta[i - 1]))
                               throw ValidationError("tabulated amplitude: momentum grid must be strictly increasing");
                       }
                       const double norm = square_norm_unchecked(family, {});
                       if (std::abs(norm - 1.0) > kTabulatedNormTolerance) {
                           std::ostringstream msg;
                           msg << "tabulated amplitude: square norm " << norm << " is not 1";
                           throw ValidationError(msg.str());
                       }
                   },
               },
               family);
}

void validate(const WavePacketSpec& spec) {
    validate(spec.amplitude);
    if (!std::isfinite(spec.emission_time)) throw ValidationError("wave packet: emission time must be finite");
}

std::complex<double> amplitude(const AmplitudeFamily& family, double p) {
    return std::visit(overloaded{
                          [p](const GaussianAmplitude& g) -> std::complex<double> {
                              const double prefactor = std::pow(g.sigma * g.sigma / (2.0 * std::numbers::pi), 0.25);
                              const double d = (p - g.p0) * g.sigma;
                              return prefactor * std::exp(-0.25 * d * d);
                          },
                          [p](const TabulatedAmplitude& t) -> std::complex<double> {
                              if (!in_support(t, p)) {
                                  std::ostringstream msg;
                                  msg << "tabulated amplitude: p = " << p << " outside [" << t.momenta.front()
                                      << ", " << t.momenta.back() << "]";
                                  throw OutOfRangeError(msg.str());
                              }
                              return interpolate(t, p);
                          },
                      },
                      family);
}

std::complex<double> amplitude_or_zero(const AmplitudeFamily& family, double p) {
    if (const auto* t = std::get_if<TabulatedAmplitude>(&family)) {
        return in_support(*t, p) ? interpolate(*t, p) : std::complex<double>{};
    }
    return amplitude(family, p);
}

std::vector<double> amplitude_breakpoints(const AmplitudeFamily& family) {
    if (const auto* t = std::get_if<TabulatedAmplitude>(&family)) return t->momenta;
    return {};
}

double amplitude_scale(const AmplitudeFamily& family) {
    return std::visit(overloaded{
                          [](const GaussianAmplitude& g) { return 1.0 / g.sigma; },
                          [](const TabulatedAmplitude& t) {
                              return (t.momenta.back() - t.momenta.front()) / 8.0;
                          },
                      },
                      family);
}

double square_norm(const AmplitudeFamily& family, const QuadratureOptions& options) {
    return square_norm_unchecked(family, options);
}

double classical_center(const WavePacketSpec& spec, double t, const PhysicalUnits& units) {
    double p0 = units.p0;
    if (const auto* g = std::get_if<GaussianAmplitude>(&spec.amplitude)) p0 = g->p0;
    return units.group_velocity(p0) * (t + spec.emission_time);
}

std::complex<double> position_wavefunction(const WavePacketSpec& spec, double x, double t,
                                           const PhysicalUnits& units, const QuadratureOptions& options) {
    if (!(t >= 0.0)) throw ValidationError("position_wavefunction: t must be non-negative");
    const double tau = t + spec.emission_time;
    const auto window = momentum_window(spec.amplitude);
    const double scale = amplitude_scale(spec.amplitude);

    // Phase p x - E(p) tau turns by at most pi/4 across a panel.
    auto width = [&](double p) {
        const double rate = std::abs(x - units.group_velocity(p) * tau);
        return std::min(0.5 * scale, (std::numbers::pi / 4.0) / std::max(rate, 1e-300));
    };
    const auto edges = plan_panels(window.lo, window.hi, amplitude_breakpoints(spec.amplitude), width);

    auto result = integrate(
        [&](double p, std::span<std::complex<double>> out) {
            const double phase = p * x - units.kinetic_energy(p) * tau;
            out[0] = amplitude_or_zero(spec.amplitude, p) * std::polar(1.0, phase);
        },
        1, edges, options);
    if (!result.converged) {
        std::ostringstream msg;
        msg << "position_wavefunction: quadrature did not converge at x = " << x << ", t = " << t
            << " (error estimate " << result.error << ")";
        throw NumericalAccuracyError(msg.str(), result.error);
    }
    return result.values[0] / std::sqrt(2.0 * std::numbers::pi);
}

}  // namespace fcs
