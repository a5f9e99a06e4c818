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

#include "fcs/overlaps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "fcs/csv.hpp"
#include "fcs/errors.hpp"

namespace fcs {

namespace {

double max_delay(const std::vector<WavePacketSpec>& specs) {
    auto [lo, hi] = std::minmax_element(specs.begin(), specs.end(), [](const auto& a, const auto& b) {
        return a.emission_time < b.emission_time;
    });
    return hi->emission_time - lo->emission_time;
}

/**
 * Initial panels: boundaries at every feature momentum, widths no larger than
 * Gamma / (4 dE/dp) at a resonance (growing with the detuning away from it),
 * and at most a pi/4 turn of exp[i E(p) dt] for the largest delay.
 */
std::vector<double> overlap_panels(const std::vector<WavePacketSpec>& specs, const TransmissionProfile* profile,
                                   const PhysicalUnits& units) {
    const auto window = momentum_window(specs);
    const double delay = max_delay(specs);
    double scale = amplitude_scale(specs.front().amplitude);
    std::vector<double> forced;
    for (const auto& spec : specs) {
        scale = std::min(scale, amplitude_scale(spec.amplitude));
        const auto nodes = amplitude_breakpoints(spec.amplitude);
        forced.insert(forced.end(), nodes.begin(), nodes.end());
    }
    std::vector<SpectralFeature> features;
    if (profile) features = profile->features;
    for (const auto& f : features) forced.push_back(f.momentum);

    auto width = [&](double p) {
        double h = 0.5 * scale;
        const double slope = std::max(std::abs(units.group_velocity(p)), 1e-3);
        if (delay > 0.0) h = std::min(h, (std::numbers::pi / 4.0) / (slope * delay));
        for (const auto& f : features) {
            const double detuning = std::abs(units.kinetic_energy(p) - units.kinetic_energy(f.momentum));
            h = std::min(h, std::max(f.energy_width, detuning) / (4.0 * slope));
        }
        return h;
    };
    try {
        return plan_panels(window.lo, window.hi, std::move(forced), width);
    } catch (const std::length_error&) {
        throw NumericalAccuracyError("overlap quadrature: resonance narrower than the panel resolution budget",
                                     std::numeric_limits<double>::infinity());
    }
}

OverlapSet integrate_overlaps(const std::vector<WavePacketSpec>& specs, const TransmissionProfile* profile,
                              const OverlapOptions& options) {
    if (specs.empty()) throw ValidationError("build_overlap_set: need at least one packet");
    for (const auto& spec : specs) validate(spec);

    const auto n = specs.size();
    const auto& units = options.units;
    const auto edges = overlap_panels(specs, profile, units);

    std::vector<std::complex<double>> v(n);
    auto integrand = [&](double p, std::span<std::complex<double>> out) {
        const double energy = units.kinetic_energy(p);
        for (std::size_t m = 0; m < n; ++m) {
            v[m] = amplitude_or_zero(specs[m].amplitude, p) * std::polar(1.0, -energy * specs[m].emission_time);
        }
        const double weight = profile ? profile->probability(p) : 0.0;
        for (std::size_t m = 0; m < n; ++m) {
            for (std::size_t k = 0; k < n; ++k) {
                const auto gram = std::conj(v[m]) * v[k];
                out[m * n + k] = gram;
                out[n * n + m * n + k] = weight * gram;
            }
        }
    };
    const auto result = integrate(integrand, 2 * n * n, edges, options.quadrature);

    if (!result.converged) {
        const auto worst = static_cast<std::size_t>(
            std::max_element(result.component_errors.begin(), result.component_errors.end()) -
            result.component_errors.begin());
        const auto entry = worst % (n * n);
        std::ostringstream msg;
        msg << "overlap quadrature did not converge: worst entry " << (worst < n * n ? "I" : "T") << "("
            << entry / n << "," << entry % n << ") error estimate " << result.component_errors[worst];
        throw NumericalAccuracyError(msg.str(), result.error);
    }

    Eigen::MatrixXcd I(n, n), T(n, n);
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t k = 0; k < n; ++k) {
            I(m, k) = result.values[m * n + k];
            T(m, k) = result.values[n * n + m * n + k];
        }
    }
    auto set = make_overlap_set(I, T);
    set.quadrature_error = *std::max_element(result.component_errors.begin(), result.component_errors.end());
    set.quadrature_panels = result.panels;
    return set;
}

}  // namespace

TransmissionProfile make_profile(const BarrierModel& model) {
    TransmissionProfile profile;
    profile.probability = [model](double p) { return transmission_probability(model, p); };
    const auto& units = model.units();
    for (const auto& r : model.resonances()) {
        if (r.energy <= 0.0) continue;
        const double p = std::sqrt(2.0 * units.mass * units.energy_from_ratio(r.energy));
        const double gamma = units.energy_from_ratio(r.width);
        profile.features.push_back({-p, gamma});
        profile.features.push_back({p, gamma});
    }
    return profile;
}

std::complex<double> overlap_I(const WavePacketSpec& m, const WavePacketSpec& n, const OverlapOptions& options) {
    return integrate_overlaps({m, n}, nullptr, options).I(0, 1);
}

std::complex<double> overlap_T(const WavePacketSpec& m, const WavePacketSpec& n, const BarrierModel& model,
                               const OverlapOptions& options) {
    return overlap_T(m, n, make_profile(model), options);
}

std::complex<double> overlap_T(const WavePacketSpec& m, const WavePacketSpec& n, const TransmissionProfile& profile,
                               const OverlapOptions& options) {
    return integrate_overlaps({m, n}, &profile, options).T(0, 1);
}

OverlapSet build_overlap_set(const std::vector<WavePacketSpec>& specs, const BarrierModel& model,
                             const OverlapOptions& options) {
    const auto profile = make_profile(model);
    return integrate_overlaps(specs, &profile, options);
}

OverlapSet build_overlap_set(const std::vector<WavePacketSpec>& specs, const TransmissionProfile& profile,
                             const OverlapOptions& options) {
    return integrate_overlaps(specs, &profile, options);
}

OverlapSet make_overlap_set(const Eigen::MatrixXcd& I, const Eigen::MatrixXcd& T) {
    if (I.rows() != I.cols() || T.rows() != T.cols() || I.rows() != T.rows() || I.rows() == 0) {
        throw ValidationError("overlap set: I and T must be square, non-empty and of equal size");
    }
    OverlapSet set;
    set.hermiticity_residual = std::max((I - I.adjoint()).cwiseAbs().maxCoeff(), (T - T.adjoint()).cwiseAbs().maxCoeff());
    set.I = 0.5 * (I + I.adjoint());
    set.T = 0.5 * (T + T.adjoint());
    set.R = set.I - set.T;
    set.w = set.T.diagonal().real();
    return set;
}

double smallest_eigenvalue(const Eigen::MatrixXcd& hermitian) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

void write_overlap_csv(const OverlapSet& set, std::ostream& out) {
    auto block = [&](const char* name, const Eigen::MatrixXcd& m) {
        out << "# " << name << '\n';
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            for (Eigen::Index c = 0; c < m.cols(); ++c) {
                if (c) out << ',';
                out << format_double(m(r, c).real()) << ',' << format_double(m(r, c).imag());
            }
            out << '\n';
        }
    };
    block("I", set.I);
    block("T", set.T);
    block("R", set.R);
}

}  // namespace fcs
