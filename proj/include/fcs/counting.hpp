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

#ifndef FCS_COUNTING_HPP
#define FCS_COUNTING_HPP

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "fcs/overlaps.hpp"
#include "fcs/sfunctional.hpp"
#include "fcs/statistics.hpp"

namespace fcs {

struct CountingOptions {
    /// Smallest |S[I]| accepted as a normalization constant.
    double singular_threshold = 1e-12;
    /// Largest imaginary residue tolerated on a probability before it is an error.
    double imaginary_tolerance = 1e-8;
    SFunctionalOptions functional{};
};

/// Full counting statistics of one delay configuration.
struct CountingResult {
    std::size_t n_particles = 0;
    /// W(n, N) for n = 0..N.
    Eigen::VectorXd probabilities;
    double mean = 0.0;
    /// K = S[I]; 1 for distinguishable particles.
    double normalization = 1.0;
    ExchangeStatistics statistics = ExchangeStatistics::distinguishable;
    /// Emission times E0 t_n, when known.
    std::vector<double> delay_config;
};

/// G(alpha) = S[I + (alpha - 1) T] / S[I].
std::complex<double> generating_function(const OverlapSet& overlaps, ExchangeStatistics statistics,
                                         std::complex<double> alpha, const CountingOptions& options = {});

/**
 * W(n, N) = sum_{j1 < ... < jn} S[R with rows j1..jn taken from T] / S[I].
 *
 * Subsets are visited in lexicographic order, and only the rows that change
 * between consecutive subsets are rewritten. Distinguishable statistics
 * dispatch to `dp_statistics(w)`.
 */
CountingResult counting_statistics(const OverlapSet& overlaps, ExchangeStatistics statistics,
                                   const CountingOptions& options = {});

/// n_T = sum_j S[I with row j taken from T] / S[I].
double mean_transmissions(const OverlapSet& overlaps, ExchangeStatistics statistics,
                          const CountingOptions& options = {});

/// Binomial (equal w) or Poisson-binomial counting statistics of independent particles.
CountingResult dp_statistics(std::span<const double> w);

struct TwoParticleClosedForm {
    double w22;
    double w12;
    double mean;
};

/// Closed N = 2 forms, e.g. W(2,2) = (w1 w2 +- |T12|^2) / (1 +- |I12|^2).
TwoParticleClosedForm two_particle_closed_form(const OverlapSet& overlaps, ExchangeStatistics statistics);

}  // namespace fcs

#endif
