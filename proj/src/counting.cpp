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

#include "fcs/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "fcs/errors.hpp"

namespace fcs {

namespace {

// S functionals of near-singular fermion matrices cancel heavily; sums and
// ratios are formed in extended precision and rounded once at the end.
using Extended = std::complex<long double>;
using ExtendedMatrix = Eigen::Matrix<Extended, Eigen::Dynamic, Eigen::Dynamic>;

ExtendedMatrix extend(const Eigen::MatrixXcd& m) { return m.cast<Extended>(); }

std::complex<double> narrow(Extended value) {
    return {static_cast<double>(value.real()), static_cast<double>(value.imag())};
}

void require_exchange(ExchangeStatistics statistics, const char* where) {
    if (statistics == ExchangeStatistics::distinguishable) {
        throw ValidationError(std::string(where) + ": requires boson or fermion statistics");
    }
}

Extended checked_normalization(const OverlapSet& overlaps, ExchangeStatistics statistics,
                                const CountingOptions& options) {
    if (overlaps.size() > options.functional.max_order) {
        std::ostringstream msg;
        msg << "counting: " << overlaps.size() << " particles exceed the cap " << options.functional.max_order;
        throw CapacityError(msg.str());
    }
    const auto k = s_functional(extend(overlaps.I), statistics, options.functional);
    const auto magnitude = static_cast<double>(std::abs(k));
    if (!(magnitude > options.singular_threshold)) {
        const double lambda = smallest_eigenvalue(overlaps.I);
        std::ostringstream msg;
        msg << "singular normalization: |S[I]| = " << magnitude << " <= " << options.singular_threshold
            << " (smallest eigenvalue of I = " << lambda << ")";
        throw SingularNormalizationError(msg.str(), magnitude, lambda);
    }
    return k;
}

double real_part(std::complex<double> value, double tolerance, const char* what) {
    if (std::abs(value.imag()) > tolerance) {
        std::ostringstream msg;
        msg << what << " carries an imaginary part " << value.imag();
        throw NumericalAccuracyError(msg.str(), std::abs(value.imag()));
    }
    return value.real();
}

}  // namespace

std::complex<double> generating_function(const OverlapSet& overlaps, ExchangeStatistics statistics,
                                         std::complex<double> alpha, const CountingOptions& options) {
    require_exchange(statistics, "generating_function");
    const auto k = checked_normalization(overlaps, statistics, options);
    const ExtendedMatrix delta = extend(overlaps.I) + (Extended(alpha) - Extended(1.0L)) * extend(overlaps.T);
    return narrow(s_functional(delta, statistics, options.functional) / k);
}

CountingResult counting_statistics(const OverlapSet& overlaps, ExchangeStatistics statistics,
                                   const CountingOptions& options) {
    if (statistics == ExchangeStatistics::distinguishable) {
        const std::vector<double> w(overlaps.w.data(), overlaps.w.data() + overlaps.w.size());
        return dp_statistics(w);
    }
    const auto k = checked_normalization(overlaps, statistics, options);
    const auto n = static_cast<std::size_t>(overlaps.size());

    CountingResult result;
    result.n_particles = n;
    result.statistics = statistics;
    result.normalization = real_part(narrow(k), options.imaginary_tolerance * std::max(1.0L, std::abs(k)), "S[I]");
    result.probabilities.resize(static_cast<Eigen::Index>(n + 1));

    // R = I - T again in extended precision, so that rows of R and T add up to I beyond double rounding.
    const ExtendedMatrix t_rows = extend(overlaps.T);
    const ExtendedMatrix r_rows = extend(overlaps.I) - t_rows;
    ExtendedMatrix work = r_rows;
    std::vector<bool> from_t(n, false);
    for (std::size_t count = 0; count <= n; ++count) {
        // Lexicographically first subset of size `count`.
        std::vector<std::size_t> rows(count);
        std::iota(rows.begin(), rows.end(), std::size_t{0});
        Extended sum = 0.0L;
        while (true) {
            std::vector<bool> wanted(n, false);
            for (auto r : rows) wanted[r] = true;
            for (std::size_t r = 0; r < n; ++r) {
                if (wanted[r] == from_t[r]) continue;
                const auto row = static_cast<Eigen::Index>(r);
                work.row(row) = wanted[r] ? t_rows.row(row) : r_rows.row(row);
                from_t[r] = wanted[r];
            }
            sum += s_functional(work, statistics, options.functional);

            // Advance to the next combination.
            std::size_t i = count;
            while (i > 0 && rows[i - 1] == n - count + i - 1) --i;
            if (i == 0) break;
            ++rows[i - 1];
            for (std::size_t j = i; j < count; ++j) rows[j] = rows[j - 1] + 1;
        }
        std::ostringstream what;
        what << "W(" << count << "," << n << ")";
        result.probabilities(static_cast<Eigen::Index>(count)) =
            real_part(narrow(sum / k), options.imaginary_tolerance, what.str().c_str());
    }
    result.mean = mean_transmissions(overlaps, statistics, options);
    return result;
}

double mean_transmissions(const OverlapSet& overlaps, ExchangeStatistics statistics, const CountingOptions& options) {
    if (statistics == ExchangeStatistics::distinguishable) return overlaps.w.sum();
    const auto k = checked_normalization(overlaps, statistics, options);
    const ExtendedMatrix i_rows = extend(overlaps.I);
    const ExtendedMatrix t_rows = extend(overlaps.T);
    ExtendedMatrix work = i_rows;
    Extended sum = 0.0L;
    for (Eigen::Index j = 0; j < overlaps.size(); ++j) {
        work.row(j) = t_rows.row(j);
        sum += s_functional(work, statistics, options.functional);
        work.row(j) = i_rows.row(j);
    }
    return real_part(narrow(sum / k), options.imaginary_tolerance, "mean transmissions");
}

CountingResult dp_statistics(std::span<const double> w) {
    constexpr double slack = 1e-9;
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!(w[i] >= -slack && w[i] <= 1.0 + slack)) {
            std::ostringstream msg;
            msg << "dp_statistics: w[" << i << "] = " << w[i] << " is not a probability";
            throw ValidationError(msg.str());
        }
    }

    CountingResult result;
    result.n_particles = n;
    result.statistics = ExchangeStatistics::distinguishable;
    result.normalization = 1.0;
    result.probabilities = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n + 1));
    result.mean = std::accumulate(w.begin(), w.end(), 0.0);

    const bool equal = std::all_of(w.begin(), w.end(), [&](double x) { return x == w.front(); });
    if (n > 0 && equal) {
        const double p = std::clamp(w.front(), 0.0, 1.0);
        for (std::size_t k = 0; k <= n; ++k) {
            const double binom = std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
            result.probabilities(static_cast<Eigen::Index>(k)) =
                std::round(binom) * std::pow(p, static_cast<double>(k)) * std::pow(1.0 - p, static_cast<double>(n - k));
        }
        return result;
    }

    // Poisson-binomial: fold in one particle at a time.
    result.probabilities(0) = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double p = std::clamp(w[i], 0.0, 1.0);
        for (auto k = static_cast<Eigen::Index>(i + 1); k >= 1; --k) {
            result.probabilities(k) = result.probabilities(k) * (1.0 - p) + result.probabilities(k - 1) * p;
        }
        result.probabilities(0) *= 1.0 - p;
    }
    return result;
}

TwoParticleClosedForm two_particle_closed_form(const OverlapSet& overlaps, ExchangeStatistics statistics) {
    require_exchange(statistics, "two_particle_closed_form");
    if (overlaps.size() != 2) throw ValidationError("two_particle_closed_form: needs exactly two particles");
    const double sign = exchange_sign(statistics);
    const double w1 = overlaps.w(0);
    const double w2 = overlaps.w(1);
    const auto i12 = overlaps.I(0, 1);
    const auto t12 = overlaps.T(0, 1);
    const auto r12 = overlaps.R(0, 1);
    const double denominator = 1.0 + sign * std::norm(i12);
    return {
        (w1 * w2 + sign * std::norm(t12)) / denominator,
        (w1 * (1.0 - w2) + w2 * (1.0 - w1) + sign * 2.0 * (t12 * std::conj(r12)).real()) / denominator,
        (w1 + w2 + sign * 2.0 * (t12 * std::conj(i12)).real()) / denominator,
    };
}

}  // namespace fcs
