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

#ifndef FCS_ORACLES_HPP
#define FCS_ORACLES_HPP

// Reference evaluations kept independent of the production code paths:
// permutation enumeration instead of Ryser / LU, discrete Fourier
// interpolation of G(alpha) instead of row replacement, and generators of
// random valid overlap sets.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "fcs/counting.hpp"
#include "fcs/overlaps.hpp"
#include "fcs/statistics.hpp"

namespace fcs::oracle {

/// Leibniz sum over all permutations; sign = +1 gives the permanent, -1 the determinant.
template <class Derived>
typename Derived::Scalar leibniz(const Eigen::MatrixBase<Derived>& m, int sign) {
    using Scalar = typename Derived::Scalar;
    const auto n = static_cast<int>(m.rows());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Scalar total(0);
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        Scalar product(1);
        for (int i = 0; i < n; ++i) product *= m(i, perm[static_cast<std::size_t>(i)]);
        total += (sign < 0 && inversions % 2 == 1) ? Scalar(-product) : product;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// W(n, N) as the coefficients of G(alpha) sampled at the N+1 roots of unity.
inline Eigen::VectorXd interpolated_probabilities(const OverlapSet& set, ExchangeStatistics statistics,
                                                  const CountingOptions& options = {}) {
    const auto nodes = set.size() + 1;
    std::vector<std::complex<double>> samples(static_cast<std::size_t>(nodes));
    for (Eigen::Index k = 0; k < nodes; ++k) {
        const auto alpha = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(nodes));
        samples[static_cast<std::size_t>(k)] = generating_function(set, statistics, alpha, options);
    }
    Eigen::VectorXd w(nodes);
    for (Eigen::Index n = 0; n < nodes; ++n) {
        std::complex<double> c = 0.0;
        for (Eigen::Index k = 0; k < nodes; ++k) {
            c += samples[static_cast<std::size_t>(k)] *
                 std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k * n) / static_cast<double>(nodes));
        }
        w(n) = c.real() / static_cast<double>(nodes);
    }
    return w;
}

inline Eigen::MatrixXcd random_complex_matrix(std::mt19937_64& rng, Eigen::Index n) {
    std::normal_distribution<double> normal;
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = {normal(rng), normal(rng)};
    return m;
}

/**
 * Random physically valid overlap set: packets are unit vectors v_m in C^d,
 * I = V* V, and T = V* D V for a transmission diagonal D with entries in
 * [0, 1]. `uncorrelated` makes the v_m orthonormal so I is the identity.
 */
inline OverlapSet random_overlap_set(std::mt19937_64& rng, Eigen::Index n, bool uncorrelated = false) {
    const Eigen::Index dim = n + 3;
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Eigen::MatrixXcd v(dim, n);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < n; ++j) v(i, j) = {normal(rng), normal(rng)};
    if (uncorrelated) {
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(v);
        v = qr.householderQ() * Eigen::MatrixXcd::Identity(dim, n);
    } else {
        // Pull the packets towards a common direction so I carries sizeable off-diagonals.
        Eigen::VectorXcd common = v.col(0);
        for (Eigen::Index j = 0; j < n; ++j) v.col(j) += 1.5 * unit(rng) * common;
        v.colwise().normalize();
    }
    Eigen::VectorXd d(dim);
    for (Eigen::Index i = 0; i < dim; ++i) d(i) = unit(rng);
    const Eigen::MatrixXcd I = v.adjoint() * v;
    const Eigen::MatrixXcd T = v.adjoint() * d.asDiagonal() * v;
    return make_overlap_set(I, T);
}

inline double binomial_probability(std::size_t n, std::size_t k, double w) {
    double c = 1.0;
    for (std::size_t i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
    return c * std::pow(w, static_cast<double>(k)) * std::pow(1.0 - w, static_cast<double>(n - k));
}

}  // namespace fcs::oracle

#endif
