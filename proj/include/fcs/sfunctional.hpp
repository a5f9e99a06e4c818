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

#ifndef FCS_SFUNCTIONAL_HPP
#define FCS_SFUNCTIONAL_HPP

#include <bit>
#include <cstdint>
#include <sstream>

#include <Eigen/Dense>

#include "fcs/errors.hpp"
#include "fcs/statistics.hpp"

namespace fcs {

/// Largest matrix order accepted by the S functionals.
inline constexpr Eigen::Index kDefaultMaxOrder = 16;

/**
 * Permanent by Ryser's inclusion-exclusion formula,
 *
 *   perm(A) = (-1)^n sum_{S subset of columns} (-1)^|S| prod_i sum_{j in S} A_ij,
 *
 * walking the subsets in Gray-code order so each step adds or removes one
 * column from the running row sums. O(2^n n).
 */
template <class Derived>
typename Derived::Scalar permanent(const Eigen::MatrixBase<Derived>& matrix) {
    using Scalar = typename Derived::Scalar;
    const Eigen::Index n = matrix.rows();
    eigen_assert(matrix.cols() == n);
    if (n == 0) return Scalar(1);
    if (n == 1) return matrix(0, 0);

    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> row_sums = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(n);
    Scalar total(0);
    std::uint64_t gray = 0;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < subsets; ++k) {
        const int column = std::countr_zero(k);
        const std::uint64_t bit = std::uint64_t{1} << column;
        gray ^= bit;
        if (gray & bit) {
            row_sums += matrix.col(column);
        } else {
            row_sums -= matrix.col(column);
        }
        Scalar product = row_sums.prod();
        if (std::popcount(gray) % 2 == 1) {
            total -= product;
        } else {
            total += product;
        }
    }
    return (n % 2 == 0) ? total : Scalar(-total);
}

/// Determinant by LU factorization with partial pivoting.
template <class Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& matrix) {
    using Plain = typename Derived::PlainObject;
    eigen_assert(matrix.rows() == matrix.cols());
    if (matrix.rows() == 0) return typename Derived::Scalar(1);
    return Eigen::PartialPivLU<Plain>(matrix.eval()).determinant();
}

struct SFunctionalOptions {
    Eigen::Index max_order = kDefaultMaxOrder;
    /// Fault injection for the self-test: fermions use the + parity sign.
    bool flip_parity_sign = false;
};

/**
 * S+ (permanent) for bosons, S- (determinant) for fermions: the parity-signed
 * sum over permutations of products M_{1 s1} ... M_{N sN}.
 */
template <class Derived>
typename Derived::Scalar s_functional(const Eigen::MatrixBase<Derived>& matrix, ExchangeStatistics statistics,
                                      const SFunctionalOptions& options = {}) {
    if (matrix.rows() != matrix.cols()) throw ValidationError("s_functional: matrix must be square");
    if (matrix.rows() > options.max_order) {
        std::ostringstream msg;
        msg << "s_functional: order " << matrix.rows() << " exceeds the cap " << options.max_order;
        throw CapacityError(msg.str());
    }
    switch (statistics) {
        case ExchangeStatistics::boson: return permanent(matrix);
        case ExchangeStatistics::fermion: return options.flip_parity_sign ? permanent(matrix) : determinant(matrix);
        case ExchangeStatistics::distinguishable: break;
    }
    throw ValidationError("s_functional: distinguishable particles have no exchange functional");
}

}  // namespace fcs

#endif
