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

#ifndef FCS_OVERLAPS_HPP
#define FCS_OVERLAPS_HPP

#include <complex>
#include <functional>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "fcs/barrier.hpp"
#include "fcs/packets.hpp"
#include "fcs/quadrature.hpp"
#include "fcs/units.hpp"

namespace fcs {

struct OverlapOptions {
    QuadratureOptions quadrature{};
    PhysicalUnits units{};
};

/**
 * Overlap matrices of a packet train:
 *   I_mn = Int A_m*(p) A_n(p) exp[i E(p) (t_m - t_n)] dp        (free packets)
 *   T_mn = Int |T(p)|^2 A_m*(p) A_n(p) exp[i E(p) (t_m - t_n)] dp (transmitted parts)
 *   R = I - T, w_n = T_nn.
 * I, T and R are Hermitian; I and T are positive semidefinite Gram matrices.
 */
struct OverlapSet {
    Eigen::MatrixXcd I;
    Eigen::MatrixXcd T;
    Eigen::MatrixXcd R;
    Eigen::VectorXd w;
    /// max |M_mn - conj(M_nm)| over I and T before symmetrization.
    double hermiticity_residual = 0.0;
    /// Largest per-entry quadrature error estimate.
    double quadrature_error = 0.0;
    std::size_t quadrature_panels = 0;

    Eigen::Index size() const { return I.rows(); }
};

/// A narrow structure of the weight |T(p)|^2: a peak at `momentum` with energy half-width `energy_width`.
struct SpectralFeature {
    double momentum;
    double energy_width;
};

/// Weight |T(p)|^2 with the features that the panel plan must resolve.
struct TransmissionProfile {
    std::function<double(double)> probability;
    std::vector<SpectralFeature> features;
};

TransmissionProfile make_profile(const BarrierModel& model);

std::complex<double> overlap_I(const WavePacketSpec& m, const WavePacketSpec& n, const OverlapOptions& options = {});
std::complex<double> overlap_T(const WavePacketSpec& m, const WavePacketSpec& n, const BarrierModel& model,
                               const OverlapOptions& options = {});
std::complex<double> overlap_T(const WavePacketSpec& m, const WavePacketSpec& n, const TransmissionProfile& profile,
                               const OverlapOptions& options = {});

/**
 * Evaluates every (m, n) entry of I and T on one shared adaptive node set,
 * symmetrizes with the conjugate transpose and derives R and w. Throws
 * NumericalAccuracyError naming the worst (m, n) entry when the quadrature
 * misses its tolerance.
 */
OverlapSet build_overlap_set(const std::vector<WavePacketSpec>& specs, const BarrierModel& model,
                             const OverlapOptions& options = {});
OverlapSet build_overlap_set(const std::vector<WavePacketSpec>& specs, const TransmissionProfile& profile,
                             const OverlapOptions& options = {});

/// OverlapSet from given matrices (Hermitized); throws ValidationError on shape mismatch.
OverlapSet make_overlap_set(const Eigen::MatrixXcd& I, const Eigen::MatrixXcd& T);

double smallest_eigenvalue(const Eigen::MatrixXcd& hermitian);

/// Debug dump: one block per matrix (I, T, R), rows of comma-separated "re,im" pairs.
void write_overlap_csv(const OverlapSet& set, std::ostream& out);

}  // namespace fcs

#endif
