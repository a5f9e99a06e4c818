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

#ifndef FCS_SELFTEST_HPP
#define FCS_SELFTEST_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fcs {

struct SelftestOptions {
    double quadrature_tolerance = 1e-10;
    /// Fault injection: fermions use the + parity sign (the Hadamard suite must catch it).
    bool flip_parity_sign = false;
    std::uint64_t seed = 20140101;
    int trials = 40;
};

struct SuiteReport {
    std::string name;
    bool passed = false;
    double worst_residual = 0.0;
    double threshold = 0.0;
    std::string detail;
};

/**
 * Runs the invariant suites: permanent/determinant vs permutation sums,
 * normalization, generating-function interpolation, bunching inequalities,
 * mean invariance, distinguishable limit, permutation invariance and
 * quadrature accuracy against a frozen reference. Failures are report
 * entries, never exceptions.
 */
std::vector<SuiteReport> run_selftest(const SelftestOptions& options = {});

void print_report(const std::vector<SuiteReport>& reports, std::ostream& out);

}  // namespace fcs

#endif
