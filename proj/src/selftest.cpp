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

#include "fcs/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "fcs/counting.hpp"
#include "fcs/errors.hpp"
#include "fcs/oracles.hpp"
#include "fcs/presets.hpp"
#include "fcs/scan.hpp"

namespace fcs {

namespace {

// Single-resonance w from 30-digit adaptive quadrature (tests/oracle/reference_values.py).
constexpr double kSingleResonanceW = 0.012681424455291783;

constexpr std::array kExchange{ExchangeStatistics::boson, ExchangeStatistics::fermion};

SuiteReport run_suite(const std::string& name, double threshold, const std::function<double(std::string&)>& body) {
    SuiteReport report{name, false, 0.0, threshold, {}};
    try {
        report.worst_residual = body(report.detail);
        report.passed = report.worst_residual <= threshold;
    } catch (const std::exception& e) {
        report.worst_residual = std::numeric_limits<double>::infinity();
        report.detail = e.what();
    }
    return report;
}

}  // namespace

std::vector<SuiteReport> run_selftest(const SelftestOptions& options) {
    CountingOptions counting;
    counting.functional.flip_parity_sign = options.flip_parity_sign;
    std::vector<SuiteReport> reports;

    reports.push_back(run_suite("permanent-determinant", 1e-12, [&](std::string& detail) {
        std::mt19937_64 rng(options.seed);
        double worst = 0.0;
        for (Eigen::Index n = 2; n <= 7; ++n) {
            for (int trial = 0; trial < options.trials / 4 + 1; ++trial) {
                const auto m = oracle::random_complex_matrix(rng, n);
                for (auto s : kExchange) {
                    const auto expected = oracle::leibniz(m, exchange_sign(s));
                    const auto got = s_functional(m, s, counting.functional);
                    worst = std::max(worst, std::abs(got - expected) / std::abs(expected));
                }
            }
        }
        detail = "relative error vs permutation sum, N = 2..7";
        return worst;
    }));

    reports.push_back(run_suite("normalization", 1e-9, [&](std::string& detail) {
        std::mt19937_64 rng(options.seed + 1);
        double worst = 0.0;
        for (int trial = 0; trial < options.trials; ++trial) {
            const auto set = oracle::random_overlap_set(rng, 1 + trial % 6);
            for (auto s : kExchange) {
                const auto r = counting_statistics(set, s, counting);
                double weighted = 0.0;
                for (Eigen::Index k = 0; k < r.probabilities.size(); ++k) weighted += k * r.probabilities(k);
                worst = std::max({worst, std::abs(r.probabilities.sum() - 1.0), std::abs(weighted - r.mean)});
            }
        }
        detail = "|sum W - 1| and |n_T - sum n W|";
        return worst;
    }));

    reports.push_back(run_suite("generating-function", 1e-8, [&](std::string& detail) {
        std::mt19937_64 rng(options.seed + 2);
        double worst = 0.0;
        for (int trial = 0; trial < options.trials; ++trial) {
            const auto set = oracle::random_overlap_set(rng, 1 + trial % 6);
            for (auto s : kExchange) {
                const auto r = counting_statistics(set, s, counting);
                const auto interpolated = oracle::interpolated_probabilities(set, s, counting);
                worst = std::max(worst, (r.probabilities - interpolated).cwiseAbs().maxCoeff());
            }
        }
        detail = "row replacement vs G(alpha) at roots of unity";
        return worst;
    }));

    reports.push_back(run_suite("bunching", 1e-10, [&](std::string& detail) {
        std::mt19937_64 rng(options.seed + 3);
        double worst = 0.0;
        for (int trial = 0; trial < options.trials; ++trial) {
            const auto n = 2 + trial % 5;
            const auto set = oracle::random_overlap_set(rng, n, true);
            const double product = set.w.prod();
            const double boson = counting_statistics(set, ExchangeStatistics::boson, counting).probabilities(n);
            const double fermion = counting_statistics(set, ExchangeStatistics::fermion, counting).probabilities(n);
            worst = std::max({worst, product - boson, fermion - product});
        }
        detail = "violation of W+(N,N) >= prod w >= W-(N,N) on uncorrelated packets";
        return std::max(worst, 0.0);
    }));

    reports.push_back(run_suite("mean-invariance", 1e-9, [&](std::string& detail) {
        std::mt19937_64 rng(options.seed + 4);
        double worst = 0.0;
        for (int trial = 0; trial < options.trials; ++trial) {
            const auto set = oracle::random_overlap_set(rng, 1 + trial % 6, true);
            for (auto s : kExchange) {
                worst = std::max(worst, std::abs(mean_transmissions(set, s, counting) - set.w.sum()));
            }
        }
        detail = "|n_T - sum w| for I = identity";
        return worst;
    }));

    reports.push_back(run_suite("distinguishable-limit", 1e-4, [&](std::string& detail) {
        // Broad level, so the transmitted parts decorrelate within the delay.
        TrainConfig train;
        train.n_particles = 3;
        train.packet = GaussianAmplitude{1.0, 3.77};
        train.barrier = BarrierModel({{1.0, 0.5}});
        OverlapOptions overlap;
        overlap.quadrature.abs_tol = options.quadrature_tolerance;
        const auto set = build_overlap_set(build_train(train, 20.0), train.barrier, overlap);
        const auto baseline = dp_statistics(std::vector<double>(set.w.data(), set.w.data() + set.w.size()));
        double worst = 0.0;
        for (auto s : kExchange) {
            const auto r = counting_statistics(set, s, counting);
            worst = std::max(worst, (r.probabilities - baseline.probabilities).cwiseAbs().maxCoeff());
        }
        detail = "max |W - W_DP| at E0T = 20, broad resonance";
        return worst;
    }));

    reports.push_back(run_suite("permutation-invariance", 1e-10, [&](std::string& detail) {
        std::mt19937_64 rng(options.seed + 5);
        double worst = 0.0;
        for (int trial = 0; trial < options.trials; ++trial) {
            const auto n = 2 + trial % 5;
            const auto set = oracle::random_overlap_set(rng, n);
            Eigen::PermutationMatrix<Eigen::Dynamic> perm(n);
            perm.setIdentity();
            std::shuffle(perm.indices().data(), perm.indices().data() + n, rng);
            const auto shuffled = make_overlap_set(perm * set.I * perm.transpose(), perm * set.T * perm.transpose());
            for (auto s : kExchange) {
                const auto a = counting_statistics(set, s, counting).probabilities;
                const auto b = counting_statistics(shuffled, s, counting).probabilities;
                worst = std::max(worst, (a - b).cwiseAbs().maxCoeff());
            }
        }
        detail = "W under simultaneous row/column permutation";
        return worst;
    }));

    reports.push_back(run_suite("quadrature", std::max(10.0 * options.quadrature_tolerance, 1e-13),
                                [&](std::string& detail) {
        const auto train = single_resonance_train(1);
        OverlapOptions overlap;
        overlap.quadrature.abs_tol = options.quadrature_tolerance;
        try {
            const auto set = build_overlap_set(build_train(train, 0.0), train.barrier, overlap);
            std::ostringstream msg;
            msg << "w = " << std::setprecision(17) << set.w(0) << ", estimate " << set.quadrature_error << ", "
                << set.quadrature_panels << " panels";
            detail = msg.str();
            return std::abs(set.w(0) - kSingleResonanceW);
        } catch (const NumericalAccuracyError& e) {
            detail = std::string("quadrature did not converge: ") + e.what();
            return e.residual();
        }
    }));

    return reports;
}

void print_report(const std::vector<SuiteReport>& reports, std::ostream& out) {
    for (const auto& r : reports) {
        out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(24) << r.name << " worst "
            << std::scientific << std::setprecision(3) << r.worst_residual << " (limit " << r.threshold << ")  "
            << r.detail << '\n';
    }
    out << std::defaultfloat;
}

}  // namespace fcs
