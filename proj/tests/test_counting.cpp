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


#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <doctest.h>

#include "fcs/counting.hpp"
#include "fcs/errors.hpp"
#include "fcs/oracles.hpp"
#include "fcs/presets.hpp"
#include "fcs/scan.hpp"

using cd = std::complex<double>;
using fcs::ExchangeStatistics;

namespace {

constexpr ExchangeStatistics kExchange[] = {ExchangeStatistics::boson, ExchangeStatistics::fermion};

double mean_from(const Eigen::VectorXd& w) {
    double mean = 0.0;
    for (Eigen::Index n = 0; n < w.size(); ++n) mean += static_cast<double>(n) * w(n);
    return mean;
}

}  // namespace

TEST_CASE("two particles match the closed forms") {
    std::mt19937_64 rng(11);
    std::vector<fcs::OverlapSet> sets;
    for (int i = 0; i < 20; ++i) sets.push_back(fcs::oracle::random_overlap_set(rng, 2));
    for (const char* name : {"fig2a", "fig2b"}) {
        const auto preset = *fcs::figure_preset(name);
        auto train = preset.train;
        train.n_particles = 2;
        sets.push_back(fcs::build_overlap_set(fcs::build_train(train, 0.3), train.barrier));
    }
    for (const auto& set : sets) {
        for (auto stats : kExchange) {
            const auto result = fcs::counting_statistics(set, stats);
            const auto closed = fcs::two_particle_closed_form(set, stats);
            CHECK(std::abs(result.probabilities(2) - closed.w22) < 1e-10);
            CHECK(std::abs(result.probabilities(1) - closed.w12) < 1e-10);
            CHECK(std::abs(result.mean - closed.mean) < 1e-10);
        }
    }
}

TEST_CASE("diagonal overlaps give the binomial law") {
    const double w = 0.37;
    for (Eigen::Index n = 1; n <= 6; ++n) {
        const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(n, n);
        const auto set = fcs::make_overlap_set(I, w * I);
        for (auto stats : kExchange) {
            const auto result = fcs::counting_statistics(set, stats);
            for (Eigen::Index k = 0; k <= n; ++k) {
                CHECK(result.probabilities(k) ==
                      doctest::Approx(fcs::oracle::binomial_probability(static_cast<std::size_t>(n),
                                                                        static_cast<std::size_t>(k), w))
                          .epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("generating function") {
    std::mt19937_64 rng(5);
    for (Eigen::Index n = 1; n <= 6; ++n) {
        const auto set = fcs::oracle::random_overlap_set(rng, n);
        for (auto stats : kExchange) {
            const auto result = fcs::counting_statistics(set, stats);
            CHECK(std::abs(fcs::generating_function(set, stats, 1.0) - 1.0) < 1e-12);
            CHECK(std::abs(fcs::generating_function(set, stats, 0.0) - result.probabilities(0)) < 1e-12);
            const auto interpolated = fcs::oracle::interpolated_probabilities(set, stats);
            CHECK((interpolated - result.probabilities).cwiseAbs().maxCoeff() < 1e-10);
        }
    }
}

TEST_CASE("normalization and mean on random sets") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const auto set = fcs::oracle::random_overlap_set(rng, 1 + trial % 6);
        for (auto stats : kExchange) {
            const auto result = fcs::counting_statistics(set, stats);
            CHECK(std::abs(result.probabilities.sum() - 1.0) < 1e-10);
            CHECK(std::abs(result.mean - mean_from(result.probabilities)) < 1e-10);
            CHECK(std::abs(fcs::mean_transmissions(set, stats) - result.mean) < 1e-12);
            CHECK(result.probabilities.minCoeff() > -1e-12);
        }
    }
}

TEST_CASE("bunching of uncorrelated packets") {
    // With I = 1 the all-transmitted channel is per(T) or det(T), bounded by prod T_nn.
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const Eigen::Index n = 2 + trial % 5;
        const auto set = fcs::oracle::random_overlap_set(rng, n, true);
        const double product = set.w.prod();
        CHECK(fcs::counting_statistics(set, ExchangeStatistics::boson).probabilities(n) >= product - 1e-12);
        CHECK(fcs::counting_statistics(set, ExchangeStatistics::fermion).probabilities(n) <= product + 1e-12);
    }
}

TEST_CASE("uncorrelated packets keep the single-particle mean") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto set = fcs::oracle::random_overlap_set(rng, 1 + trial % 5, true);
        for (auto stats : kExchange) CHECK(std::abs(fcs::counting_statistics(set, stats).mean - set.w.sum()) < 1e-12);
    }
}

TEST_CASE("distinguishable particles") {
    const std::vector<double> none(4, 0.0);
    CHECK(fcs::dp_statistics(none).probabilities(0) == 1.0);

    const std::vector<double> pair{0.2, 0.7};
    CHECK(fcs::dp_statistics(pair).probabilities(1) == doctest::Approx(0.2 * 0.3 + 0.7 * 0.8).epsilon(1e-15));

    const std::vector<double> equal(4, 0.3);
    const auto binomial = fcs::dp_statistics(equal);
    CHECK(binomial.probabilities(2) == doctest::Approx(0.2646).epsilon(1e-14));
    CHECK(binomial.mean == doctest::Approx(1.2));

    const std::vector<double> mixed{0.1, 0.5, 0.9, 0.25, 0.6};
    const auto poisson = fcs::dp_statistics(mixed);
    CHECK(poisson.probabilities.sum() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(poisson.probabilities(5) == doctest::Approx(0.1 * 0.5 * 0.9 * 0.25 * 0.6).epsilon(1e-14));
    CHECK(poisson.mean == doctest::Approx(2.35).epsilon(1e-14));

    const std::vector<double> bad{0.5, 1.2};
    CHECK_THROWS_AS(fcs::dp_statistics(bad), fcs::ValidationError);

    std::mt19937_64 rng(8);
    const auto set = fcs::oracle::random_overlap_set(rng, 4);
    const std::vector<double> w(set.w.data(), set.w.data() + set.w.size());
    const auto dispatched = fcs::counting_statistics(set, ExchangeStatistics::distinguishable);
    CHECK((dispatched.probabilities - fcs::dp_statistics(w).probabilities).norm() == 0.0);
}

TEST_CASE("coincident fermions are singular") {
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Ones(2, 2);
    const auto set = fcs::make_overlap_set(I, 0.4 * I);
    try {
        fcs::counting_statistics(set, ExchangeStatistics::fermion);
        FAIL("expected a singular normalization");
    } catch (const fcs::SingularNormalizationError& e) {
        CHECK(std::abs(e.smallest_eigenvalue()) < 1e-12);
        CHECK(std::abs(e.normalization()) < 1e-12);
    }
    const auto boson = fcs::counting_statistics(set, ExchangeStatistics::boson);
    CHECK(boson.normalization == doctest::Approx(2.0));
    CHECK(boson.probabilities(2) == doctest::Approx(0.16));
}

TEST_CASE("malformed inputs") {
    fcs::OverlapSet set;
    set.I = Eigen::MatrixXcd::Identity(2, 2);
    set.T = Eigen::MatrixXcd::Identity(2, 2) * 0.5;
    set.T(0, 0) = cd{0.5, 0.01};
    set.R = set.I - set.T;
    set.w = set.T.diagonal().real();
    CHECK_THROWS_AS(fcs::counting_statistics(set, ExchangeStatistics::boson), fcs::NumericalAccuracyError);

    const Eigen::MatrixXcd big = Eigen::MatrixXcd::Identity(17, 17);
    CHECK_THROWS_AS(fcs::counting_statistics(fcs::make_overlap_set(big, 0.5 * big), ExchangeStatistics::boson),
                    fcs::CapacityError);

    const auto pair = fcs::make_overlap_set(Eigen::MatrixXcd::Identity(3, 3), Eigen::MatrixXcd::Zero(3, 3));
    CHECK_THROWS_AS(fcs::two_particle_closed_form(pair, ExchangeStatistics::boson), fcs::ValidationError);
}
