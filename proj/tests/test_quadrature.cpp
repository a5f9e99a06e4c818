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
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "fcs/quadrature.hpp"

using fcs::integrate;

TEST_CASE("polynomials are exact on a single panel") {
    const std::vector<double> bounds{0.0, 2.0};
    auto result = integrate([](double x, std::span<std::complex<double>> out) {
        out[0] = x * x * x;
        out[1] = {0.0, x};
    }, 2, bounds);
    CHECK(result.converged);
    CHECK(result.values[0].real() == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(result.values[1].imag() == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(result.panels == 1);
}

TEST_CASE("gaussian and oscillatory integrands reach the tolerance") {
    const std::vector<double> bounds{-12.0, 12.0};
    fcs::QuadratureOptions options;
    options.abs_tol = 1e-13;
    auto result = integrate([](double x, std::span<std::complex<double>> out) {
        out[0] = std::exp(-x * x);
        out[1] = std::exp(-x * x) * std::polar(1.0, 3.0 * x);
    }, 2, bounds, options);
    REQUIRE(result.converged);
    CHECK(std::abs(result.values[0] - std::sqrt(std::numbers::pi)) < 1e-13);
    CHECK(std::abs(result.values[1] - std::sqrt(std::numbers::pi) * std::exp(-2.25)) < 1e-13);
    CHECK(result.error <= options.abs_tol);
}

TEST_CASE("a narrow lorentzian is resolved from a coarse start") {
    const double gamma = 1e-3;
    const std::vector<double> bounds{-1.0, 1.0};
    auto result = integrate([&](double x, std::span<std::complex<double>> out) {
        out[0] = gamma / (x * x + gamma * gamma);
    }, 1, bounds);
    CHECK(result.converged);
    CHECK(result.values[0].real() == doctest::Approx(2.0 * std::atan(1.0 / gamma)).epsilon(1e-11));
}

TEST_CASE("panel budget exhaustion is reported as non-convergence") {
    const std::vector<double> bounds{0.0, 1.0};
    fcs::QuadratureOptions options;
    options.max_panels = 4;
    auto result = integrate([](double x, std::span<std::complex<double>> out) {
        out[0] = std::sin(400.0 * x);
    }, 1, bounds, options);
    CHECK_FALSE(result.converged);
    CHECK(result.error > options.abs_tol);
}

TEST_CASE("plan_panels honours forced points and the local width") {
    auto plan = fcs::plan_panels(0.0, 1.0, {0.3, 0.7, 2.0}, [](double x) { return x < 0.5 ? 0.05 : 0.25; });
    REQUIRE(plan.front() == 0.0);
    REQUIRE(plan.back() == 1.0);
    bool saw_03 = false, saw_07 = false;
    for (std::size_t i = 0; i + 1 < plan.size(); ++i) {
        CHECK(plan[i + 1] > plan[i]);
        CHECK(plan[i + 1] - plan[i] <= 0.25 + 1e-12);
    }
    for (double b : plan) {
        saw_03 = saw_03 || b == 0.3;
        saw_07 = saw_07 || b == 0.7;
    }
    CHECK(saw_03);
    CHECK(saw_07);
    CHECK_THROWS_AS(fcs::plan_panels(0.0, 1.0, {}, [](double) { return 1e-6; }, 100), std::length_error);
}
