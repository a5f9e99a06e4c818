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
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "fcs/errors.hpp"
#include "fcs/overlaps.hpp"
#include "fcs/presets.hpp"
#include "fcs/scan.hpp"

using cd = std::complex<double>;

namespace {

// Fine-grid references for the single-resonance train (p0 sigma = 3.77, level
// 0.41 E0 with half-width 0.0087 E0); see tests/oracle/reference_values.py.
constexpr double kW = 0.012681424455291783;
const cd kI12Close{0.9982048291275886, -0.053470382836354044};
const cd kT12Close{0.012678532670440272, -0.00026647573167520461};
const cd kI12Far{0.88936826120738561, -0.40449763689359568};

fcs::OverlapSet single_resonance_set(std::size_t n, double e0_spacing) {
    const auto train = fcs::single_resonance_train(n);
    return fcs::build_overlap_set(fcs::build_train(train, e0_spacing), train.barrier);
}

}  // namespace

TEST_CASE("one packet") {
    const auto set = single_resonance_set(1, 0.3);
    REQUIRE(set.size() == 1);
    CHECK(std::abs(set.I(0, 0) - 1.0) < 1e-12);
    CHECK(std::abs(set.T(0, 0) - kW) < 1e-12);
    CHECK(std::abs(set.R(0, 0) - (1.0 - kW)) < 1e-12);
    CHECK(set.w(0) == doctest::Approx(kW).epsilon(1e-10));
}

TEST_CASE("two packets against the fine-grid reference") {
    const auto set = single_resonance_set(2, 0.05);
    CHECK(std::abs(set.I(0, 1) - kI12Close) < 1e-11);
    CHECK(std::abs(set.T(0, 1) - kT12Close) < 1e-11);
    CHECK(std::abs(set.I(1, 0) - std::conj(kI12Close)) < 1e-11);
    CHECK(std::abs(set.T(1, 1) - kW) < 1e-11);
    CHECK((set.R - (set.I - set.T)).norm() < 1e-15);
    CHECK(set.hermiticity_residual < 1e-12);

    const auto far = single_resonance_set(2, 0.4);
    CHECK(std::abs(far.I(0, 1) - kI12Far) < 1e-11);
}

TEST_CASE("transparent and opaque stubs") {
    const auto train = fcs::build_train(fcs::single_resonance_train(3), 0.2);
    const fcs::TransmissionProfile transparent{[](double) { return 1.0; }, {}};
    const fcs::TransmissionProfile opaque{[](double) { return 0.0; }, {}};
    const auto open = fcs::build_overlap_set(train, transparent);
    CHECK((open.T - open.I).norm() < 1e-12);
    CHECK(open.R.norm() < 1e-12);
    CHECK(std::abs(fcs::overlap_T(train[0], train[2], transparent) - fcs::overlap_I(train[0], train[2])) < 1e-12);
    const auto closed = fcs::build_overlap_set(train, opaque);
    CHECK(closed.T.norm() == 0.0);
    CHECK((closed.R - closed.I).norm() == 0.0);
}

TEST_CASE("gram structure of an equally spaced train") {
    for (const char* name : {"fig2a", "fig2b"}) {
        CAPTURE(name);
        const auto preset = *fcs::figure_preset(name);
        auto train = preset.train;
        train.n_particles = 4;
        const auto set = fcs::build_overlap_set(fcs::build_train(train, 0.3), train.barrier);
        for (Eigen::Index k = 0; k < 4; ++k) {
            CHECK(std::abs(set.I(k, k) - 1.0) < 1e-12);
            CHECK(set.w(k) >= 0.0);
            CHECK(set.w(k) <= 1.0);
        }
        // Equal spacing: entries depend on m - n only.
        for (Eigen::Index m = 0; m + 1 < 4; ++m) {
            CHECK(std::abs(set.I(m, m + 1) - set.I(0, 1)) < 1e-12);
            CHECK(std::abs(set.T(m, m + 1) - set.T(0, 1)) < 1e-12);
        }
        CHECK(fcs::smallest_eigenvalue(set.I) > -1e-12);
        CHECK(fcs::smallest_eigenvalue(set.T) > -1e-12);
        CHECK(fcs::smallest_eigenvalue(set.R) > -1e-12);
        for (Eigen::Index m = 0; m < 4; ++m)
            for (Eigen::Index n = 0; n < 4; ++n) CHECK(std::norm(set.T(m, n)) <= set.w(m) * set.w(n) + 1e-14);
    }
}

TEST_CASE("overlaps decay with the emission delay") {
    double previous_i = 1.0, previous_t = kW;
    for (double spacing : {1.0, 2.0, 4.0}) {
        CAPTURE(spacing);
        const auto set = single_resonance_set(2, spacing);
        CHECK(std::abs(set.I(0, 1)) < previous_i);
        CHECK(std::abs(set.T(0, 1)) < previous_t);
        previous_i = std::abs(set.I(0, 1));
        previous_t = std::abs(set.T(0, 1));
    }
}

TEST_CASE("failures") {
    const auto train = fcs::single_resonance_train(2);
    fcs::OverlapOptions starved;
    starved.quadrature.abs_tol = 1e-30;
    starved.quadrature.max_panels = 2000;
    try {
        fcs::build_overlap_set(fcs::build_train(train, 0.1), train.barrier, starved);
        FAIL("expected a numerical accuracy error");
    } catch (const fcs::NumericalAccuracyError& e) {
        CHECK(e.residual() > 0.0);
        CHECK(std::string(e.what()).find("worst entry") != std::string::npos);
    }
    CHECK_THROWS_AS(fcs::make_overlap_set(Eigen::MatrixXcd::Identity(2, 2), Eigen::MatrixXcd::Identity(3, 3)),
                    fcs::ValidationError);
}

TEST_CASE("csv dump") {
    const auto set = single_resonance_set(2, 0.05);
    std::ostringstream out;
    fcs::write_overlap_csv(set, out);
    const std::string text = out.str();
    CHECK(text.find("# I") != std::string::npos);
    CHECK(text.find("# T") != std::string::npos);
    CHECK(text.find("# R") != std::string::npos);
}
