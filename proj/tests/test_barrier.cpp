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
#include <vector>

#include <doctest.h>

#include "fcs/barrier.hpp"
#include "fcs/errors.hpp"

using fcs::BarrierModel;
using fcs::Resonance;

TEST_CASE("single lorentzian") {
    const BarrierModel model({{0.41, 0.0087}});
    const double p_res = std::sqrt(2.0 * 0.41 * 0.5);
    CHECK(fcs::transmission_probability(model, p_res) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fcs::transmission_probability(model, -p_res) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(model.transmission_at_energy(0.41 + 0.0087) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(model.transmission_at_energy(0.41 - 0.0087) == doctest::Approx(0.5).epsilon(1e-12));
    const auto momenta = model.resonance_momenta();
    REQUIRE(momenta.size() == 2);

    double previous = 1.0;
    for (double e = 0.41; e < 3.0; e += 0.01) {
        const double t = model.transmission_at_energy(e);
        CHECK(t <= previous);
        CHECK(t >= 0.0);
        previous = t;
    }
}

TEST_CASE("two overlapping resonances and the clamp") {
    const std::vector<Resonance> levels{{0.95, 0.038}, {3.82, 0.28}};
    const BarrierModel raw(levels, false);
    const double expected = 1.0 + 0.28 * 0.28 / ((0.95 - 3.82) * (0.95 - 3.82) + 0.28 * 0.28);
    CHECK(raw.transmission_at_energy(0.95) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(raw.transmission_at_energy(0.95) > 1.0);

    const BarrierModel clamped(levels, true);
    CHECK(clamped.transmission_at_energy(0.95) == 1.0);
    CHECK(clamped.transmission_at_energy(2.0) == doctest::Approx(raw.transmission_at_energy(2.0)));
}

TEST_CASE("barrier validation") {
    CHECK_THROWS_AS(BarrierModel({}), fcs::ValidationError);
    CHECK_THROWS_AS(BarrierModel({{1.0, 0.0}}), fcs::ValidationError);
    CHECK_THROWS_AS(BarrierModel({{2.0, 0.1}, {1.0, 0.1}}), fcs::ValidationError);
    try {
        BarrierModel({{1.0, 0.1}, {2.0, -0.01}});
        FAIL("expected a validation error");
    } catch (const fcs::ValidationError& e) {
        CHECK(std::string(e.what()).find('1') != std::string::npos);
    }
}
