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
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "fcs/config.hpp"
#include "fcs/csv.hpp"
#include "fcs/errors.hpp"
#include "fcs/presets.hpp"

using fcs::ExchangeStatistics;

namespace {

std::string parse_error_path(const std::string& text) {
    try {
        fcs::parse_config(text);
    } catch (const fcs::ParseError& e) {
        return e.key_path();
    }
    return "<no error>";
}

}  // namespace

TEST_CASE("figure presets") {
    const auto fig2a = fcs::parse_config(R"({"preset": "fig2a"})");
    CHECK(fig2a.preset == "fig2a");
    CHECK(fig2a.train.n_particles == 4);
    const auto& g = std::get<fcs::GaussianAmplitude>(fig2a.train.packet);
    CHECK(g.p0 * g.sigma == doctest::Approx(3.77));
    REQUIRE(fig2a.train.barrier.resonances().size() == 1);
    CHECK(fig2a.train.barrier.resonances()[0] == fcs::Resonance{0.41, 0.0087});

    const auto fig2b = fcs::preset_config("fig2b");
    REQUIRE(fig2b.train.barrier.resonances().size() == 2);
    CHECK(fig2b.train.barrier.resonances()[1] == fcs::Resonance{3.82, 0.28});
    CHECK(fig2b.train.barrier.clamp_to_unity());

    CHECK(fcs::preset_config("fig6").particle_counts == std::vector<std::size_t>{2, 4, 6});
    for (const auto& name : fcs::preset_names()) {
        if (fcs::figure_preset(name)) CHECK_NOTHROW(fcs::preset_config(name));
    }
    CHECK_THROWS_AS(fcs::preset_config("fig9"), fcs::ValidationError);

    const auto override = fcs::parse_config(R"({"preset": "fig2a", "particles": 6, "statistics": ["fermion"]})");
    CHECK(override.train.n_particles == 6);
    CHECK(override.train.statistics == std::vector<ExchangeStatistics>{ExchangeStatistics::fermion});
}

TEST_CASE("schema errors") {
    try {
        fcs::parse_config("{}");
        FAIL("expected a parse error");
    } catch (const fcs::ParseError& e) {
        const std::string what = e.what();
        CHECK(what.find("particles") != std::string::npos);
        CHECK(what.find("packet") != std::string::npos);
        CHECK(what.find("barrier") != std::string::npos);
    }
    CHECK_THROWS_AS(fcs::parse_config(""), fcs::ParseError);
    CHECK_THROWS_AS(fcs::parse_config("{not json"), fcs::ParseError);
    CHECK(parse_error_path(R"({"preset": "fig2a", "colour": 1})") == "colour");
    CHECK(parse_error_path(R"({"preset": "fig2a", "grid": {"start": 0.1, "step": 2}})") == "grid.step");
    CHECK(parse_error_path(R"({"preset": "fig2a", "barrier": {"resonances": [{"energy": 1.0}]}})") ==
          "barrier.resonances[0].width");
    CHECK(parse_error_path(R"({"preset": "fig2a", "statistics": ["anyon"]})") == "statistics");
}

TEST_CASE("physics violations") {
    try {
        fcs::parse_config(R"({"particles": 2, "packet": {"type": "gaussian", "p0_sigma": 3},
                              "barrier": {"resonances": [{"energy": 0.5, "width": 0.1},
                                                         {"energy": 1.0, "width": -0.01}]}})");
        FAIL("expected a validation error");
    } catch (const fcs::ValidationError& e) {
        CHECK(std::string(e.what()).find("resonance 1") != std::string::npos);
    }
    CHECK_THROWS_AS(fcs::parse_config(R"({"preset": "fig2a", "particles": 0})"), fcs::ValidationError);
    CHECK_THROWS_AS(fcs::parse_config(R"({"preset": "fig2a", "tolerance": {"quadrature": 0}})"), fcs::ValidationError);
}

TEST_CASE("round trip") {
    for (const auto& name : fcs::preset_names()) {
        CAPTURE(name);
        if (!fcs::figure_preset(name)) continue;
        const auto config = fcs::preset_config(name);
        CHECK(fcs::config_from_json(fcs::to_json(config)) == config);
    }
    const auto custom = fcs::parse_config(R"({
        "particles": [3], "packet": {"type": "gaussian", "p0_sigma": 4.5},
        "barrier": {"resonances": [{"energy": 0.8, "width": 0.05}], "clamp_to_unity": false},
        "spacing": {"explicit": [0, 1, 2.5]}, "grid": {"start": 0.1, "stop": 2, "points": 5},
        "statistics": ["boson", "distinguishable"], "tolerance": {"quadrature": 1e-11, "singular": 1e-13},
        "output": "custom.csv"})");
    CHECK(custom.particle_counts == std::vector<std::size_t>{3});
    CHECK(fcs::parse_config(R"({"preset": "fig2a", "particles": [2, 6]})").particle_counts == std::vector<std::size_t>{2, 6});
    CHECK_FALSE(custom.train.barrier.clamp_to_unity());
    CHECK(fcs::config_from_json(fcs::to_json(custom)) == custom);
    CHECK(fcs::scan_options(custom).overlap.quadrature.abs_tol == 1e-11);
    CHECK(fcs::scan_options(custom).counting.singular_threshold == 1e-13);
}

TEST_CASE("number formatting is exact") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = unit(rng) * std::pow(10.0, 20.0 * unit(rng));
        CHECK(fcs::parse_double(fcs::format_double(x)) == x);
    }
    CHECK(fcs::format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
    CHECK(std::isnan(fcs::parse_double("nan")));
    CHECK_THROWS_AS(fcs::parse_double("1.5x"), fcs::ParseError);
}

TEST_CASE("scan csv layout") {
    auto train = fcs::single_resonance_train(2);
    const std::vector<double> grid{0.3, 0.6, 0.9};
    const auto result = fcs::run_scan(train, grid);
    std::ostringstream out;
    fcs::write_scan_csv(result, out);
    std::istringstream in(out.str());
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    REQUIRE(lines.size() == 10);
    CHECK(lines[0] == "E0T,stat,n_mean,K,W0,W1,W2");

    const auto cells = fcs::split_csv_line(lines[1]);
    REQUIRE(cells.size() == 7);
    CHECK(fcs::parse_double(cells[0]) == 0.3);
    const auto* outcome = result.rows[0].find(fcs::parse_statistics(cells[1]).value());
    REQUIRE(outcome);
    CHECK(fcs::parse_double(cells[2]) == outcome->result->mean);
    for (int n = 0; n <= 2; ++n) CHECK(fcs::parse_double(cells[4 + n]) == outcome->result->probabilities(n));

    CHECK_THROWS_AS(fcs::emit_csv(result, "/nonexistent-dir/out.csv"), fcs::IoError);
}
