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

#include "fcs/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>

#include "fcs/errors.hpp"

namespace fcs {

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    std::array<char, 32> buffer{};
    const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    if (ec != std::errc{}) throw IoError("format_double: conversion failed");
    return std::string(buffer.data(), end);
}

double parse_double(std::string_view text) {
    if (text == "nan") return std::nan("");
    if (text == "inf") return HUGE_VAL;
    if (text == "-inf") return -HUGE_VAL;
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size()) {
        throw ParseError("", "not a number: '" + std::string(text) + "'");
    }
    return value;
}

void write_scan_csv(const ScanResult& result, std::ostream& out) {
    const auto n = result.config.n_particles;
    out << "E0T,stat,n_mean,K";
    for (std::size_t k = 0; k <= n; ++k) out << ",W" << k;
    out << '\n';
    for (const auto& row : result.rows) {
        for (const auto& outcome : row.outcomes) {
            out << format_double(row.e0_spacing) << ',' << to_string(outcome.statistics);
            if (outcome.result) {
                const auto& r = *outcome.result;
                out << ',' << format_double(r.mean) << ',' << format_double(r.normalization);
                for (Eigen::Index k = 0; k < r.probabilities.size(); ++k) out << ',' << format_double(r.probabilities(k));
            } else {
                for (std::size_t k = 0; k < n + 3; ++k) out << ",nan";
            }
            out << '\n';
        }
    }
}

void emit_csv(const ScanResult& result, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    write_scan_csv(result, out);
    out.flush();
    if (!out) throw IoError("write to '" + path.string() + "' failed");
}

void write_density_csv(const DensityProfile& profile, std::ostream& out) {
    out << "x,boson,fermion,distinguishable\n";
    for (std::size_t i = 0; i < profile.x.size(); ++i) {
        out << format_double(profile.x[i]) << ',' << format_double(profile.boson[i]) << ','
            << format_double(profile.fermion[i]) << ',' << format_double(profile.distinguishable[i]) << '\n';
    }
}

void emit_density_csv(const DensityProfile& profile, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    write_density_csv(profile, out);
    out.flush();
    if (!out) throw IoError("write to '" + path.string() + "' failed");
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.emplace_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

}  // namespace fcs
