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

#ifndef FCS_CSV_HPP
#define FCS_CSV_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fcs/density.hpp"
#include "fcs/scan.hpp"

namespace fcs {

/// Shortest decimal text that parses back to exactly `value` ("nan", "inf" for non-finite values).
std::string format_double(double value);

/// Inverse of format_double; throws ParseError on malformed text.
double parse_double(std::string_view text);

/**
 * Scan table. Header `E0T,stat,n_mean,K,W0,...,WN`, then one row per grid
 * point and requested statistics, in grid order. Singular points carry "nan"
 * in every numeric column after `stat`. Rows end in '\n'.
 */
void write_scan_csv(const ScanResult& result, std::ostream& out);

/// write_scan_csv to a file; throws IoError when the file cannot be written.
void emit_csv(const ScanResult& result, const std::filesystem::path& path);

/// Header `x,boson,fermion,distinguishable`.
void write_density_csv(const DensityProfile& profile, std::ostream& out);
void emit_density_csv(const DensityProfile& profile, const std::filesystem::path& path);

/// Splits one CSV line on commas (no quoting; the emitted files never need it).
std::vector<std::string> split_csv_line(std::string_view line);

}  // namespace fcs

#endif
