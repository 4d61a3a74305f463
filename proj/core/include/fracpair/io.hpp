/*
 * Copyright 2026 The fracpair Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fracpair/comparison.hpp"
#include "fracpair/histogram.hpp"
#include "fracpair/limit_density.hpp"
#include "fracpair/pair_correlation.hpp"

namespace fracpair {

/// 17 significant digits; parses back to the same double.
std::string format_double(double value);
double parse_double(std::string_view text);

/// Column-named table of text cells.  Numeric cells hold format_double output.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::initializer_list<double> values);
  void add_row(std::vector<std::string> cells);
  std::size_t column(std::string_view name) const;
  std::vector<double> numbers(std::string_view name) const;
};

/// Ordered key/value pairs describing a run.
using Manifest = std::vector<std::pair<std::string, std::string>>;

/// Comma-separated, header row, LF line endings.  Cells containing a comma or
/// a double quote are quoted.
void write_csv(const std::filesystem::path& path, const Table& table);
Table read_csv(const std::filesystem::path& path);

/// One object {"manifest": {...}, "rows": [{column: value, ...}, ...]}.
/// Cells that parse as finite numbers are written as JSON numbers.
void write_json(const std::filesystem::path& path, const Manifest& manifest, const Table& table);

struct JsonDocument {
  Manifest manifest;
  Table table;
};
JsonDocument read_json(const std::filesystem::path& path);

std::string to_csv_string(const Table& table);
std::string to_json_string(const Manifest& manifest, const Table& table);

Table cloud_table(const WeightedPointCloud& cloud);              // re, im, weight
Table radial_table(const RadialHistogram& hist);                // r_lo, r_hi, mass, density
Table planar_table(const PlanarHistogram& hist);                // cell_x, cell_y, mass, density
Table comparison_table(const ComparisonReport& report);         // N, l1, sup, point_count, window_mass, seconds

/// r, rho, rho_radial on the bin midpoints of [0, a], plus the left and right
/// values at every discontinuity radius <= a, sorted by r.
Table density_table(const DensityModel& model, double a, int bins);

WeightedPointCloud cloud_from_table(const Table& table);
RadialHistogram radial_from_table(const Table& table);

}  // namespace fracpair
