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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fracpair/histogram.hpp"
#include "fracpair/limit_density.hpp"
#include "fracpair/pair_correlation.hpp"

namespace fracpair {

struct RadialWindow {
  double r_min = 0.0;
  double r_max = 0.0;
};

/// [repulsion + 2 bins, A - 2 bins] in the finite regime, [0.3, A - 2 bins]
/// in the zero regime, [0, A] otherwise.
RadialWindow default_window(const DensityModel& model, double a, int bins);

/// Bins lying inside the window whose midpoint is more than one bin width
/// away from every discontinuity radius.
std::vector<bool> window_mask(std::span<const double> edges, RadialWindow window,
                              std::span<const double> discontinuities);

struct Discrepancy {
  double l1 = 0.0;   ///< sum over used bins of |mass - reference mass|
  double sup = 0.0;  ///< max over used bins of |mass - reference mass| / bin width
  double empirical_mass = 0.0;
  double reference_mass = 0.0;
  int bins_used = 0;
};

/// Empirical bin masses against the exact bin masses of the limit density.
Discrepancy radial_discrepancy(const RadialHistogram& hist, const DensityModel& model,
                               RadialWindow window);

/// Two histograms on the same edges; b is the reference.
Discrepancy histogram_distance(const RadialHistogram& a, const RadialHistogram& b,
                               RadialWindow window, std::span<const double> discontinuities);

struct ComparisonRow {
  std::int64_t n = 0;
  double l1 = 0.0;
  double sup = 0.0;
  std::int64_t point_count = 0;
  double window_mass = 0.0;
  double seconds = 0.0;
};

struct ComparisonReport {
  RadialWindow window;
  std::vector<ComparisonRow> rows;
  double slope = 0.0;  ///< least-squares slope of log l1 against log N
};

/// Builds the measure for each N in ns and compares it with the limit
/// density over the window (default_window when none is given).
ComparisonReport compare_convergence(const CorrelationConfig& base, std::span<const std::int64_t> ns,
                                     int bins, std::optional<RadialWindow> window = std::nullopt);

/// Least-squares slope of log y on log x over the pairs with x, y > 0;
/// NaN when fewer than two such pairs exist.
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace fracpair
