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

#include <functional>
#include <span>
#include <vector>

#include "fracpair/pair_correlation.hpp"

namespace fracpair {

/// Bins (r_i, r_{i+1}], the innermost closed at r_0.
struct RadialHistogram {
  std::vector<double> edges;
  std::vector<double> mass;
  std::vector<double> density;  ///< mass / (pi (r_{i+1}^2 - r_i^2))

  std::size_t bins() const { return mass.size(); }
  double total_mass() const;
};

/// R x R cells over [-A, A]^2; cell (ix, iy) covers x in [-A + ix h, -A + (ix+1) h).
/// Points on the closing edge x = A or y = A belong to the last cell.
struct PlanarHistogram {
  double half_width = 0.0;
  int resolution = 0;
  std::vector<double> mass;  ///< row-major, index iy * R + ix
  std::vector<double> density;

  double cell_width() const { return 2.0 * half_width / resolution; }
  double cell_center(int index) const { return -half_width + (index + 0.5) * cell_width(); }
  double total_mass() const;
};

/// Edges 0, A/bins, ..., A.
std::vector<double> uniform_edges(double r_max, int bins);

RadialHistogram radial_histogram(const WeightedPointCloud& cloud, std::span<const double> edges);
PlanarHistogram planar_histogram(const WeightedPointCloud& cloud, double half_width, int resolution);

using TestFunction = std::function<double(Complex)>;

/// Sum of weight * f(z) over the cloud.
double evaluate(const WeightedPointCloud& cloud, const TestFunction& f);

/// (1 - (|z|/A)^2)^2 on D(0, A), 0 outside.
double bump(double a, Complex z);
TestFunction bump_function(double a);

}  // namespace fracpair
