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

#include "fracpair/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "fracpair/errors.hpp"

namespace fracpair {

double RadialHistogram::total_mass() const { return std::accumulate(mass.begin(), mass.end(), 0.0); }

double PlanarHistogram::total_mass() const { return std::accumulate(mass.begin(), mass.end(), 0.0); }

std::vector<double> uniform_edges(double r_max, int bins) {
  if (bins < 1) throw ValidationError("bin count must be >= 1");
  if (!(r_max > 0.0)) throw ValidationError("histogram radius must be > 0");
  std::vector<double> edges(static_cast<std::size_t>(bins) + 1);
  for (int i = 0; i <= bins; ++i) edges[static_cast<std::size_t>(i)] = r_max * i / bins;
  edges.back() = r_max;
  return edges;
}

RadialHistogram radial_histogram(const WeightedPointCloud& cloud, std::span<const double> edges) {
  if (edges.size() < 2) throw ValidationError("radial histogram needs at least two edges");
  if (!(edges.front() >= 0.0)) throw ValidationError("radial edges must be nonnegative");
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (!(edges[i] > edges[i - 1])) throw ValidationError("radial edges must be strictly increasing");
  }
  RadialHistogram h;
  h.edges.assign(edges.begin(), edges.end());
  const std::size_t bins = edges.size() - 1;
  std::vector<std::int64_t> counts(bins, 0);
  for (const Complex& z : cloud.points) {
    const double r = std::abs(z);
    if (r < edges.front() || r > edges.back()) continue;
    // First edge >= r closes the bin (r_{i}, r_{i+1}].
    auto it = std::lower_bound(edges.begin(), edges.end(), r);
    std::size_t bin = it == edges.begin() ? 0 : static_cast<std::size_t>(it - edges.begin()) - 1;
    ++counts[bin];
  }
  h.mass.resize(bins);
  h.density.resize(bins);
  for (std::size_t i = 0; i < bins; ++i) {
    h.mass[i] = cloud.weight * static_cast<double>(counts[i]);
    const double area = std::numbers::pi * (edges[i + 1] * edges[i + 1] - edges[i] * edges[i]);
    h.density[i] = h.mass[i] / area;
  }
  return h;
}

PlanarHistogram planar_histogram(const WeightedPointCloud& cloud, double half_width, int resolution) {
  if (!(half_width > 0.0)) throw ValidationError("planar half width must be > 0");
  if (resolution < 1) throw ValidationError("planar resolution must be >= 1");
  PlanarHistogram h;
  h.half_width = half_width;
  h.resolution = resolution;
  const auto cells = static_cast<std::size_t>(resolution) * static_cast<std::size_t>(resolution);
  std::vector<std::int64_t> counts(cells, 0);
  const double w = h.cell_width();
  auto index = [&](double x) {
    const auto i = static_cast<int>(std::floor((x + half_width) / w));
    return std::clamp(i, 0, resolution - 1);
  };
  for (const Complex& z : cloud.points) {
    if (std::abs(z.real()) > half_width || std::abs(z.imag()) > half_width) continue;
    ++counts[static_cast<std::size_t>(index(z.imag())) * static_cast<std::size_t>(resolution) +
             static_cast<std::size_t>(index(z.real()))];
  }
  h.mass.resize(cells);
  h.density.resize(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    h.mass[c] = cloud.weight * static_cast<double>(counts[c]);
    h.density[c] = h.mass[c] / (w * w);
  }
  return h;
}

double evaluate(const WeightedPointCloud& cloud, const TestFunction& f) {
  double sum = 0.0;
  for (const Complex& z : cloud.points) sum += f(z);
  return cloud.weight * sum;
}

double bump(double a, Complex z) {
  const double t = std::norm(z) / (a * a);
  if (t > 1.0) return 0.0;
  return (1.0 - t) * (1.0 - t);
}

TestFunction bump_function(double a) {
  if (!(a > 0.0)) throw ValidationError("bump radius must be > 0");
  return [a](Complex z) { return bump(a, z); };
}

}  // namespace fracpair
