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

#include "fracpair/comparison.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "fracpair/errors.hpp"

namespace fracpair {

RadialWindow default_window(const DensityModel& model, double a, int bins) {
  if (bins < 1) throw ValidationError("bin count must be >= 1");
  const double width = a / bins;
  switch (model.regime()) {
    case LimitClass::finite:
      return {model.repulsion_radius() + 2.0 * width, a - 2.0 * width};
    case LimitClass::zero:
      return {0.3, a - 2.0 * width};
    case LimitClass::infinite:
      break;
  }
  return {0.0, a};
}

std::vector<bool> window_mask(std::span<const double> edges, RadialWindow window,
                              std::span<const double> discontinuities) {
  if (edges.size() < 2) throw ValidationError("window mask needs at least two edges");
  const std::size_t bins = edges.size() - 1;
  std::vector<bool> mask(bins, false);
  const double eps = 1e-12 * std::max(1.0, edges.back());
  for (std::size_t i = 0; i < bins; ++i) {
    const double lo = edges[i];
    const double hi = edges[i + 1];
    if (lo < window.r_min - eps || hi > window.r_max + eps) continue;
    const double mid = 0.5 * (lo + hi);
    const double width = hi - lo;
    const bool near = std::any_of(discontinuities.begin(), discontinuities.end(),
                                  [&](double d) { return std::abs(mid - d) < width; });
    mask[i] = !near;
  }
  return mask;
}

namespace {

Discrepancy accumulate(std::span<const double> edges, std::span<const double> mass,
                       std::span<const double> reference, const std::vector<bool>& mask) {
  Discrepancy d;
  for (std::size_t i = 0; i < mass.size(); ++i) {
    if (!mask[i]) continue;
    const double diff = std::abs(mass[i] - reference[i]);
    d.l1 += diff;
    d.sup = std::max(d.sup, diff / (edges[i + 1] - edges[i]));
    d.empirical_mass += mass[i];
    d.reference_mass += reference[i];
    ++d.bins_used;
  }
  return d;
}

}  // namespace

Discrepancy radial_discrepancy(const RadialHistogram& hist, const DensityModel& model,
                               RadialWindow window) {
  const auto disc = model.discontinuity_radii(hist.edges.back());
  const auto mask = window_mask(hist.edges, window, disc);
  std::vector<double> exact(hist.bins(), 0.0);
  for (std::size_t i = 0; i < hist.bins(); ++i) {
    if (mask[i]) exact[i] = model.mass(hist.edges[i], hist.edges[i + 1]);
  }
  return accumulate(hist.edges, hist.mass, exact, mask);
}

Discrepancy histogram_distance(const RadialHistogram& a, const RadialHistogram& b,
                               RadialWindow window, std::span<const double> discontinuities) {
  if (a.edges != b.edges) throw ValidationError("histograms must share their edges");
  const auto mask = window_mask(a.edges, window, discontinuities);
  return accumulate(a.edges, a.mass, b.mass, mask);
}

ComparisonReport compare_convergence(const CorrelationConfig& base, std::span<const std::int64_t> ns,
                                     int bins, std::optional<RadialWindow> window) {
  if (ns.empty()) throw ValidationError("compare needs at least one N");
  const double a = base.support_radius;
  const DensityModel model =
      DensityModel::from_scaling(base.alpha, base.grid.basis, base.scaling, std::max(a, 1.0));
  ComparisonReport report;
  report.window = window.value_or(default_window(model, a, bins));
  const auto edges = uniform_edges(a, bins);

  std::vector<double> xs, ys;
  for (std::int64_t n : ns) {
    CorrelationConfig cfg = base;
    cfg.n = n;
    const auto start = std::chrono::steady_clock::now();
    const auto cloud = build_measure(cfg);
    const auto hist = radial_histogram(cloud, edges);
    const auto d = radial_discrepancy(hist, model, report.window);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    ComparisonRow row;
    row.n = n;
    row.l1 = d.l1;
    row.sup = d.sup;
    row.point_count = static_cast<std::int64_t>(cloud.points.size());
    row.window_mass = d.empirical_mass;
    row.seconds = elapsed.count();
    report.rows.push_back(row);
    xs.push_back(static_cast<double>(n));
    ys.push_back(d.l1);
  }
  report.slope = loglog_slope(xs, ys);
  return report;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ValidationError("slope inputs differ in length");
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0.0 && y[i] > 0.0) {
      lx.push_back(std::log(x[i]));
      ly.push_back(std::log(y[i]));
    }
  }
  if (lx.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  const auto n = static_cast<double>(lx.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  return sxx == 0.0 ? std::numeric_limits<double>::quiet_NaN() : sxy / sxx;
}

}  // namespace fracpair
