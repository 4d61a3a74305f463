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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "fracpair/comparison.hpp"
#include "fracpair/errors.hpp"

using namespace fracpair;

namespace {

DensityModel exotic() { return DensityModel(1.0 / 3.0, LatticeBasis{}, LimitClass::finite, 1.0, 2.0); }

CorrelationConfig exotic_config() {
  CorrelationConfig c;
  c.alpha = 1.0 / 3.0;
  c.grid = gaussian_integers();
  c.n_second = 3;
  c.scaling = ScalingRegime::power_law(2.0 / 3.0);
  c.support_radius = 1.5;
  return c;
}

}  // namespace

TEST(Window, defaults) {
  const auto w = default_window(exotic(), 1.5, 60);
  EXPECT_NEAR(w.r_min, 1.0 / 3.0 + 0.05, 1e-12);
  EXPECT_NEAR(w.r_max, 1.45, 1e-12);
  const auto z = default_window(DensityModel(0.5, LatticeBasis{}, LimitClass::zero), 1.5, 60);
  EXPECT_NEAR(z.r_min, 0.3, 1e-12);
  const auto i = default_window(DensityModel(0.5, LatticeBasis{}, LimitClass::infinite), 1.5, 60);
  EXPECT_EQ(i.r_min, 0.0);
  EXPECT_EQ(i.r_max, 1.5);
}

TEST(Window, mask_excludes_discontinuities) {
  const auto edges = uniform_edges(1.0, 10);
  const std::vector<double> disc{0.5};
  const auto mask = window_mask(edges, {0.1, 0.9}, disc);
  ASSERT_EQ(mask.size(), 10u);
  const std::vector<bool> want{false, true, true, true, false, false, true, true, true, false};
  EXPECT_EQ(mask, want);
}

TEST(Discrepancy, exact_masses_give_zero) {
  const auto model = exotic();
  const auto edges = uniform_edges(1.5, 30);
  RadialHistogram h;
  h.edges = edges;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    h.mass.push_back(model.mass(edges[i], edges[i + 1]));
    h.density.push_back(0.0);
  }
  const auto d = radial_discrepancy(h, model, {0.4, 1.4});
  EXPECT_LT(d.l1, 1e-10);
  EXPECT_LT(d.sup, 1e-9);
  EXPECT_GT(d.bins_used, 0);
  EXPECT_NEAR(d.empirical_mass, d.reference_mass, 1e-10);
}

TEST(Discrepancy, histogram_distance_self) {
  RadialHistogram h;
  h.edges = uniform_edges(1.0, 4);
  h.mass = {1, 2, 3, 4};
  h.density = {0, 0, 0, 0};
  auto g = h;
  g.mass[2] = 3.5;
  const auto d = histogram_distance(g, h, {0.0, 1.0}, {});
  EXPECT_DOUBLE_EQ(d.l1, 0.5);
  EXPECT_DOUBLE_EQ(d.sup, 2.0);
  EXPECT_EQ(d.bins_used, 4);
  EXPECT_DOUBLE_EQ(d.reference_mass, 10.0);
  EXPECT_EQ(histogram_distance(h, h, {0.0, 1.0}, {}).l1, 0.0);
}

TEST(Slope, loglog) {
  const std::vector<double> x{1, 10, 100}, y{5, 0.5, 0.05};
  EXPECT_NEAR(loglog_slope(x, y), -1.0, 1e-12);
  const std::vector<double> one{1};
  EXPECT_TRUE(std::isnan(loglog_slope(one, one)));
}

TEST(Convergence, exotic_decreases) {
  const std::vector<std::int64_t> ns{10, 30, 50};
  const auto report = compare_convergence(exotic_config(), ns, 60, RadialWindow{0.40, 1.40});
  ASSERT_EQ(report.rows.size(), 3u);
  EXPECT_NEAR(report.rows[0].l1, 12.425, 5e-3);
  EXPECT_NEAR(report.rows[1].l1, 2.5365, 5e-4);
  EXPECT_NEAR(report.rows[2].l1, 0.73836, 5e-5);
  EXPECT_GT(report.rows[0].l1, report.rows[1].l1);
  EXPECT_GT(report.rows[1].l1, report.rows[2].l1);
  EXPECT_LT(report.slope, 0.0);
  for (const auto& row : report.rows) EXPECT_GT(row.point_count, 0);
}
