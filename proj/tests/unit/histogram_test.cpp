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
#include <numbers>
#include <random>

#include "fracpair/errors.hpp"
#include "fracpair/histogram.hpp"

using namespace fracpair;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(UniformEdges, values) {
  const auto e = uniform_edges(1.5, 3);
  ASSERT_EQ(e.size(), 4u);
  EXPECT_EQ(e.front(), 0.0);
  EXPECT_DOUBLE_EQ(e[1], 0.5);
  EXPECT_EQ(e.back(), 1.5);
  EXPECT_THROW(uniform_edges(1.0, 0), ValidationError);
  EXPECT_THROW(uniform_edges(0.0, 3), ValidationError);
}

TEST(RadialHistogram, empty_cloud) {
  const WeightedPointCloud cloud{{}, 0.5, {}};
  const auto h = radial_histogram(cloud, uniform_edges(1.0, 4));
  EXPECT_EQ(h.bins(), 4u);
  for (double m : h.mass) EXPECT_EQ(m, 0.0);
  for (double d : h.density) EXPECT_EQ(d, 0.0);
}

TEST(RadialHistogram, single_point) {
  const WeightedPointCloud cloud{{Complex(0, 0.7)}, 0.25, {}};
  const std::vector<double> edges{0.0, 0.5, 1.0};
  const auto h = radial_histogram(cloud, edges);
  EXPECT_EQ(h.mass[0], 0.0);
  EXPECT_EQ(h.mass[1], 0.25);
  EXPECT_DOUBLE_EQ(h.density[1], 0.25 / (kPi * 0.75));
}

TEST(RadialHistogram, half_open_bins) {
  const WeightedPointCloud cloud{{Complex(0, 0), Complex(0.5, 0), Complex(1.0, 0), Complex(1.2, 0)}, 1.0, {}};
  const std::vector<double> edges{0.0, 0.5, 1.0};
  const auto h = radial_histogram(cloud, edges);
  EXPECT_EQ(h.mass[0], 2.0);
  EXPECT_EQ(h.mass[1], 1.0);
  EXPECT_EQ(h.total_mass(), 3.0);
}

TEST(RadialHistogram, bad_edges) {
  const WeightedPointCloud cloud{{}, 1.0, {}};
  EXPECT_THROW(radial_histogram(cloud, std::vector<double>{0.0, 1.0, 1.0}), ValidationError);
  EXPECT_THROW(radial_histogram(cloud, std::vector<double>{0.0, 2.0, 1.0}), ValidationError);
  EXPECT_THROW(radial_histogram(cloud, std::vector<double>{-1.0, 1.0}), ValidationError);
  EXPECT_THROW(radial_histogram(cloud, std::vector<double>{1.0}), ValidationError);
}

TEST(RadialHistogram, mass_accounting) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-2, 2);
  WeightedPointCloud cloud{{}, 0.125, {}};
  for (int i = 0; i < 5000; ++i) cloud.points.emplace_back(u(rng), u(rng));
  const auto h = radial_histogram(cloud, uniform_edges(1.5, 30));
  std::size_t inside = 0;
  for (auto z : cloud.points) inside += std::abs(z) <= 1.5;
  EXPECT_NEAR(h.total_mass(), 0.125 * static_cast<double>(inside), 1e-12);
  for (double d : h.density) EXPECT_GE(d, 0.0);
}

TEST(PlanarHistogram, cells) {
  const WeightedPointCloud cloud{{Complex(-1, -1), Complex(0.9, 0.1), Complex(1, 1), Complex(2, 0)}, 2.0, {}};
  const auto h = planar_histogram(cloud, 1.0, 2);
  EXPECT_DOUBLE_EQ(h.cell_width(), 1.0);
  EXPECT_DOUBLE_EQ(h.cell_center(0), -0.5);
  EXPECT_EQ(h.mass[0], 2.0);
  EXPECT_EQ(h.mass[3], 4.0);
  EXPECT_EQ(h.total_mass(), 6.0);
  EXPECT_DOUBLE_EQ(h.density[3], 4.0);
  EXPECT_THROW(planar_histogram(cloud, 0.0, 2), ValidationError);
  EXPECT_THROW(planar_histogram(cloud, 1.0, 0), ValidationError);
}

TEST(PlanarHistogram, mass_accounting) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-2, 2);
  WeightedPointCloud cloud{{}, 0.5, {}};
  for (int i = 0; i < 5000; ++i) cloud.points.emplace_back(u(rng), u(rng));
  const auto h = planar_histogram(cloud, 1.5, 17);
  std::size_t inside = 0;
  for (auto z : cloud.points) inside += std::abs(z.real()) <= 1.5 && std::abs(z.imag()) <= 1.5;
  EXPECT_NEAR(h.total_mass(), 0.5 * static_cast<double>(inside), 1e-12);
}

TEST(Evaluate, pairing) {
  const WeightedPointCloud cloud{{Complex(0.3, 0.4), Complex(2, 0)}, 0.1, {}};
  EXPECT_EQ(evaluate(cloud, [](Complex) { return 0.0; }), 0.0);
  EXPECT_DOUBLE_EQ(evaluate(cloud, bump_function(1.0)), 0.1 * std::pow(1 - 0.25, 2));
  EXPECT_EQ(bump(1.0, Complex(0, 0)), 1.0);
  EXPECT_EQ(bump(1.0, Complex(1, 0)), 0.0);
  EXPECT_EQ(bump(1.0, Complex(1.1, 0)), 0.0);
  EXPECT_THROW(bump_function(0.0), ValidationError);
}
