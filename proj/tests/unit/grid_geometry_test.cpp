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
#include <set>
#include <utility>

#include "fracpair/errors.hpp"
#include "fracpair/grid_geometry.hpp"

using namespace fracpair;

namespace {

GridSpec offset_grid() { return {LatticeBasis{}, Complex(0.5, 0.5)}; }

// Shortest nonzero vector over small integer combinations.
double brute_systole(const LatticeBasis& b) {
  double best = INFINITY;
  for (int i = -6; i <= 6; ++i) {
    for (int j = -6; j <= 6; ++j) {
      if (i == 0 && j == 0) continue;
      best = std::min(best, std::abs(static_cast<double>(i) * b.b1 + static_cast<double>(j) * b.b2));
    }
  }
  return best;
}

}  // namespace

TEST(ReduceBasis, already_reduced) {
  const auto r = reduce_basis({Complex(1, 0), Complex(0, 1)});
  EXPECT_EQ(r.b1, Complex(1, 0));
  EXPECT_EQ(r.b2, Complex(0, 1));
}

TEST(ReduceBasis, one_step) {
  const auto r = reduce_basis({Complex(1, 0), Complex(1, 1)});
  EXPECT_DOUBLE_EQ(std::abs(r.b1), 1.0);
  EXPECT_DOUBLE_EQ(std::abs(r.b2), 1.0);
  EXPECT_DOUBLE_EQ(std::abs(r.b1), brute_systole({Complex(1, 0), Complex(1, 1)}));
}

TEST(ReduceBasis, half_boundary_left_alone) {
  const auto r = reduce_basis({Complex(2, 0), Complex(1, 2)});
  EXPECT_EQ(r.b1, Complex(2, 0));
  EXPECT_EQ(r.b2, Complex(1, 2));
  EXPECT_DOUBLE_EQ(std::abs(r.b1), brute_systole(r));
}

TEST(ReduceBasis, degenerate_rejected) {
  EXPECT_THROW(reduce_basis({Complex(1, 1), Complex(2, 2)}), ValidationError);
  EXPECT_THROW(reduce_basis({Complex(0, 0), Complex(0, 1)}), ValidationError);
  EXPECT_THROW(reduce_basis({Complex(NAN, 0), Complex(0, 1)}), ValidationError);
}

TEST(ReduceBasis, same_lattice_property) {
  const LatticeBasis inputs[] = {{Complex(3, 1), Complex(7, 3)},
                                 {Complex(0.3, 1.7), Complex(5.1, -2.2)},
                                 {Complex(1, 0), Complex(100, 1)},
                                 {Complex(-2, 5), Complex(3, -7)}};
  for (const auto& in : inputs) {
    const auto out = reduce_basis(in);
    const double det = signed_area(out);
    for (Complex v : {in.b1, in.b2}) {
      const double a = (v.real() * out.b2.imag() - v.imag() * out.b2.real()) / det;
      const double b = (out.b1.real() * v.imag() - out.b1.imag() * v.real()) / det;
      EXPECT_NEAR(a, std::round(a), 1e-9);
      EXPECT_NEAR(b, std::round(b), 1e-9);
    }
    EXPECT_NEAR(std::abs(det), std::abs(signed_area(in)), 1e-9 * std::abs(det));
    EXPECT_LE(std::abs(out.b1), std::abs(out.b2) * (1 + 1e-12));
    EXPECT_LE(std::abs((out.b2 * std::conj(out.b1)).real()) / std::norm(out.b1), 0.5 + 1e-12);
    EXPECT_NEAR(std::abs(out.b1), brute_systole(in), 1e-9);
  }
}

TEST(GridStats, gaussian_integers) {
  const auto s = grid_stats(gaussian_integers());
  EXPECT_DOUBLE_EQ(s.covolume, 1.0);
  EXPECT_DOUBLE_EQ(s.systole_lattice, 1.0);
  EXPECT_DOUBLE_EQ(s.systole_grid, 1.0);
  EXPECT_GE(s.diameter, s.systole_lattice);
}

TEST(GridStats, hexagonal_covolume) {
  const GridSpec hex{{Complex(1, 0), std::polar(1.0, std::numbers::pi / 3)}, Complex(0, 0)};
  EXPECT_NEAR(grid_stats(hex).covolume, 0.8660254037844386, 1e-15);
  EXPECT_NEAR(grid_stats(hexagonal_grid()).covolume, 0.8660254037844386, 1e-15);
}

TEST(GridStats, offset_systole) {
  EXPECT_NEAR(grid_stats(offset_grid()).systole_grid, std::sqrt(0.5), 1e-15);
}

TEST(EnumerateDisk, unit_disk) {
  const auto pts = enumerate_disk(gaussian_integers(), 1.0);
  const std::set<std::pair<double, double>> got = [&] {
    std::set<std::pair<double, double>> s;
    for (auto z : pts) s.insert({z.real(), z.imag()});
    return s;
  }();
  const std::set<std::pair<double, double>> want{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  EXPECT_EQ(got, want);
}

TEST(EnumerateDisk, cardinalities) {
  EXPECT_EQ(enumerate_disk(gaussian_integers(), 5.0).size(), 80u);
  EXPECT_EQ(enumerate_disk(gaussian_integers(), 100.0).size(), 31416u);
  EXPECT_EQ(enumerate_disk(offset_grid(), 1.0).size(), 4u);
  EXPECT_TRUE(enumerate_disk(gaussian_integers(), 0.0).empty());
  EXPECT_TRUE(enumerate_disk(gaussian_integers(), 0.5).empty());
}

TEST(EnumerateDisk, lexicographic_order) {
  const auto pts = enumerate_disk_indexed(hexagonal_grid(), 6.0);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    EXPECT_LT(std::pair(pts[i - 1].a, pts[i - 1].b), std::pair(pts[i].a, pts[i].b));
  }
}

TEST(EnumerateDisk, gauss_sandwich) {
  for (const GridSpec& g : {gaussian_integers(), hexagonal_grid(), offset_grid()}) {
    const auto s = grid_stats(g);
    for (double x = 0.25; x <= 60.0; x *= 1.37) {
      const auto card = static_cast<double>(enumerate_disk(g, x).size());
      const double k = std::numbers::pi / s.covolume;
      EXPECT_GE(card, k * std::pow(std::max(0.0, x - s.diameter), 2.0)) << x;
      EXPECT_LE(card, k * std::pow(x + s.diameter, 2.0)) << x;
    }
  }
}

TEST(PowerSum, values) {
  EXPECT_EQ(power_sum(gaussian_integers(), 0.0, 5.0), 80.0);
  EXPECT_DOUBLE_EQ(power_sum(gaussian_integers(), 2.0, 1.0), 4.0);
  const double ps = power_sum(gaussian_integers(), 3.0, 30.0);
  EXPECT_NEAR(ps, 30366234.67983121, 1e-6 * ps);
  EXPECT_LE(std::abs(ps / leading_term(3.0, 30.0, 1.0) - 1.0), 0.05);
}

TEST(PowerSum, beta_zero_is_card) {
  for (const GridSpec& g : {gaussian_integers(), hexagonal_grid(), offset_grid()}) {
    for (double x : {1.0, 2.5, 9.0, 17.3}) {
      EXPECT_EQ(power_sum(g, 0.0, x), static_cast<double>(enumerate_disk(g, x).size()));
    }
  }
}

TEST(PowerSum, error_decays_like_inverse_x) {
  for (double beta : {1.0, 3.0, 2.0 / (1.0 - 1.0 / 3.0), 2.0 / (1.0 - 0.5)}) {
    for (double x : {20.0, 40.0, 80.0}) {
      const double rel = std::abs(power_sum(gaussian_integers(), beta, x) / leading_term(beta, x, 1.0) - 1.0);
      EXPECT_LE(x * rel, 10.0) << "beta " << beta << " x " << x;
    }
  }
}

TEST(LeadingTerm, values) {
  EXPECT_NEAR(leading_term(0.0, 10.0, 1.0), 100.0 * std::numbers::pi, 1e-12);
  EXPECT_NEAR(leading_term(3.0, 30.0, 1.0), 30536280.59289279, 1e-6);
  EXPECT_NEAR(leading_term(-1.0, 4.0, 1.0), 25.132741228718345, 1e-13);
  EXPECT_THROW(leading_term(-2.0, 4.0, 1.0), DomainError);
  EXPECT_THROW(leading_term(-3.0, 4.0, 1.0), DomainError);
}

TEST(CountNearLine, values) {
  const std::vector<double> zero(5, 0.0), one(3, 1.0), half(10, 0.5);
  EXPECT_EQ(count_near_line(gaussian_integers(), zero, 5), 5);
  EXPECT_EQ(count_near_line(gaussian_integers(), one, 3), 9);
  EXPECT_EQ(count_near_line(gaussian_integers(), half, 10), 10);
}

TEST(CountNearLine, matches_double_loop_and_bound) {
  for (const GridSpec& g : {gaussian_integers(), hexagonal_grid(), offset_grid()}) {
    const auto stats = grid_stats(g);
    for (int n : {3, 8, 15}) {
      std::vector<double> env;
      for (int x = 1; x <= n; ++x) env.push_back(0.3 * x);
      std::int64_t brute = 0;
      for (const Complex& m : enumerate_disk(g, n)) {
        if (m.real() < 0.0) continue;
        const int cell = std::max(1, static_cast<int>(std::ceil(m.real())));
        if (std::abs(m.imag()) <= env[static_cast<std::size_t>(cell - 1)]) ++brute;
      }
      const auto count = count_near_line(g, env, n);
      EXPECT_EQ(count, brute);
      EXPECT_LE(static_cast<double>(count), near_line_bound(stats, env));
    }
  }
}

TEST(CountNearLine, rejects_bad_input) {
  const std::vector<double> neg{-1.0, 1.0};
  EXPECT_THROW(count_near_line(gaussian_integers(), neg, 2), ValidationError);
  EXPECT_THROW(count_near_line(gaussian_integers(), neg, 0), ValidationError);
  EXPECT_THROW(count_near_line(gaussian_integers(), std::vector<double>{1.0}, 2), ValidationError);
}

TEST(Parse, basis_and_offset) {
  const auto b = parse_basis("1,0, 0.5,0.8660254037844386");
  EXPECT_EQ(b.b1, Complex(1, 0));
  EXPECT_EQ(b.b2, Complex(0.5, 0.8660254037844386));
  EXPECT_EQ(parse_offset("0.5,-0.25"), Complex(0.5, -0.25));
  EXPECT_THROW(parse_basis("1,0,0"), ValidationError);
  EXPECT_THROW(parse_basis("1,0,2,0"), ValidationError);
  EXPECT_THROW(parse_offset("a,b"), ValidationError);
}
