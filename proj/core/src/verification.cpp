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

#include "fracpair/verification.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "fracpair/errors.hpp"
#include "fracpair/limit_density.hpp"
#include "fracpair/pair_correlation.hpp"

namespace fracpair {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Suite {
  const VerifyOptions& opts;
  std::mt19937_64 rng;
  std::vector<PropertyResult> results;

  explicit Suite(const VerifyOptions& o) : opts(o), rng(o.seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  Complex nonzero(double half_width) {
    for (;;) {
      const Complex z(uniform(-half_width, half_width), uniform(-half_width, half_width));
      if (std::abs(z) > 1e-3) return z;
    }
  }

  void run(const std::string& name, const std::function<std::string(bool&)>& body) {
    PropertyResult r{name, false, ""};
    try {
      bool ok = true;
      r.detail = body(ok);
      r.passed = ok;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }

  CorrelationConfig base(double alpha, double gamma) const {
    CorrelationConfig c;
    c.alpha = alpha;
    c.grid = opts.grid;
    c.n = opts.n;
    c.scaling = ScalingRegime::power_law(gamma);
    c.support_radius = 1.5;
    c.threads = opts.threads;
    c.branch_cut = opts.branch_cut;
    return c;
  }
};

std::string describe(const char* label, double value) {
  std::ostringstream s;
  s.precision(6);
  s << label << '=' << value;
  return s.str();
}

LatticeBasis lattice_of(const GridSpec& grid) { return grid.basis; }

}  // namespace

std::vector<PropertyResult> run_verification(const VerifyOptions& options) {
  validate(options.grid);
  if (options.n < 2) throw ValidationError("verification needs N >= 2");
  Suite suite(options);
  const GridSpec& grid = options.grid;
  const GridStats stats = grid_stats(grid);
  const GridSpec lattice{grid.basis, Complex(0.0, 0.0)};

  suite.run("gauss_sandwich", [&](bool& ok) {
    double worst = 0.0;
    for (double x : {0.5, 1.0, 2.5, 5.0, 10.0, 20.0, 40.0}) {
      const auto card = static_cast<double>(enumerate_disk(grid, x).size());
      const double k = std::numbers::pi / stats.covolume;
      const double lo = k * std::pow(std::max(0.0, x - stats.diameter), 2.0);
      const double hi = k * std::pow(x + stats.diameter, 2.0);
      if (card < lo || card > hi) ok = false;
      worst = std::max(worst, std::abs(card - k * x * x) / (x + 1.0));
    }
    return describe("max_scaled_error", worst);
  });

  suite.run("power_sum_beta_zero", [&](bool& ok) {
    for (double x : {1.0, 3.0, 7.5, 15.0}) {
      if (power_sum(grid, 0.0, x) != static_cast<double>(enumerate_disk(grid, x).size())) ok = false;
    }
    return std::string("power_sum(0, x) == card");
  });

  suite.run("power_sum_leading_term", [&](bool& ok) {
    double worst = 0.0;
    for (double beta : {1.0, 3.0, 2.0 / (1.0 - 1.0 / 3.0), 2.0 / (1.0 - 0.5)}) {
      for (double x : {20.0, 40.0, 80.0}) {
        const double rel = std::abs(power_sum(grid, beta, x) / leading_term(beta, x, stats.covolume) - 1.0);
        worst = std::max(worst, x * rel);
      }
    }
    ok = worst <= 10.0;
    return describe("max x*relative_error", worst);
  });

  suite.run("reduce_basis_same_lattice", [&](bool& ok) {
    const LatticeBasis inputs[] = {grid.basis, {Complex(1, 0), Complex(1, 1)}, {Complex(2, 0), Complex(1, 2)},
                                   {Complex(3, 1), Complex(7, 3)}, {Complex(0.3, 1.7), Complex(5.1, -2.2)}};
    for (const auto& in : inputs) {
      const auto out = reduce_basis(in);
      const double det = signed_area(out);
      for (Complex v : {in.b1, in.b2}) {
        const double a = (v.real() * out.b2.imag() - v.imag() * out.b2.real()) / det;
        const double b = (out.b1.real() * v.imag() - out.b1.imag() * v.real()) / det;
        if (std::abs(a - std::round(a)) > 1e-9 || std::abs(b - std::round(b)) > 1e-9) ok = false;
      }
      if (std::abs(std::abs(det) - std::abs(signed_area(in))) > 1e-9 * std::abs(det)) ok = false;
      if (std::norm(out.b1) > std::norm(out.b2) * (1 + 1e-12)) ok = false;
      const double mu = (out.b2 * std::conj(out.b1)).real() / std::norm(out.b1);
      if (std::abs(mu) > 0.5 + 1e-12) ok = false;
    }
    return std::string("integer change of basis, |mu| <= 1/2");
  });

  suite.run("near_line_bound", [&](bool& ok) {
    for (int n : {5, 10, 20}) {
      for (double g : {0.0, 0.5, 1.0, 2.0}) {
        std::vector<double> env(static_cast<std::size_t>(n), g);
        const auto count = static_cast<double>(count_near_line(grid, env, n));
        if (count > near_line_bound(stats, env)) ok = false;
      }
    }
    return std::string("count <= 4 sum (1+diam)(g+diam)/covol");
  });

  suite.run("level_rotation", [&](bool& ok) {
    double worst = 0.0;
    for (int i = 0; i < 20000; ++i) {
      const Complex z = suite.nonzero(10.0);
      const double alpha = suite.uniform(0.01, 0.99);
      const int k = suite.integer(-6, 6);
      const Complex direct = level_power(z, alpha, k);
      const Complex rotated = std::polar(1.0, kTwoPi * alpha * k) * level_power(z, alpha, 0);
      worst = std::max(worst, std::abs(direct - rotated) / std::abs(direct));
      const double modulus = std::abs(direct) / std::pow(std::abs(z), alpha) - 1.0;
      if (std::abs(modulus) > 1e-14) ok = false;
    }
    if (worst > 1e-13) ok = false;
    return describe("max_relative", worst);
  });

  suite.run("linear_approximation", [&](bool& ok) {
    double worst = 0.0;
    for (double alpha : {1.0 / 3.0, 0.5, 23.0 / 42.0}) {
      for (int i = 0; i < 20000; ++i) {
        const double r = 0.1 * std::sqrt(suite.uniform(0.0, 1.0));
        const Complex z = std::polar(std::max(r, 1e-6), suite.uniform(0.0, std::numbers::pi));
        const double err = std::abs(level_power(1.0 + z, alpha, 0) - 1.0 - alpha * z);
        worst = std::max(worst, err / std::norm(z));
      }
    }
    ok = worst <= 1.0;
    return describe("max |err|/|z|^2", worst);
  });

  suite.run("ratio_branch_contract", [&](bool& ok) {
    std::int64_t failures = 0;
    auto check = [&](Complex z, Complex zp, double alpha, int k) {
      const Complex lhs = level_power(z, alpha, k) / level_power(zp, alpha, k);
      const Complex rhs = level_power(z / zp, alpha, level_of(ratio_branch(z, zp, options.branch_cut)));
      if (std::abs(lhs - rhs) > 1e-12 * std::abs(rhs)) ++failures;
    };
    for (int i = 0; i < 100000; ++i) {
      check(suite.nonzero(5.0), suite.nonzero(5.0), suite.uniform(0.01, 0.99), suite.integer(-4, 4));
    }
    // Equal arguments: scaling by a power of two keeps theta bit-identical.
    for (int i = 0; i < 1000; ++i) {
      const Complex z = suite.nonzero(5.0);
      check(z, z * std::ldexp(1.0, suite.integer(-3, 3)), suite.uniform(0.01, 0.99), suite.integer(-4, 4));
    }
    ok = failures == 0;
    return describe("failures", static_cast<double>(failures));
  });

  suite.run("roots", [&](bool& ok) {
    double worst = 0.0;
    for (int i = 0; i < 2000; ++i) {
      const Complex m = suite.nonzero(20.0);
      const int b = suite.integer(2, 7);
      const auto rs = roots(m, b);
      for (std::size_t a = 0; a < rs.size(); ++a) {
        worst = std::max(worst, std::abs(std::pow(rs[a], b) - m) / std::abs(m));
        for (std::size_t c = a + 1; c < rs.size(); ++c) {
          if (std::abs(rs[a] - rs[c]) < 1e-9 * std::abs(rs[a])) ok = false;
        }
      }
    }
    if (worst > 1e-12) ok = false;
    return describe("max |u^b - m|/|m|", worst);
  });

  const auto steps = enumerate_disk(lattice, 3.0 * stats.diameter);
  const auto grid_points = enumerate_disk(grid, 10.0);

  suite.run("change_of_variables", [&](bool& ok) {
    double worst = 0.0;
    int done = 0;
    while (done < 10000) {
      const double alpha = suite.uniform(0.1, 0.9);
      const Complex p = steps[static_cast<std::size_t>(suite.integer(0, static_cast<int>(steps.size()) - 1))];
      const Complex m =
          grid_points[static_cast<std::size_t>(suite.integer(0, static_cast<int>(grid_points.size()) - 1))];
      if (theta(m) == 0.0) continue;
      const int k = suite.integer(-3, 3);
      const double phi = suite.uniform(1.0, 10.0);
      const Complex z = phi * alpha * p / level_power(m, 1.0 - alpha, k);
      const Complex lhs = change_var_h({p, k, alpha}, z);
      const Complex rhs = level_power(phi * alpha * p, -1.0 / (1.0 - alpha), 0) * m;
      worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
      ++done;
    }
    ok = worst <= 1e-12;
    return describe("max_relative", worst);
  });

  suite.run("sector_decomposition", [&](bool& ok) {
    std::int64_t both = 0, neither = 0, boundary = 0;
    const int samples = 100000;
    for (int i = 0; i < samples; ++i) {
      const double alpha = suite.uniform(0.1, 0.9);
      const Complex p = steps[static_cast<std::size_t>(suite.integer(0, static_cast<int>(steps.size()) - 1))];
      const int k = suite.integer(-3, 3);
      const double n = suite.uniform(10.0, 100.0);
      const double phi = std::pow(n, suite.uniform(0.1, 0.9));
      const SectorSpec spec{p, k, alpha};
      const double r_in = sector_inner_radius(spec, n, phi);
      const double width = (1.0 - alpha) * kTwoPi;
      const double hi = theta(p) - width * k;
      const double w = hi - width * suite.uniform(0.0, 1.0);
      const double r = r_in * std::sqrt(suite.uniform(1.0, 16.0));
      const auto m = sector_membership(spec, std::polar(r, w), n, phi);
      if (m.near_boundary) {
        ++boundary;
        continue;
      }
      if (!m.in_region) continue;
      if (m.in_plus && m.in_minus_mirror) ++both;
      if (!m.in_plus && !m.in_minus_mirror) ++neither;
    }
    const double fraction = static_cast<double>(boundary) / samples;
    ok = both == 0 && neither == 0 && fraction < 1e-3;
    std::ostringstream s;
    s << "both=" << both << " neither=" << neither << " boundary_fraction=" << fraction;
    return s.str();
  });

  suite.run("symmetry", [&](bool& ok) {
    // Unrestricted support so that misclassified pairs stay visible.
    auto c = suite.base(1.0 / 3.0, 0.25);
    c.n = std::min<std::int64_t>(options.n, 8);
    c.enumeration = Enumeration::brute_force;
    c.support_radius = std::numeric_limits<double>::infinity();
    const auto pm = decompose_pm(c);
    std::vector<Complex> mirrored;
    for (const Complex& z : pm.plus.points) mirrored.push_back(-z);
    const auto match = match_multisets(mirrored, pm.minus.points, 1e-12);
    ok = match.equal && !pm.plus.points.empty();
    std::ostringstream s;
    s << "plus=" << pm.plus.points.size() << " minus=" << pm.minus.points.size()
      << " unmatched=" << match.unmatched;
    return s.str();
  });

  suite.run("periodicity", [&](bool& ok) {
    auto c = suite.base(0.4, 0.6);
    c.n_second = 5;
    auto five = build_level_measure(c);
    c.n_second = 10;
    const auto ten = build_level_measure(c);
    five.weight /= 2.0;
    std::vector<Complex> doubled = five.points;
    doubled.insert(doubled.end(), five.points.begin(), five.points.end());
    const auto match = match_multisets(doubled, ten.points, 1e-12);
    ok = match.equal && std::abs(five.weight - ten.weight) <= 1e-12 * ten.weight;
    return describe("max_distance", match.max_distance);
  });

  suite.run("pruned_equals_brute", [&](bool& ok) {
    std::size_t compared = 0;
    for (double alpha : {1.0 / 3.0, 0.5, 23.0 / 42.0}) {
      for (double gamma : {0.25, 1.0 - alpha}) {
        for (auto mode : {MeasureMode::level_separated, MeasureMode::full_riemann}) {
          auto c = suite.base(alpha, gamma);
          c.mode = mode;
          c.n_second = 2;
          c.enumeration = Enumeration::brute_force;
          const auto brute = build_measure(c);
          c.enumeration = Enumeration::pruned;
          const auto pruned = build_measure(c);
          if (!measures_match(brute, pruned, 1e-12)) ok = false;
          compared += brute.points.size();
        }
      }
    }
    return describe("points_compared", static_cast<double>(compared));
  });

  suite.run("density_quadrature", [&](bool& ok) {
    double worst = 0.0;
    for (double alpha : {1.0 / 3.0, 0.5}) {
      for (LimitClass regime : {LimitClass::finite, LimitClass::zero}) {
        const DensityModel model(alpha, lattice_of(grid), regime, 1.0, 2.0);
        const double a = 1.5;
        const auto coeffs = bump_coefficients(a);
        const double closed = model.integrate_radial_polynomial(coeffs, a);
        const double quad = model.integrate_radial([a](double r) { return bump(a, Complex(r, 0.0)); }, a);
        const double planar = model.integrate_planar(bump_function(a), a);
        worst = std::max({worst, std::abs(quad / closed - 1.0), std::abs(planar / closed - 1.0)});
      }
    }
    ok = worst <= 1e-7;
    return describe("max_relative", worst);
  });

  suite.run("level_repulsion", [&](bool& ok) {
    const DensityModel model(1.0 / 3.0, lattice_of(grid), LimitClass::finite, 1.0, 2.0);
    const double r0 = model.repulsion_radius();
    for (int i = 1; i < 1000; ++i) {
      if (model.rho(r0 * i / 1000.0) != 0.0) ok = false;
    }
    if (!(model.rho(r0) > 0.0)) ok = false;
    return describe("repulsion_radius", r0);
  });

  return suite.results;
}

bool all_passed(const std::vector<PropertyResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.passed; });
}

Table verification_table(const std::vector<PropertyResult>& results) {
  Table t{{"property", "passed", "detail"}, {}};
  for (const auto& r : results) t.add_row({r.name, r.passed ? "1" : "0", r.detail});
  return t;
}

}  // namespace fracpair
