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

#include "fracpair/grid_geometry.hpp"
#include "fracpair/histogram.hpp"
#include "fracpair/scaling.hpp"

namespace fracpair {

/// Closed-form limit density of the pair correlation measures.
///
/// Finite regime: rho(z) = alpha^(2/(1-alpha)) / ((1-alpha) covol)
///   * (|z|/lambda)^(-(4-2 alpha)/(1-alpha)) * sum_{0<|p|<=|z|/(alpha lambda)} |p|^(2/(1-alpha)).
/// Zero regime: the constant pi / (alpha^2 (2-alpha) covol^2).  Infinite: 0.
///
/// The lattice shells are cached up to max_radius at construction; the model
/// is immutable afterwards.
class DensityModel {
 public:
  DensityModel(double alpha, const LatticeBasis& lattice, LimitClass regime, double lambda = 1.0,
               double max_radius = 40.0);

  static DensityModel from_scaling(double alpha, const LatticeBasis& lattice,
                                   const ScalingRegime& scaling, double max_radius = 40.0);

  double alpha() const { return alpha_; }
  LimitClass regime() const { return regime_; }
  double lambda() const { return lambda_; }
  double covolume() const { return covolume_; }
  double systole() const { return systole_; }
  double max_radius() const { return max_radius_; }

  double rho(Complex z) const { return rho(std::abs(z)); }
  /// Right-continuous value at radius r.
  double rho(double r) const;
  /// Left limit at radius r (differs from rho(r) only on discontinuity circles).
  double rho_left(double r) const;
  /// 2 pi r rho(r).
  double rho_radial(double r) const;

  /// alpha lambda systole; DomainError outside the finite regime.
  double repulsion_radius() const;
  /// pi / (alpha^2 (2-alpha) covol^2); DomainError in the infinite regime.
  double asymptote() const;

  /// Sorted radii alpha lambda |p| <= a where rho jumps (finite regime only).
  std::vector<double> discontinuity_radii(double a) const;

  /// Integral of rho over the annulus r1 <= |z| <= r2, in closed form.
  double mass(double r1, double r2) const;

  /// Integral of f(|z|) rho(z) over D(0, a) for f(r) = sum_q coeffs[q] r^q,
  /// in closed form piece by piece.
  double integrate_radial_polynomial(std::span<const double> coeffs, double a) const;

  /// Same for a general radial f, by adaptive Gauss-Kronrod quadrature
  /// split at every discontinuity radius.
  double integrate_radial(const std::function<double(double)>& f, double a,
                          double relative_tolerance = 1e-8) const;

  /// Integral of f(z) rho(z) over D(0, a) for a general f.
  double integrate_planar(const TestFunction& f, double a, double relative_tolerance = 1e-8) const;

 private:
  struct Piece {
    double lo, hi, shell_sum;
  };
  std::vector<Piece> pieces(double r1, double r2) const;
  double shell_sum(double r, bool right) const;
  void check_radius(double r) const;

  double alpha_;
  LimitClass regime_;
  double lambda_;
  double max_radius_;
  double covolume_ = 0.0;
  double systole_ = 0.0;
  double beta_ = 0.0;   // 2 / (1 - alpha)
  double decay_ = 0.0;  // (4 - 2 alpha) / (1 - alpha)
  double prefactor_ = 0.0;
  std::vector<double> shell_radii_;  // distinct alpha lambda |p|, increasing
  std::vector<double> cumulative_;   // running sum of |p|^beta through each shell
};

/// Polynomial coefficients of bump_A in r: 1 - 2 r^2/A^2 + r^4/A^4.
std::vector<double> bump_coefficients(double a);

struct IntroDensity {
  double value = 0.0;
  /// The input lattice has covolume != 1, outside the unimodular convention
  /// of the gamma-parameterized form; value follows the general formula.
  bool non_unimodular = false;
};

/// Density for phi(N) = N^gamma: infinite, zero or finite (lambda = 1)
/// according to gamma against 1 - alpha.
IntroDensity rho_intro(double alpha, double gamma, const LatticeBasis& lattice, Complex z);

}  // namespace fracpair
