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

#include "fracpair/limit_density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/trapezoidal.hpp>

#include "fracpair/errors.hpp"

namespace fracpair {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kShellFuzz = 1e-14;

// Integral of r^e over [u, v].
double power_integral(double e, double u, double v) {
  if (e == -1.0) return std::log(v / u);
  return (std::pow(v, e + 1.0) - std::pow(u, e + 1.0)) / (e + 1.0);
}

double gk(const std::function<double(double)>& g, double u, double v, double tol) {
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 61>::integrate(g, u, v, 20, tol);
}

}  // namespace

DensityModel::DensityModel(double alpha, const LatticeBasis& lattice, LimitClass regime,
                           double lambda, double max_radius)
    : alpha_(alpha), regime_(regime), lambda_(lambda), max_radius_(max_radius) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ValidationError("alpha must lie in (0, 1)");
  if (!(max_radius > 0.0) || !std::isfinite(max_radius)) {
    throw ValidationError("density cache radius must be finite and > 0");
  }
  const GridSpec grid{lattice, Complex(0.0, 0.0)};
  const GridStats stats = grid_stats(grid);
  covolume_ = stats.covolume;
  systole_ = stats.systole_lattice;
  beta_ = 2.0 / (1.0 - alpha);
  decay_ = (4.0 - 2.0 * alpha) / (1.0 - alpha);
  if (regime_ != LimitClass::finite) {
    lambda_ = regime_ == LimitClass::zero ? 0.0 : std::numeric_limits<double>::infinity();
    return;
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ValidationError("finite regime requires a finite lambda > 0");
  }
  prefactor_ = std::pow(alpha, beta_) / ((1.0 - alpha) * covolume_) * std::pow(lambda, decay_);

  const double scale = alpha * lambda;
  auto lattice_points = enumerate_disk(grid, max_radius / scale * (1.0 + 1e-9));
  std::vector<double> norms;
  norms.reserve(lattice_points.size());
  for (const Complex& p : lattice_points) norms.push_back(std::norm(p));
  std::sort(norms.begin(), norms.end());
  double running = 0.0;
  for (std::size_t i = 0; i < norms.size(); ++i) {
    running += std::pow(norms[i], beta_ / 2.0);
    const bool last_of_shell = i + 1 == norms.size() || norms[i + 1] > norms[i] * (1.0 + 1e-12);
    if (last_of_shell) {
      shell_radii_.push_back(scale * std::sqrt(norms[i]));
      cumulative_.push_back(running);
    }
  }
}

DensityModel DensityModel::from_scaling(double alpha, const LatticeBasis& lattice,
                                        const ScalingRegime& scaling, double max_radius) {
  const LimitClass limit = limit_class(scaling, alpha);
  const double lambda = limit == LimitClass::finite ? limit_lambda(scaling, alpha) : 1.0;
  return DensityModel(alpha, lattice, limit, lambda, max_radius);
}

void DensityModel::check_radius(double r) const {
  if (!(r >= 0.0)) throw ValidationError("radius must be >= 0");
  if (regime_ == LimitClass::finite && r > max_radius_ * (1.0 + 1e-12)) {
    throw DomainError("radius beyond the density model's shell cache");
  }
}

double DensityModel::shell_sum(double r, bool right) const {
  const auto it = right
                      ? std::upper_bound(shell_radii_.begin(), shell_radii_.end(), r * (1.0 + kShellFuzz))
                      : std::lower_bound(shell_radii_.begin(), shell_radii_.end(), r * (1.0 - kShellFuzz));
  const auto idx = static_cast<std::size_t>(it - shell_radii_.begin());
  return idx == 0 ? 0.0 : cumulative_[idx - 1];
}

double DensityModel::rho(double r) const {
  check_radius(r);
  switch (regime_) {
    case LimitClass::infinite:
      return 0.0;
    case LimitClass::zero:
      return asymptote();
    case LimitClass::finite:
      break;
  }
  if (r == 0.0) return 0.0;
  const double s = shell_sum(r, true);
  return s == 0.0 ? 0.0 : prefactor_ * std::pow(r, -decay_) * s;
}

double DensityModel::rho_left(double r) const {
  check_radius(r);
  if (regime_ != LimitClass::finite) return rho(r);
  if (r == 0.0) return 0.0;
  const double s = shell_sum(r, false);
  return s == 0.0 ? 0.0 : prefactor_ * std::pow(r, -decay_) * s;
}

double DensityModel::rho_radial(double r) const { return kTwoPi * r * rho(r); }

double DensityModel::repulsion_radius() const {
  if (regime_ != LimitClass::finite) throw DomainError("repulsion radius requires the finite regime");
  return alpha_ * lambda_ * systole_;
}

double DensityModel::asymptote() const {
  if (regime_ == LimitClass::infinite) throw DomainError("no asymptote in the infinite regime");
  return std::numbers::pi / (alpha_ * alpha_ * (2.0 - alpha_) * covolume_ * covolume_);
}

std::vector<double> DensityModel::discontinuity_radii(double a) const {
  if (regime_ != LimitClass::finite) return {};
  check_radius(a);
  std::vector<double> out;
  for (double r : shell_radii_) {
    if (r > a * (1.0 + kShellFuzz)) break;
    out.push_back(r);
  }
  return out;
}

std::vector<DensityModel::Piece> DensityModel::pieces(double r1, double r2) const {
  std::vector<Piece> out;
  if (regime_ != LimitClass::finite || !(r2 > r1)) return out;
  check_radius(r2);
  std::vector<double> cuts{r1};
  for (double d : shell_radii_) {
    if (d >= r2) break;
    if (d > r1) cuts.push_back(d);
  }
  cuts.push_back(r2);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double s = shell_sum(0.5 * (cuts[i] + cuts[i + 1]), true);
    if (s > 0.0) out.push_back({cuts[i], cuts[i + 1], s});
  }
  return out;
}

double DensityModel::integrate_radial_polynomial(std::span<const double> coeffs, double a) const {
  if (!(a > 0.0)) throw ValidationError("integration radius must be > 0");
  double total = 0.0;
  if (regime_ == LimitClass::infinite) return 0.0;
  if (regime_ == LimitClass::zero) {
    for (std::size_t q = 0; q < coeffs.size(); ++q) {
      total += coeffs[q] * power_integral(static_cast<double>(q) + 1.0, 0.0, a);
    }
    return kTwoPi * asymptote() * total;
  }
  for (const Piece& piece : pieces(0.0, a)) {
    double inner = 0.0;
    for (std::size_t q = 0; q < coeffs.size(); ++q) {
      if (coeffs[q] == 0.0) continue;
      inner += coeffs[q] * power_integral(static_cast<double>(q) + 1.0 - decay_, piece.lo, piece.hi);
    }
    total += piece.shell_sum * inner;
  }
  return kTwoPi * prefactor_ * total;
}

double DensityModel::mass(double r1, double r2) const {
  if (!(r1 >= 0.0) || !(r2 >= r1)) throw ValidationError("mass requires 0 <= r1 <= r2");
  if (r2 == r1 || regime_ == LimitClass::infinite) return 0.0;
  if (regime_ == LimitClass::zero) return asymptote() * std::numbers::pi * (r2 * r2 - r1 * r1);
  double total = 0.0;
  for (const Piece& piece : pieces(r1, r2)) {
    total += piece.shell_sum * power_integral(1.0 - decay_, piece.lo, piece.hi);
  }
  return kTwoPi * prefactor_ * total;
}

double DensityModel::integrate_radial(const std::function<double(double)>& f, double a,
                                      double relative_tolerance) const {
  if (!(a > 0.0)) throw ValidationError("integration radius must be > 0");
  if (regime_ == LimitClass::infinite) return 0.0;
  if (regime_ == LimitClass::zero) {
    const double c = asymptote();
    return gk([&](double r) { return kTwoPi * r * f(r) * c; }, 0.0, a, relative_tolerance);
  }
  double total = 0.0;
  for (const Piece& piece : pieces(0.0, a)) {
    const double s = piece.shell_sum;
    total += gk([&](double r) { return kTwoPi * r * f(r) * prefactor_ * std::pow(r, -decay_) * s; },
                piece.lo, piece.hi, relative_tolerance);
  }
  return total;
}

double DensityModel::integrate_planar(const TestFunction& f, double a,
                                      double relative_tolerance) const {
  auto angular = [&](double r) {
    if (r == 0.0) return kTwoPi * f(Complex(0.0, 0.0));
    return boost::math::quadrature::trapezoidal(
        [&](double t) { return f(std::polar(r, t)); }, 0.0, kTwoPi, relative_tolerance);
  };
  if (!(a > 0.0)) throw ValidationError("integration radius must be > 0");
  if (regime_ == LimitClass::infinite) return 0.0;
  if (regime_ == LimitClass::zero) {
    const double c = asymptote();
    return gk([&](double r) { return r * c * angular(r); }, 0.0, a, relative_tolerance);
  }
  double total = 0.0;
  for (const Piece& piece : pieces(0.0, a)) {
    const double s = piece.shell_sum;
    total += gk([&](double r) { return r * prefactor_ * std::pow(r, -decay_) * s * angular(r); },
                piece.lo, piece.hi, relative_tolerance);
  }
  return total;
}

std::vector<double> bump_coefficients(double a) {
  if (!(a > 0.0)) throw ValidationError("bump radius must be > 0");
  const double a2 = a * a;
  return {1.0, 0.0, -2.0 / a2, 0.0, 1.0 / (a2 * a2)};
}

IntroDensity rho_intro(double alpha, double gamma, const LatticeBasis& lattice, Complex z) {
  const auto scaling = ScalingRegime::power_law(gamma);
  const double r = std::abs(z);
  const DensityModel model =
      DensityModel::from_scaling(alpha, lattice, scaling, std::max(1.0, r) * (1.0 + 1e-9));
  IntroDensity out;
  out.value = model.rho(r);
  out.non_unimodular = std::abs(model.covolume() - 1.0) > 1e-12;
  return out;
}

}  // namespace fracpair
