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

#include "fracpair/level_powers.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "fracpair/errors.hpp"

namespace fracpair {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Position of angle inside [0, 2pi) measured from origin.
double wrap_from(double angle, double origin) {
  double d = std::fmod(angle - origin, kTwoPi);
  if (d < 0.0) d += kTwoPi;
  return d;
}

struct HalfDiskTest {
  bool inside = false;
  bool near_edge = false;
};

// Angular part of H(0, R, beta): arguments in (beta - pi, beta) mod 2pi.
HalfDiskTest half_disk_angle(double arg, double beta, double tolerance) {
  const double d = wrap_from(arg, beta - std::numbers::pi);
  HalfDiskTest out;
  out.inside = d > 0.0 && d < std::numbers::pi;
  out.near_edge = d < tolerance || std::abs(d - std::numbers::pi) < tolerance ||
                  d > kTwoPi - tolerance;
  return out;
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ValidationError("alpha must lie in (0, 1)");
}

}  // namespace

double theta(Complex z, BranchCut cut) {
  if (z == Complex(0.0, 0.0)) throw DomainError("theta is undefined at 0");
  double t = std::atan2(z.imag(), z.real());
  if (cut == BranchCut::principal) return t == -std::numbers::pi ? std::numbers::pi : t;
  if (t < 0.0) {
    // Rounding just below the cut belongs to the cut.
    t = t > -1e-15 ? 0.0 : t + kTwoPi;
  }
  if (t >= kTwoPi) t = 0.0;
  return t + 0.0;
}

Complex level_power(Complex z, double beta, int level, BranchCut cut) {
  if (z == Complex(0.0, 0.0)) throw DomainError("level power is undefined at 0");
  const double omega = theta(z, cut) + kTwoPi * static_cast<double>(level);
  return std::polar(std::pow(std::abs(z), beta), beta * omega);
}

Complex level_power(Complex z, const LevelPowerParams& params) {
  check_alpha(params.alpha);
  return level_power(z, params.alpha, params.level);
}

RatioBranch ratio_branch(Complex z, Complex z_prime, BranchCut cut) {
  if (z == Complex(0.0, 0.0) || z_prime == Complex(0.0, 0.0)) {
    throw DomainError("ratio_branch is undefined at 0");
  }
  return theta(z, cut) >= theta(z_prime, cut) ? RatioBranch::level0 : RatioBranch::level_minus1;
}

std::vector<Complex> roots(Complex m, int b) {
  if (m == Complex(0.0, 0.0)) throw DomainError("roots of 0 are not defined here");
  if (b < 2) throw ValidationError("roots requires b >= 2");
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(b));
  const double beta = 1.0 / static_cast<double>(b);
  for (int j = 0; j < b; ++j) out.push_back(level_power(m, beta, j));
  return out;
}

double sector_argument(const SectorSpec& spec, Complex z) {
  check_alpha(spec.alpha);
  if (z == Complex(0.0, 0.0)) return std::numeric_limits<double>::quiet_NaN();
  const double width = (1.0 - spec.alpha) * kTwoPi;
  const double hi = theta(spec.p) - width * static_cast<double>(spec.level);
  const double lo = hi - width;
  const double w = lo + wrap_from(std::arg(z), lo);
  if (w <= lo || w >= hi) return std::numeric_limits<double>::quiet_NaN();
  return w;
}

Complex change_var_h(const SectorSpec& spec, Complex z) {
  const double w = sector_argument(spec, z);
  if (std::isnan(w)) throw DomainError("change_var_h: point outside the open sector C_{p,k}");
  const double expo = -1.0 / (1.0 - spec.alpha);
  return std::polar(std::pow(std::abs(z), expo), expo * w);
}

double sector_inner_radius(const SectorSpec& spec, double n, double phi) {
  return spec.alpha * std::abs(spec.p) * phi / std::pow(n, 1.0 - spec.alpha);
}

SectorMembership sector_membership(const SectorSpec& spec, Complex z, double n, double phi,
                                   double tolerance) {
  check_alpha(spec.alpha);
  if (spec.p == Complex(0.0, 0.0)) throw ValidationError("sector requires p != 0");
  SectorMembership out;
  if (z == Complex(0.0, 0.0)) return out;

  const double width = (1.0 - spec.alpha) * kTwoPi;
  const double hi = theta(spec.p) - width * static_cast<double>(spec.level);
  const double lo = hi - width;
  const double pos = wrap_from(std::arg(z), lo);
  const bool in_sector = pos > 0.0 && pos < width;
  const double r_in = sector_inner_radius(spec, n, phi);
  const double r = std::abs(z);

  out.near_boundary = std::abs(r - r_in) <= tolerance * r_in || pos < tolerance ||
                      std::abs(pos - width) < tolerance || pos > kTwoPi - tolerance;
  out.in_region = in_sector && r >= r_in;
  if (!out.in_region) return out;

  const double scale = 1.0 - spec.alpha;
  // arg h_{p,k}(z) = -w / (1 - alpha); compare with H(0, |delta| N, -alpha theta(p) / (1 - alpha)).
  const double w_plus = lo + pos;
  const auto plus = half_disk_angle(-w_plus / scale, -spec.alpha * theta(spec.p) / scale, tolerance);

  const SectorSpec mirror{-spec.p, spec.level, spec.alpha};
  const double w_minus = sector_argument(mirror, -z);
  HalfDiskTest minus;
  if (!std::isnan(w_minus)) {
    minus = half_disk_angle(-w_minus / scale, -spec.alpha * theta(mirror.p) / scale, tolerance);
  } else {
    minus.near_edge = true;
  }

  out.in_plus = plus.inside;
  out.in_minus_mirror = minus.inside;
  out.near_boundary = out.near_boundary || plus.near_edge || minus.near_edge;
  return out;
}

SectorClass sector_classify(const SectorSpec& spec, Complex z, double n, double phi,
                            double tolerance) {
  const auto m = sector_membership(spec, z, n, phi, tolerance);
  if (m.near_boundary) return SectorClass::boundary;
  if (!m.in_region) return SectorClass::outside;
  if (m.in_plus && !m.in_minus_mirror) return SectorClass::in_hc_plus;
  if (m.in_minus_mirror && !m.in_plus) return SectorClass::in_hc_minus_mirror;
  return SectorClass::boundary;
}

}  // namespace fracpair
