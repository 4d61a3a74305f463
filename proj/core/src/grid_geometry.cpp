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

#include "fracpair/grid_geometry.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fracpair/errors.hpp"

namespace fracpair {

namespace {

double cross(Complex u, Complex v) { return u.real() * v.imag() - u.imag() * v.real(); }

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::vector<double> parse_reals(std::string_view text, std::size_t expected, const char* what) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
      throw ValidationError(std::string("cannot parse ") + what + " component '" +
                            std::string(field) + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  if (out.size() != expected) {
    throw ValidationError(std::string(what) + " expects " + std::to_string(expected) +
                          " comma-separated reals, got " + std::to_string(out.size()));
  }
  return out;
}

}  // namespace

double signed_area(const LatticeBasis& basis) { return cross(basis.b1, basis.b2); }

void validate(const LatticeBasis& basis) {
  if (!finite(basis.b1) || !finite(basis.b2)) {
    throw ValidationError("lattice basis has a non-finite component");
  }
  const double scale = std::abs(basis.b1) * std::abs(basis.b2);
  if (scale == 0.0 || std::abs(signed_area(basis)) <= 1e-14 * scale) {
    throw ValidationError("degenerate lattice basis: vectors do not span C over R");
  }
}

void validate(const GridSpec& grid) {
  validate(grid.basis);
  if (!finite(grid.offset)) throw ValidationError("grid offset is not finite");
}

Complex grid_point(const GridSpec& grid, std::int64_t a, std::int64_t b) {
  const auto da = static_cast<double>(a);
  const auto db = static_cast<double>(b);
  return {grid.offset.real() + da * grid.basis.b1.real() + db * grid.basis.b2.real(),
          grid.offset.imag() + da * grid.basis.b1.imag() + db * grid.basis.b2.imag()};
}

LatticeBasis reduce_basis(const LatticeBasis& basis) {
  validate(basis);
  Complex u = basis.b1;
  Complex v = basis.b2;
  if (std::norm(u) > std::norm(v)) std::swap(u, v);
  for (int iter = 0; iter < 10000; ++iter) {
    // Round half to even so that |mu| = 1/2 is left untouched.
    const double mu = std::nearbyint((v * std::conj(u)).real() / std::norm(u));
    if (mu != 0.0) v -= mu * u;
    if (std::norm(v) < std::norm(u)) {
      std::swap(u, v);
      continue;
    }
    break;
  }
  return {u, v};
}

GridStats grid_stats(const GridSpec& grid) {
  validate(grid);
  const LatticeBasis reduced = reduce_basis(grid.basis);
  GridStats stats;
  stats.covolume = std::abs(signed_area(reduced));
  stats.systole_lattice = std::abs(reduced.b1);
  stats.diameter = std::max(std::abs(reduced.b1 + reduced.b2), std::abs(reduced.b1 - reduced.b2));

  // Some nonzero grid point lies within one diameter of the origin.
  const auto near = enumerate_disk(grid, stats.diameter * (1.0 + 1e-9));
  double best = std::numeric_limits<double>::infinity();
  for (const Complex& m : near) best = std::min(best, std::abs(m));
  stats.systole_grid = best;
  return stats;
}

std::vector<GridPoint> enumerate_disk_indexed(const GridSpec& grid, double x) {
  validate(grid);
  if (!(x >= 0.0)) throw ValidationError("enumerate_disk radius must be >= 0");
  std::vector<GridPoint> out;
  if (x == 0.0) return out;

  const Complex b1 = grid.basis.b1;
  const Complex b2 = grid.basis.b2;
  const double det = cross(b1, b2);
  // Coordinates of the origin relative to the grid: -offset = a0 b1 + c0 b2.
  const Complex w0 = -grid.offset;
  const double a0 = cross(w0, b2) / det;
  const double c0 = cross(b1, w0) / det;
  const double ra = x * std::abs(b2) / std::abs(det);
  const double rc = x * std::abs(b1) / std::abs(det);

  const auto a_lo = static_cast<std::int64_t>(std::floor(a0 - ra)) - 1;
  const auto a_hi = static_cast<std::int64_t>(std::ceil(a0 + ra)) + 1;
  const auto c_lo = static_cast<std::int64_t>(std::floor(c0 - rc)) - 1;
  const auto c_hi = static_cast<std::int64_t>(std::ceil(c0 + rc)) + 1;
  const double x2 = x * x;

  for (std::int64_t a = a_lo; a <= a_hi; ++a) {
    for (std::int64_t c = c_lo; c <= c_hi; ++c) {
      const Complex z = grid_point(grid, a, c);
      const double r2 = std::norm(z);
      if (r2 > 0.0 && r2 <= x2) out.push_back({a, c, z});
    }
  }
  return out;
}

std::vector<Complex> enumerate_disk(const GridSpec& grid, double x) {
  const auto indexed = enumerate_disk_indexed(grid, x);
  std::vector<Complex> out;
  out.reserve(indexed.size());
  for (const auto& p : indexed) out.push_back(p.z);
  return out;
}

double power_sum(const GridSpec& grid, double beta, double x) {
  double sum = 0.0;
  for (const Complex& m : enumerate_disk(grid, x)) sum += std::pow(std::abs(m), beta);
  return sum;
}

double leading_term(double beta, double x, double covolume) {
  if (!(beta > -2.0)) throw DomainError("leading_term requires beta > -2");
  if (!(x > 0.0) || !(covolume > 0.0)) {
    throw ValidationError("leading_term requires x > 0 and covolume > 0");
  }
  return 2.0 * std::numbers::pi / covolume * std::pow(x, beta + 2.0) / (beta + 2.0);
}

std::int64_t count_near_line(const GridSpec& grid, std::span<const double> envelope, int n_max) {
  if (n_max < 1) throw ValidationError("count_near_line requires N >= 1");
  if (envelope.size() < static_cast<std::size_t>(n_max)) {
    throw ValidationError("envelope must provide one maximum per unit interval up to N");
  }
  for (double g : envelope) {
    if (!(g >= 0.0)) throw ValidationError("envelope values must be nonnegative");
  }
  std::int64_t count = 0;
  for (const Complex& m : enumerate_disk(grid, n_max)) {
    if (m.real() < 0.0) continue;
    const auto cell = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(m.real())));
    if (std::abs(m.imag()) <= envelope[static_cast<std::size_t>(cell - 1)]) ++count;
  }
  return count;
}

double near_line_bound(const GridStats& stats, std::span<const double> envelope) {
  double sum = 0.0;
  for (double g : envelope) sum += (1.0 + stats.diameter) * (g + stats.diameter);
  return 4.0 * sum / stats.covolume;
}

GridSpec gaussian_integers() { return {}; }

GridSpec hexagonal_grid() {
  return {{Complex(1.0, 0.0), Complex(0.5, std::sqrt(3.0) / 2.0)}, Complex(0.0, 0.0)};
}

LatticeBasis parse_basis(std::string_view text) {
  const auto v = parse_reals(text, 4, "basis");
  LatticeBasis basis{Complex(v[0], v[1]), Complex(v[2], v[3])};
  validate(basis);
  return basis;
}

Complex parse_offset(std::string_view text) {
  const auto v = parse_reals(text, 2, "offset");
  return {v[0], v[1]};
}

}  // namespace fracpair
