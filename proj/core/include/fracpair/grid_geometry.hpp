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

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace fracpair {

using Complex = std::complex<double>;

/// Basis of a rank-2 discrete subgroup of C, i.e. the lattice b1*Z + b2*Z.
struct LatticeBasis {
  Complex b1{1.0, 0.0};
  Complex b2{0.0, 1.0};
};

/// A Z-grid: offset + lattice.  An offset of zero makes the grid a lattice.
struct GridSpec {
  LatticeBasis basis;
  Complex offset{0.0, 0.0};
};

struct GridStats {
  double covolume = 0.0;
  double systole_lattice = 0.0;
  double systole_grid = 0.0;
  /// Diagonal of the reduced-basis parallelogram, max(|b1+b2|, |b1-b2|).
  /// This bounds the minimal fundamental-domain diameter from above, which
  /// is all that the counting bounds below need.
  double diameter = 0.0;
};

/// A grid point together with its integer coordinates in the grid's basis.
struct GridPoint {
  std::int64_t a = 0;
  std::int64_t b = 0;
  Complex z;
};

/// Signed area Im(conj(b1) * b2).
double signed_area(const LatticeBasis& basis);

/// Throws ValidationError unless both vectors are finite and span C over R.
void validate(const LatticeBasis& basis);
void validate(const GridSpec& grid);

/// The point offset + a*b1 + b*b2.  Every module computes grid points through
/// this one expression so that equal coordinates give bit-identical values.
Complex grid_point(const GridSpec& grid, std::int64_t a, std::int64_t b);

/// Lagrange-Gauss reduction.  The result spans the same lattice, satisfies
/// |b1| <= |b2| and |Re(b2 conj(b1))| <= |b1|^2 / 2, and |b1| is the systole.
LatticeBasis reduce_basis(const LatticeBasis& basis);

GridStats grid_stats(const GridSpec& grid);

/// All grid points m with 0 < |m| <= x, ordered lexicographically on (a, b).
std::vector<Complex> enumerate_disk(const GridSpec& grid, double x);
std::vector<GridPoint> enumerate_disk_indexed(const GridSpec& grid, double x);

/// Sum of |m|^beta over 0 < |m| <= x, by direct summation.
double power_sum(const GridSpec& grid, double beta, double x);

/// Main term (2 pi / covolume) x^(beta+2) / (beta+2) of the power sum.
/// Throws DomainError for beta <= -2.
double leading_term(double beta, double x, double covolume);

/// Number of grid points m with 0 < |m| <= n_max, Re(m) >= 0 and
/// |Im(m)| <= g(Re(m)), where the step envelope g equals envelope[x-1] on
/// (x-1, x].  Points on the imaginary axis use envelope[0].
std::int64_t count_near_line(const GridSpec& grid, std::span<const double> envelope,
                             int n_max);

/// Upper bound 4 * sum_x (1 + diam)(g_x + diam) / covol for count_near_line.
double near_line_bound(const GridStats& stats, std::span<const double> envelope);

/// Common grids.
GridSpec gaussian_integers();
GridSpec hexagonal_grid();

/// Parses "re1,im1,re2,im2" (basis) and "re,im" (offset).
LatticeBasis parse_basis(std::string_view text);
Complex parse_offset(std::string_view text);

}  // namespace fracpair
