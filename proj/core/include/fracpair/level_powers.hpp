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

#include <vector>

#include "fracpair/grid_geometry.hpp"

namespace fracpair {

/// Where the argument function is cut.  positive_real is the convention used
/// throughout the library; principal exists only so that the verification
/// suite can run a negative control with a deliberately wrong cut.
enum class BranchCut { positive_real, principal };

/// Representative of arg(z) in [0, 2pi), with positive reals mapped to 0.
/// With BranchCut::principal, the representative in (-pi, pi].
/// Throws DomainError for z = 0.
double theta(Complex z, BranchCut cut = BranchCut::positive_real);

struct LevelPowerParams {
  double alpha = 0.5;
  int level = 0;
};

/// Level-k beta power |z|^beta exp(i beta (theta(z) + 2 pi k)).
Complex level_power(Complex z, double beta, int level, BranchCut cut = BranchCut::positive_real);

/// Same with beta = params.alpha; validates 0 < alpha < 1.
Complex level_power(Complex z, const LevelPowerParams& params);

enum class RatioBranch { level0, level_minus1 };

/// Which level the ratio z^[a,k] / z'^[a,k] lands on: level0 when
/// theta(z) >= theta(z'), level_minus1 otherwise.  Independent of k and a.
RatioBranch ratio_branch(Complex z, Complex z_prime, BranchCut cut = BranchCut::positive_real);

inline int level_of(RatioBranch branch) { return branch == RatioBranch::level0 ? 0 : -1; }

/// The b distinct b-th roots m^[1/b, j], j = 0..b-1.
std::vector<Complex> roots(Complex m, int b);

/// Open angular sector C_{p,k}: arguments in theta(p) - (1-alpha) 2pi (k, k+1).
struct SectorSpec {
  Complex p{1.0, 0.0};
  int level = 0;
  double alpha = 0.5;
};

/// Argument representative of z inside the sector's open interval, or NaN
/// when z lies outside (or on a boundary ray of) the sector.
double sector_argument(const SectorSpec& spec, Complex z);

/// Change of variables h_{p,k}(z) = |z|^(-1/(1-alpha)) exp(-i w / (1-alpha)),
/// with w the argument representative inside the sector.  Throws DomainError
/// for z outside the open sector.
Complex change_var_h(const SectorSpec& spec, Complex z);

/// Inner radius alpha |p| phi / N^(1-alpha) of the annulus in which the
/// half-sector decomposition applies.
double sector_inner_radius(const SectorSpec& spec, double n, double phi);

enum class SectorClass { in_hc_plus, in_hc_minus_mirror, outside, boundary };

/// Raw memberships behind sector_classify, exposed so that properties can
/// check disjointness directly.
struct SectorMembership {
  bool in_region = false;        ///< z in C_{p,k} minus the inner disk
  bool in_plus = false;          ///< z in HC_{p,k}
  bool in_minus_mirror = false;  ///< -z in HC_{-p,k}
  bool near_boundary = false;    ///< within tolerance of a defining ray or circle
};

SectorMembership sector_membership(const SectorSpec& spec, Complex z, double n, double phi,
                                   double tolerance = 1e-9);

/// Classifies z against HC_{p,k} and -HC_{-p,k}, which tile the sector
/// outside the inner disk up to a null set.  Ambiguous points (within
/// tolerance of a boundary, or claimed by both halves) come back as boundary.
SectorClass sector_classify(const SectorSpec& spec, Complex z, double n, double phi,
                            double tolerance = 1e-9);

}  // namespace fracpair
