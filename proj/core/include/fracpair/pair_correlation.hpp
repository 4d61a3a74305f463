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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fracpair/grid_geometry.hpp"
#include "fracpair/level_powers.hpp"
#include "fracpair/scaling.hpp"

namespace fracpair {

enum class MeasureMode { level_separated, full_riemann, roots_intro };
enum class Enumeration { brute_force, pruned };

struct CorrelationConfig {
  double alpha = 0.5;
  GridSpec grid;
  std::int64_t n = 10;
  int n_prime = 0;
  int n_second = 1;
  ScalingRegime scaling;
  double support_radius = 1.5;
  MeasureMode mode = MeasureMode::level_separated;
  int b = 2;  ///< roots_intro only
  Enumeration enumeration = Enumeration::pruned;
  double safety = 2.0;
  /// Worker threads; 0 picks the hardware concurrency.  Work is split into a
  /// fixed set of chunks merged in chunk order, so the output is bit-identical
  /// for every thread count.
  int threads = 1;
  /// Used only to classify pairs in decompose_pm.  Anything other than
  /// positive_real is a deliberately wrong convention (negative control).
  BranchCut branch_cut = BranchCut::positive_real;
};

/// Throws ValidationError when the configuration breaks an invariant.
void validate(const CorrelationConfig& config);

struct WeightedPointCloud {
  std::vector<Complex> points;
  double weight = 0.0;
  /// Number of Dirac masses before the support restriction.  Known only for
  /// brute-force enumeration.
  std::optional<std::int64_t> total_raw_pairs;

  double mass() const { return weight * static_cast<double>(points.size()); }
};

ScalingValues scaling_values(const CorrelationConfig& config);

/// Search radius for p = n - m in pruned enumeration: every pair whose scaled
/// difference lies in D(0, support_radius) has |n - m| at most this value.
double prune_radius(const CorrelationConfig& config);
double prune_radius(const CorrelationConfig& config, double support_radius);

/// Level-separated measure.  Points are stored level by level, k = -N'..N''-1,
/// each block being the level-0 cloud rotated by exp(2 pi i alpha k).
WeightedPointCloud build_level_measure(const CorrelationConfig& config);

/// Level-separated measure followed by the adjacent-level cross terms,
/// k = -N'..N''-2.
WeightedPointCloud build_full_measure(const CorrelationConfig& config);

/// Differences of b-th roots N^gamma (v - u), u^b = m, v^b = n.
WeightedPointCloud build_roots_measure(const CorrelationConfig& config);

/// Dispatches on config.mode.
WeightedPointCloud build_measure(const CorrelationConfig& config);

/// phi (n^[alpha,k] - m^[alpha,k]) for all pairs, computed directly at level
/// k (no rotation), restricted to the support.
WeightedPointCloud level_difference_cloud(const CorrelationConfig& config, int level);

struct PlusMinusDecomposition {
  WeightedPointCloud plus;      ///< theta(n) > theta(m)
  WeightedPointCloud minus;     ///< theta(n) < theta(m)
  WeightedPointCloud diagonal;  ///< theta(n) == theta(m)
};

/// Level-0 pairs split by the sign of theta(n) - theta(m).  Values are formed
/// as phi m^[alpha,0] ((n/m)^[alpha,l] - 1) with l from ratio_branch.
PlusMinusDecomposition decompose_pm(const CorrelationConfig& config);

/// card{(n, m) : theta(n) < theta(m), phi |n^[alpha,k+1] - m^[alpha,k]| <= A}.
std::int64_t cross_level_count(const CorrelationConfig& config, double support_radius,
                               int level);

/// True when n and m lie on the same open ray from the origin.
bool same_direction(Complex n, Complex m);

struct MultisetMatch {
  bool equal = false;
  std::size_t unmatched = 0;
  double max_distance = 0.0;  ///< over matched pairs
};

/// Bijective matching of two point multisets with point-wise tolerance.
MultisetMatch match_multisets(std::span<const Complex> a, std::span<const Complex> b,
                              double tolerance);

/// Same weight (1e-12 relative) and matching point multisets.
bool measures_match(const WeightedPointCloud& a, const WeightedPointCloud& b, double tolerance);

}  // namespace fracpair
