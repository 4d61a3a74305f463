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
#include <string>
#include <vector>

#include "fracpair/grid_geometry.hpp"
#include "fracpair/io.hpp"
#include "fracpair/level_powers.hpp"

namespace fracpair {

struct VerifyOptions {
  GridSpec grid;
  /// Convention used wherever pairs are classified by argument.  principal
  /// is wrong on purpose and must make ratio_branch and symmetry fail.
  BranchCut branch_cut = BranchCut::positive_real;
  std::uint64_t seed = 20260101;
  std::int64_t n = 12;  ///< N for the pair-measure properties
  int threads = 1;
};

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the invariant suite of every module with a fixed seed.
std::vector<PropertyResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<PropertyResult>& results);

Table verification_table(const std::vector<PropertyResult>& results);  // property, passed, detail

}  // namespace fracpair
