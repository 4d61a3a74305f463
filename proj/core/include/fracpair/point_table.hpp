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
#include <vector>

#include "fracpair/grid_geometry.hpp"

namespace fracpair {

/// Grid points of a disk with a dense lookup from integer coordinates to
/// position in the (lexicographically ordered) point list.
class PointTable {
 public:
  PointTable() = default;
  PointTable(const GridSpec& grid, double radius);

  const std::vector<GridPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  /// Index of the point with coordinates (a, b), or -1 when absent.
  std::int64_t find(std::int64_t a, std::int64_t b) const {
    if (a < a_lo_ || a > a_hi_ || b < b_lo_ || b > b_hi_) return -1;
    return slots_[static_cast<std::size_t>((a - a_lo_) * width_ + (b - b_lo_))];
  }

 private:
  std::vector<GridPoint> points_;
  std::vector<std::int32_t> slots_;
  std::int64_t a_lo_ = 0, a_hi_ = -1, b_lo_ = 0, b_hi_ = -1, width_ = 0;
};

}  // namespace fracpair
