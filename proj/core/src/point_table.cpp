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

#include "fracpair/point_table.hpp"

#include <algorithm>
#include <limits>

#include "fracpair/errors.hpp"

namespace fracpair {

PointTable::PointTable(const GridSpec& grid, double radius)
    : points_(enumerate_disk_indexed(grid, radius)) {
  if (points_.empty()) return;
  if (points_.size() >= static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max())) {
    throw ValidationError("point table too large");
  }
  a_lo_ = a_hi_ = points_.front().a;
  b_lo_ = b_hi_ = points_.front().b;
  for (const auto& p : points_) {
    a_lo_ = std::min(a_lo_, p.a);
    a_hi_ = std::max(a_hi_, p.a);
    b_lo_ = std::min(b_lo_, p.b);
    b_hi_ = std::max(b_hi_, p.b);
  }
  width_ = b_hi_ - b_lo_ + 1;
  slots_.assign(static_cast<std::size_t>((a_hi_ - a_lo_ + 1) * width_), -1);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    slots_[static_cast<std::size_t>((p.a - a_lo_) * width_ + (p.b - b_lo_))] =
        static_cast<std::int32_t>(i);
  }
}

}  // namespace fracpair
