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

#include "fracpair/scaling.hpp"

#include <cmath>
#include <limits>

#include "fracpair/errors.hpp"

namespace fracpair {

void validate(const ScalingRegime& scaling) {
  if (scaling.kind == ScalingRegime::Kind::power_law) {
    if (!(scaling.value > 0.0 && scaling.value < 1.0)) {
      throw ValidationError("power-law exponent gamma must lie in (0, 1)");
    }
  } else if (!(scaling.value > 0.0) || !std::isfinite(scaling.value)) {
    throw ValidationError("proportional scaling requires a finite lambda > 0");
  }
}

LimitClass limit_class(const ScalingRegime& scaling, double alpha) {
  validate(scaling);
  if (scaling.kind == ScalingRegime::Kind::proportional) return LimitClass::finite;
  const double critical = 1.0 - alpha;
  if (std::abs(scaling.value - critical) <= kCriticalGammaTolerance) return LimitClass::finite;
  return scaling.value < critical ? LimitClass::zero : LimitClass::infinite;
}

double limit_lambda(const ScalingRegime& scaling, double alpha) {
  switch (limit_class(scaling, alpha)) {
    case LimitClass::zero:
      return 0.0;
    case LimitClass::infinite:
      return std::numeric_limits<double>::infinity();
    case LimitClass::finite:
      break;
  }
  return scaling.kind == ScalingRegime::Kind::proportional ? scaling.value : 1.0;
}

double phi(const ScalingRegime& scaling, double alpha, double n) {
  validate(scaling);
  if (scaling.kind == ScalingRegime::Kind::power_law) return std::pow(n, scaling.value);
  return scaling.value * std::pow(n, 1.0 - alpha);
}

ScalingValues phi_psi(const ScalingRegime& scaling, double alpha, std::int64_t n) {
  if (n < 1) throw ValidationError("N must be >= 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ValidationError("alpha must lie in (0, 1)");
  const auto nd = static_cast<double>(n);
  ScalingValues out;
  out.phi = phi(scaling, alpha, nd);
  const double ratio = std::pow(nd, 2.0 - alpha) / out.phi;
  out.psi = ratio * ratio;
  out.limit = limit_class(scaling, alpha);
  out.lambda = limit_lambda(scaling, alpha);
  return out;
}

std::string to_string(LimitClass limit) {
  switch (limit) {
    case LimitClass::zero:
      return "zero";
    case LimitClass::finite:
      return "finite";
    case LimitClass::infinite:
      return "infinite";
  }
  return "unknown";
}

}  // namespace fracpair
