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

namespace fracpair {

/// Limit of phi(N) / N^(1-alpha).
enum class LimitClass { zero, finite, infinite };

/// Either phi(N) = N^gamma or phi(N) = lambda N^(1-alpha).
struct ScalingRegime {
  enum class Kind { power_law, proportional };
  Kind kind = Kind::power_law;
  double value = 0.5;  ///< gamma for power_law, lambda for proportional

  static ScalingRegime power_law(double gamma) { return {Kind::power_law, gamma}; }
  static ScalingRegime proportional(double lambda) { return {Kind::proportional, lambda}; }
};

struct ScalingValues {
  double phi = 0.0;
  double psi = 0.0;
  LimitClass limit = LimitClass::zero;
  /// The finite limit lambda; 0 for the zero class and +inf for the infinite one.
  double lambda = 0.0;
};

/// Exponents closer than this to 1 - alpha count as the critical power law.
/// 1 - 1/3 and 2/3 differ by one ulp in double precision.
inline constexpr double kCriticalGammaTolerance = 1e-12;

void validate(const ScalingRegime& scaling);

LimitClass limit_class(const ScalingRegime& scaling, double alpha);
double limit_lambda(const ScalingRegime& scaling, double alpha);

double phi(const ScalingRegime& scaling, double alpha, double n);

/// (phi, psi = (N^(2-alpha) / phi)^2, limit class).
ScalingValues phi_psi(const ScalingRegime& scaling, double alpha, std::int64_t n);

std::string to_string(LimitClass limit);

}  // namespace fracpair
