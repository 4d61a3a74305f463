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

#include <gtest/gtest.h>

#include <cmath>

#include "fracpair/errors.hpp"
#include "fracpair/scaling.hpp"

using namespace fracpair;

TEST(PhiPsi, exotic_config) {
  const auto v = phi_psi(ScalingRegime::power_law(2.0 / 3.0), 1.0 / 3.0, 10);
  EXPECT_NEAR(v.phi, 4.6415888336127789, 1e-14);
  EXPECT_NEAR(v.psi, 100.0, 1e-12);
  EXPECT_EQ(v.limit, LimitClass::finite);
  EXPECT_EQ(v.lambda, 1.0);
}

TEST(PhiPsi, zero_regime) {
  const auto v = phi_psi(ScalingRegime::power_law(0.25), 0.5, 16);
  EXPECT_DOUBLE_EQ(v.phi, 2.0);
  EXPECT_DOUBLE_EQ(v.psi, 1024.0);
  EXPECT_EQ(v.limit, LimitClass::zero);
  EXPECT_EQ(v.lambda, 0.0);
}

TEST(PhiPsi, proportional) {
  const auto v = phi_psi(ScalingRegime::proportional(2.0), 0.5, 100);
  EXPECT_DOUBLE_EQ(v.phi, 20.0);
  EXPECT_DOUBLE_EQ(v.psi, 2500.0);
  EXPECT_EQ(v.limit, LimitClass::finite);
  EXPECT_EQ(v.lambda, 2.0);
}

TEST(PhiPsi, infinite) {
  const auto v = phi_psi(ScalingRegime::power_law(0.9), 0.5, 100);
  EXPECT_EQ(v.limit, LimitClass::infinite);
  EXPECT_TRUE(std::isinf(v.lambda));
}

TEST(PhiPsi, psi_identity) {
  for (double alpha : {0.2, 1.0 / 3.0, 0.5, 0.8}) {
    for (double gamma : {0.1, 0.5, 0.95}) {
      for (std::int64_t n : {1, 7, 123, 4000}) {
        const auto v = phi_psi(ScalingRegime::power_law(gamma), alpha, n);
        const double want = std::pow(static_cast<double>(n), 2 * (2 - alpha - gamma));
        EXPECT_NEAR(v.psi / want, 1.0, 1e-12);
      }
    }
  }
}

TEST(LimitClass, critical_tolerance) {
  EXPECT_EQ(limit_class(ScalingRegime::power_law(1.0 - 1.0 / 3.0), 1.0 / 3.0), LimitClass::finite);
  EXPECT_EQ(limit_class(ScalingRegime::power_law(2.0 / 3.0), 1.0 / 3.0), LimitClass::finite);
  EXPECT_EQ(limit_class(ScalingRegime::power_law(2.0 / 3.0 - 1e-9), 1.0 / 3.0), LimitClass::zero);
  EXPECT_EQ(limit_class(ScalingRegime::power_law(2.0 / 3.0 + 1e-9), 1.0 / 3.0), LimitClass::infinite);
  EXPECT_EQ(limit_lambda(ScalingRegime::proportional(0.7), 0.3), 0.7);
  EXPECT_EQ(to_string(LimitClass::finite), "finite");
}

TEST(Validate, rejects) {
  EXPECT_THROW(validate(ScalingRegime::power_law(0.0)), ValidationError);
  EXPECT_THROW(validate(ScalingRegime::power_law(1.0)), ValidationError);
  EXPECT_THROW(validate(ScalingRegime::power_law(NAN)), ValidationError);
  EXPECT_THROW(validate(ScalingRegime::proportional(0.0)), ValidationError);
  EXPECT_THROW(validate(ScalingRegime::proportional(-1.0)), ValidationError);
  EXPECT_NO_THROW(validate(ScalingRegime::proportional(3.0)));
}
