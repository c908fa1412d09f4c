// Copyright 2026 The gpw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "property_suites.h"

namespace gpw {
namespace {

constexpr std::uint64_t kTrials = 1000;
constexpr std::uint64_t kSeed = 20260817;

TEST(Property, VanishingFormsFormASubspace) {
  props::PropertyOutcome out = props::run_subspace_law(kTrials, kSeed);
  EXPECT_EQ(out.failures, 0u) << out.first_failure;
  EXPECT_EQ(out.trials, kTrials);
}

TEST(Property, ScalingInvariance) {
  props::PropertyOutcome out = props::run_scaling_invariance(kTrials, kSeed);
  EXPECT_EQ(out.failures, 0u) << out.first_failure;
  EXPECT_EQ(out.trials, kTrials);
}

TEST(Property, FrobeniusInvariance) {
  props::PropertyOutcome out = props::run_frobenius_invariance(kTrials, kSeed);
  EXPECT_EQ(out.failures, 0u) << out.first_failure;
  EXPECT_EQ(out.trials, kTrials);
}

TEST(Property, CoordinateChangeInvariance) {
  props::PropertyOutcome out =
      props::run_coordinate_change_invariance(kTrials, kSeed);
  EXPECT_EQ(out.failures, 0u) << out.first_failure;
  EXPECT_EQ(out.trials, kTrials);
}

TEST(Property, CertificateRoundTrip) {
  props::PropertyOutcome out =
      props::run_certificate_roundtrip(kTrials, kSeed);
  EXPECT_EQ(out.failures, 0u) << out.first_failure;
  EXPECT_EQ(out.trials, kTrials);
}

TEST(Property, SearchDeterminism) {
  props::PropertyOutcome out = props::run_search_determinism(kTrials, kSeed);
  EXPECT_EQ(out.failures, 0u) << out.first_failure;
  EXPECT_EQ(out.trials, kTrials);
}

}  // namespace
}  // namespace gpw
