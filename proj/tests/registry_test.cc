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

#include "gpw/registry.hpp"

#include <map>
#include <set>
#include <string>

#include "gtest/gtest.h"

namespace gpw {
namespace {

std::map<std::string, CheckResult> run_all() {
  std::map<std::string, CheckResult> out;
  for (const RegistryRow& row : inequality_registry()) out[row.id] = row.run();
  return out;
}

TEST(RegistryShape, IdsAreUniqueAndStable) {
  std::vector<RegistryRow> rows = inequality_registry();
  EXPECT_EQ(rows.size(), 23u);
  std::set<std::string> ids;
  for (const RegistryRow& row : rows) {
    EXPECT_TRUE(ids.insert(row.id).second) << "duplicate id " << row.id;
    EXPECT_FALSE(row.regime.empty());
    EXPECT_FALSE(row.claim.empty());
  }
  for (const char* id :
       {"septic-reducible-sum", "octic-reducible-sum", "nonic-reducible-sum",
        "quartic-nine-eighths-cap", "square-field-product-gate",
        "incexc-gate-93", "incexc-gate-92", "geom-irred-d3-n36",
        "geom-irred-d5-n13", "geom-irred-d7-n11", "geom-irred-d9-n10",
        "surface-window-q4-head", "surface-window-q4-tail",
        "deep-extension-q2-head", "deep-extension-q2-tail",
        "deep-extension-q3-head", "deep-extension-q3-tail",
        "strong-branch-q4-head", "strong-branch-q4-tail",
        "strong-branch-q3-head", "strong-branch-q3-tail",
        "binary-window-head", "binary-window-tail"}) {
    EXPECT_EQ(ids.count(id), 1u) << "missing id " << id;
  }
}

TEST(RegistryShape, LookupByIdWorksAndRejectsUnknown) {
  RegistryRow row = registry_row("incexc-gate-93");
  EXPECT_TRUE(row.run().verified);
  EXPECT_THROW(registry_row("no-such-row"), std::invalid_argument);
}

TEST(ReducibleSums, MatchFrozenRationalsExactly) {
  std::map<std::string, CheckResult> res = run_all();
  // (d-1) * q * t(q,2,d) at q = 2, as exact rationals.
  EXPECT_EQ(res["septic-reducible-sum"].value.lo, Rat(Int(207), Int(512)));
  EXPECT_EQ(res["septic-reducible-sum"].value.hi, Rat(Int(207), Int(512)));
  EXPECT_EQ(res["octic-reducible-sum"].value.lo, Rat(Int(3717), Int(16384)));
  EXPECT_EQ(res["nonic-reducible-sum"].value.lo, Rat(Int(4165), Int(32768)));
  for (const char* id : {"septic-reducible-sum", "octic-reducible-sum",
                         "nonic-reducible-sum"}) {
    EXPECT_TRUE(res[id].verified) << id;
    EXPECT_EQ(res[id].limit, Rat(Int(1), Int(2))) << id;
    EXPECT_NE(res[id].note.find("matches"), std::string::npos) << id;
  }
}

TEST(ReducibleSums, ClosedFormsAgreeWithGenericBoundSymbolically) {
  // The frozen exponent lists must reproduce t_upper_bound at more field
  // sizes than the rows themselves sample.
  using registry_internal::scaled_power_sum;
  for (std::uint64_t q : {7ull, 8ull, 25ull}) {
    EXPECT_EQ(scaled_power_sum(q, 6, {5, 9, 11}),
              Rat(Int(6 * static_cast<unsigned long>(q))) * t_upper_bound(q, 2, 7));
    EXPECT_EQ(scaled_power_sum(q, 7, {6, 11, 14, 15}),
              Rat(Int(7 * static_cast<unsigned long>(q))) * t_upper_bound(q, 2, 8));
    EXPECT_EQ(scaled_power_sum(q, 8, {7, 13, 17, 19}),
              Rat(Int(8 * static_cast<unsigned long>(q))) * t_upper_bound(q, 2, 9));
  }
}

TEST(QuarticCap, EqualityAtSmallestFieldIsDetectedExactly) {
  CheckResult res = registry_row("quartic-nine-eighths-cap").run();
  EXPECT_TRUE(res.verified);
  EXPECT_EQ(res.value.lo, Rat(Int(9), Int(8)));
  EXPECT_EQ(res.value.hi, res.limit);
  EXPECT_NE(res.note.find("equality"), std::string::npos);
}

TEST(Gates, ProductGateHoldsAtItsParameters) {
  CheckResult res = registry_row("square-field-product-gate").run();
  EXPECT_TRUE(res.verified);
  EXPECT_GT(res.value.lo, Rat(Int(8), Int(5)));
  EXPECT_LT(res.value.hi, Rat(2));
}

TEST(Gates, DimensionGateFlipsBetween92And93) {
  std::map<std::string, CheckResult> res = run_all();
  EXPECT_TRUE(res["incexc-gate-93"].verified);
  EXPECT_LT(res["incexc-gate-93"].value.hi, res["incexc-gate-93"].limit);
  // One step below the threshold the expression exceeds 1, so outward
  // rounding cannot (and must not) certify it.
  EXPECT_FALSE(res["incexc-gate-92"].verified);
  EXPECT_GT(res["incexc-gate-92"].value.lo, Rat(1));
}

TEST(GeomIrred, AllFourBoundaryPairsCertify) {
  std::map<std::string, CheckResult> res = run_all();
  for (const char* id : {"geom-irred-d3-n36", "geom-irred-d5-n13",
                         "geom-irred-d7-n11", "geom-irred-d9-n10"}) {
    EXPECT_TRUE(res[id].verified) << id;
    EXPECT_LT(res[id].value.hi, res[id].limit) << id;
  }
}

TEST(RegimeSplits, AllHeadAndTailRowsCertify) {
  std::map<std::string, CheckResult> res = run_all();
  for (const char* id :
       {"surface-window-q4-head", "surface-window-q4-tail",
        "deep-extension-q2-head", "deep-extension-q2-tail",
        "deep-extension-q3-head", "deep-extension-q3-tail",
        "strong-branch-q4-head", "strong-branch-q4-tail",
        "strong-branch-q3-head", "strong-branch-q3-tail",
        "binary-window-head", "binary-window-tail"}) {
    EXPECT_TRUE(res[id].verified) << id;
    EXPECT_LT(res[id].value.hi, res[id].limit) << id;
  }
}

TEST(RegimeSplits, HeadRowsReportTheirWorstRow) {
  std::map<std::string, CheckResult> res = run_all();
  EXPECT_NE(res["surface-window-q4-head"].note.find("largest value at r = 5"),
            std::string::npos);
  EXPECT_NE(res["deep-extension-q2-head"].note.find("largest value at r = 20"),
            std::string::npos);
  EXPECT_NE(res["deep-extension-q3-head"].note.find("largest value at r = 6"),
            std::string::npos);
  EXPECT_NE(res["strong-branch-q3-head"].note.find("largest value at r = 11"),
            std::string::npos);
  EXPECT_NE(res["binary-window-head"].note.find("largest value at r = 25"),
            std::string::npos);
}

TEST(RegimeSplits, HeadValuesAreBracketedTightly) {
  std::map<std::string, CheckResult> res = run_all();
  // Worst head value of the large-field window sits at r = 5:
  //   2 * 4^(-5/2) + 5 * 3^(13/3) * 4^(-5)  in (0.632, 0.633).
  EXPECT_GT(res["surface-window-q4-head"].value.lo, Rat(Int(632), Int(1000)));
  EXPECT_LT(res["surface-window-q4-head"].value.hi, Rat(Int(633), Int(1000)));
  // Binary window at r = 25:
  //   462 * 2^(-25/2) + 5 * 23^(13/3) * 2^(-25)  in (0.198, 0.199).
  EXPECT_GT(res["binary-window-head"].value.lo, Rat(Int(198), Int(1000)));
  EXPECT_LT(res["binary-window-head"].value.hi, Rat(Int(199), Int(1000)));
  // And the widths are enclosure-tight.
  EXPECT_LT(res["surface-window-q4-head"].value.width(),
            qpow(Int(2), Int(-80)));
}

TEST(RegimeSplits, BudgetsReassembleTheBranchBounds) {
  // Each target equals the branch bound minus the constant parts, so the
  // row really proves the branch claim it is named after.
  std::map<std::string, Rat> limits;
  for (const RegistryRow& row : inequality_registry()) {
    CheckResult res = row.run();
    limits[row.id] = res.limit;
  }
  Rat nine_eighths(Int(9), Int(8));
  EXPECT_EQ(limits["surface-window-q4-head"], Rat(3) - Rat(1) - nine_eighths);
  EXPECT_EQ(limits["deep-extension-q2-head"],
            Rat(4) * Rat(1) - Rat(1) - nine_eighths);
  EXPECT_EQ(limits["deep-extension-q3-head"],
            Rat(4) * Rat(2) - Rat(1) - nine_eighths);
  EXPECT_EQ(limits["strong-branch-q4-head"],
            Rat(3) - Rat(1) - Rat(Int(1), Int(8)));
  EXPECT_EQ(limits["strong-branch-q3-head"],
            Rat(2) - Rat(1) - Rat(Int(1), Int(6)));
  EXPECT_EQ(limits["binary-window-head"],
            Rat(1) - Rat(Int(1), Int(2)) - Rat(Int(1), Int(4)));
  // Head and tail of a split always share one target.
  EXPECT_EQ(limits["surface-window-q4-head"], limits["surface-window-q4-tail"]);
  EXPECT_EQ(limits["deep-extension-q2-head"], limits["deep-extension-q2-tail"]);
  EXPECT_EQ(limits["deep-extension-q3-head"], limits["deep-extension-q3-tail"]);
  EXPECT_EQ(limits["strong-branch-q4-head"], limits["strong-branch-q4-tail"]);
  EXPECT_EQ(limits["strong-branch-q3-head"], limits["strong-branch-q3-tail"]);
  EXPECT_EQ(limits["binary-window-head"], limits["binary-window-tail"]);
}

TEST(RegimeSplits, DirectEvaluatorAgreesWithMajorantWhereBothApply) {
  // For r >= 14 the polynomial majorant must dominate the true value.
  for (std::uint64_t r : {14ull, 20ull, 40ull}) {
    Interval truth = extension_tail_value(2, r);
    Rat rr(static_cast<unsigned long>(r));
    Rat major = (rr - 3) * (rr - 4) *
                    internal::qpow_enclosure(2, Rat(rr / 2), 96).hi +
                (rr - 2) * (rr - 2) * (rr - 2) * (rr - 2) * (rr - 2) *
                    qpow(Int(2), -Int(static_cast<unsigned long>(r)));
    EXPECT_LT(truth.hi, major) << "r = " << r;
  }
}

TEST(RegimeSplits, TailValueIsMonotoneInFieldSize) {
  for (std::uint64_t r : {5ull, 9ull, 13ull}) {
    Interval at2 = extension_tail_value(2, r);
    Interval at3 = extension_tail_value(3, r);
    Interval at4 = extension_tail_value(4, r);
    EXPECT_GT(at2.lo, at3.hi) << "r = " << r;
    EXPECT_GT(at3.lo, at4.hi) << "r = " << r;
  }
  EXPECT_THROW(extension_tail_value(2, 3), std::domain_error);
}

}  // namespace
}  // namespace gpw
