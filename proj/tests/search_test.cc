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

#include "gpw/search.hpp"

#include <map>
#include <set>

#include "gpw/oracle.hpp"
#include "gtest/gtest.h"

namespace gpw {
namespace {

TEST(CaseList, ShapeIsFrozen) {
  std::vector<CaseParams> cases = exceptional_cases();
  EXPECT_EQ(cases.size(), 484u);

  std::map<CaseTag, int> tags;
  for (const CaseParams& c : cases) tags[c.tag]++;
  EXPECT_EQ(tags[CaseTag::i], 120);
  EXPECT_EQ(tags[CaseTag::ii], 10);
  EXPECT_EQ(tags[CaseTag::iii], 250);
  EXPECT_EQ(tags[CaseTag::iv], 65);
  EXPECT_EQ(tags[CaseTag::v], 20);
  EXPECT_EQ(tags[CaseTag::vi], 18);
  EXPECT_EQ(tags[CaseTag::vii], 1);
  EXPECT_EQ(tags[CaseTag::custom], 0);

  EXPECT_EQ(cases.front().q, 2u);
  EXPECT_EQ(cases.front().n, 2u);
  EXPECT_EQ(cases.front().d, 2u);
  EXPECT_EQ(cases.front().r, 4u);
  EXPECT_EQ(cases.back().q, 3u);
  EXPECT_EQ(cases.back().n, 3u);
  EXPECT_EQ(cases.back().d, 2u);
  EXPECT_EQ(cases.back().r, 10u);
}

TEST(CaseList, SortedAndDuplicateFree) {
  std::vector<CaseParams> cases = exceptional_cases();
  std::set<std::tuple<std::uint64_t, std::uint32_t, std::uint32_t, std::uint64_t>> seen;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    auto key = std::make_tuple(cases[i].q, cases[i].n, cases[i].d, cases[i].r);
    EXPECT_TRUE(seen.insert(key).second) << "duplicate at index " << i;
    if (i) {
      auto prev = std::make_tuple(cases[i - 1].q, cases[i - 1].n, cases[i - 1].d,
                                  cases[i - 1].r);
      EXPECT_LT(prev, key) << "order violation at index " << i;
    }
  }
}

TEST(CaseList, ContainsTheTwoLargestCases) {
  bool niner = false, quartic = false;
  for (const CaseParams& c : exceptional_cases()) {
    if (c.q == 2 && c.n == 9 && c.d == 9 && c.r == 48620) {
      niner = true;
      EXPECT_EQ(c.tag, CaseTag::vii);
      EXPECT_EQ(c.m, 48620u);
    }
    if (c.q == 2 && c.n == 35 && c.d == 4 && c.r == 82251) {
      quartic = true;
      EXPECT_EQ(c.tag, CaseTag::iv);
      EXPECT_EQ(c.m, 82251u);
    }
  }
  EXPECT_TRUE(niner);
  EXPECT_TRUE(quartic);
}

TEST(CaseList, RespectsTheStandingConstraints) {
  for (const CaseParams& c : exceptional_cases()) {
    EXPECT_GE(c.n, 2u);
    EXPECT_GE(c.d, 2u);
    Int lower = binom(std::uint64_t(c.n) - 1 + c.d, c.n - 1);
    EXPECT_GT(Int(static_cast<unsigned long>(c.r)), lower)
        << "(" << c.q << "," << c.n << "," << c.d << "," << c.r << ")";
    // Either the square-or-overshoot window (r related to m) or a short
    // extension window.
    bool square = c.r == c.m;
    bool overshoot = c.tag == CaseTag::i || c.tag == CaseTag::ii || c.tag == CaseTag::iii;
    EXPECT_TRUE(square || overshoot);
    if (c.tag == CaseTag::i) {
      EXPECT_LE(c.r, c.m + 1);
    }
    if (c.tag == CaseTag::ii) {
      EXPECT_LE(c.r, 10u);
    }
    if (c.tag == CaseTag::iii) {
      EXPECT_LE(c.r, 24u);
    }
  }
  // The constraint excludes this tuple: C(4, 2) = 6 is not exceeded by r = 6.
  for (const CaseParams& c : exceptional_cases())
    EXPECT_FALSE(c.q == 2 && c.n == 3 && c.d == 2 && c.r == 6);
}

TEST(CaseList, OverlapsCollapseToTheLowestTag) {
  std::map<std::tuple<std::uint64_t, std::uint32_t, std::uint32_t, std::uint64_t>, CaseTag>
      by_tuple;
  for (const CaseParams& c : exceptional_cases())
    by_tuple[std::make_tuple(c.q, c.n, c.d, c.r)] = c.tag;
  // In window (i) and also (iii)/(iv): stays (i).
  EXPECT_EQ(by_tuple.at({2, 2, 3, 10}), CaseTag::i);
  // Short ternary window beyond (i)'s reach.
  EXPECT_EQ(by_tuple.at({3, 2, 2, 8}), CaseTag::ii);
  // Short binary window beyond (i)'s reach.
  EXPECT_EQ(by_tuple.at({2, 2, 2, 8}), CaseTag::iii);
  // r = m = 20 <= 24 is already a short binary case.
  EXPECT_EQ(by_tuple.at({2, 3, 3, 20}), CaseTag::iii);
}

TEST(CaseList, FixtureBudgetCountIsStable) {
  std::uint64_t small = 0;
  for (const CaseParams& c : exceptional_cases())
    if (c.m <= 1000) ++small;
  EXPECT_EQ(small, 416u);
}

TEST(ReduceN, MatchesTheBinomialTable) {
  EXPECT_EQ(reduce_n(2, 2, 6), 2u);   // C(4, 2) = 6
  EXPECT_EQ(reduce_n(5, 2, 6), 2u);   // independent of q
  EXPECT_EQ(reduce_n(2, 3, 4), 1u);   // r <= d + 1: a line suffices
  EXPECT_EQ(reduce_n(2, 2, 7), 3u);   // 6 < 7 <= C(5, 2) = 10
  EXPECT_EQ(reduce_n(2, 5, 6), 1u);
  EXPECT_EQ(reduce_n(2, 2, 82251), 405u);
  EXPECT_THROW(reduce_n(2, 0, 5), std::domain_error);
  EXPECT_THROW(reduce_n(2, 2, 0), std::domain_error);
}

TEST(ReduceN, ReturnsTheMinimalAmbientDimension) {
  for (std::uint32_t d = 1; d <= 5; ++d)
    for (std::uint64_t r = 1; r <= 300; ++r) {
      std::uint32_t np = reduce_n(2, d, r);
      EXPECT_LE(Int(static_cast<unsigned long>(r)), binom(std::uint64_t(np) + d, np));
      if (np > 1) {
        EXPECT_GT(Int(static_cast<unsigned long>(r)),
                  binom(std::uint64_t(np) - 1 + d, np - 1));
      }
    }
}

TEST(MakeCase, EnforcesTheListedInvariant) {
  EXPECT_THROW(make_case(2, 3, 2, 6, CaseTag::iii), std::domain_error);
  EXPECT_THROW(make_case(2, 1, 2, 3, CaseTag::i), std::domain_error);
  EXPECT_THROW(make_case(1, 2, 2, 4), std::domain_error);
  CaseParams custom = make_case(2, 1, 2, 3);  // custom tuples may use n = 1
  EXPECT_EQ(custom.m, 3u);
  EXPECT_EQ(custom.tag, CaseTag::custom);
  CaseParams listed = make_case(2, 3, 2, 7, CaseTag::iii);
  EXPECT_EQ(listed.m, 10u);
}

TEST(WitnessSearch, FindsTinyWitnessesQuickly) {
  // Two thirds of the canonical points qualify here, so the fixed seed
  // lands a witness on trial 2.
  SearchOutcome s = witness_search(make_case(2, 1, 2, 3), 7);
  ASSERT_TRUE(s.found);
  EXPECT_EQ(s.trials, 2u);
  EXPECT_EQ(s.cert.claimed_dim, 0u);
  EXPECT_TRUE(verify_certificate(s.cert).ok);
  EXPECT_EQ(mu_n1_exact(2, 2, 3), Rat(Int(2), Int(3)));

  // m = 3 > r = 2 forces a nonzero expected dimension; 2/5 of points work.
  SearchOutcome t = witness_search(make_case(2, 1, 2, 2), 1);
  ASSERT_TRUE(t.found);
  EXPECT_EQ(t.cert.claimed_dim, 1u);
  EXPECT_TRUE(verify_certificate(t.cert).ok);
  EXPECT_EQ(mu_n1_exact(2, 2, 2), Rat(Int(2), Int(5)));
}

TEST(WitnessSearch, SucceedsAcrossSeeds) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SearchOutcome s = witness_search(make_case(2, 1, 2, 3), seed, 50);
    EXPECT_TRUE(s.found) << "seed " << seed;
    EXPECT_LE(s.trials, 10u) << "seed " << seed;
  }
}

TEST(WitnessSearch, ZeroBudgetMeansNotFound) {
  SearchOutcome s = witness_search(make_case(2, 1, 2, 3), 7, 0);
  EXPECT_FALSE(s.found);
  EXPECT_EQ(s.trials, 0u);
}

TEST(WitnessSearch, DeterministicForFixedSeed) {
  SearchOutcome a = witness_search(make_case(3, 2, 2, 4, CaseTag::i), 9);
  SearchOutcome b = witness_search(make_case(3, 2, 2, 4, CaseTag::i), 9);
  ASSERT_TRUE(a.found);
  ASSERT_TRUE(b.found);
  EXPECT_EQ(a.trials, b.trials);
  EXPECT_EQ(certificate_to_json(a.cert), certificate_to_json(b.cert));
}

TEST(WitnessSearch, RejectsMismatchedField) {
  AnyField wrong = make_field(2, 1, 4);
  EXPECT_THROW(witness_search(make_case(2, 1, 2, 3), wrong, 7), std::domain_error);
}

TEST(WitnessSearch, HandlesASquareCaseEndToEnd) {
  // r = m = 220: success requires the monomial values to span all of
  // F_(2^220), the regime the case list exists for.
  CaseParams c = make_case(2, 9, 3, 220, CaseTag::iv);
  SearchOutcome s = witness_search(c, 42);
  ASSERT_TRUE(s.found);
  EXPECT_EQ(s.cert.claimed_dim, 0u);
  VerifyOutcome v = verify_certificate(s.cert);
  EXPECT_TRUE(v.ok) << v.diagnostic;
}

TEST(WitnessSearch, CoversTheSmallestListedCases) {
  for (const CaseParams& c : exceptional_cases()) {
    if (c.m > 10) continue;
    SearchOutcome s = witness_search(c, 2026);
    EXPECT_TRUE(s.found) << "(" << c.q << "," << c.n << "," << c.d << "," << c.r << ")";
    if (s.found) {
      VerifyOutcome v = verify_certificate(s.cert);
      EXPECT_TRUE(v.ok) << v.diagnostic;
      std::uint64_t want = c.m > c.r ? c.m - c.r : 0;
      EXPECT_EQ(s.cert.claimed_dim, want);
    }
  }
}

}  // namespace
}  // namespace gpw
