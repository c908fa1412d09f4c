// Copyright 2026 gpwitness contributors
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

#include "gpw/oracle.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "gpw/field.hpp"
#include "gpw/geometry.hpp"
#include "gpw/incidence.hpp"
#include "gpw/rng.hpp"

namespace gpw {
namespace {

TEST(BruteDimension, UnitPointOnTheLine) {
  // q=2, n=1, d=2, r=1 at (1:0): 4 of the 8 binary quadratics vanish.
  Gf2Field f2 = Gf2Field::with_degree(1);
  MonomialBasis b = MonomialBasis::make(1, 2);
  std::vector<Gf2Field::Elem> pt{f2.one(), f2.zero()};
  EXPECT_EQ(brute_dimension(f2, b, pt), 2u);
}

TEST(BruteDimension, AgreesWithStreamingRank) {
  Rng rng(71, 0);
  for (auto [p, e, r, n, d] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t,
                                                     std::uint32_t, std::uint32_t>>{
           {2, 1, 3, 1, 3}, {2, 1, 2, 2, 2}, {3, 1, 2, 2, 2}, {2, 2, 2, 1, 3}, {3, 1, 3, 1, 4},
           {5, 1, 2, 1, 2}}) {
    AnyField F = make_field(p, e, r);
    std::visit(
        [&](const auto& f) {
          MonomialBasis b = MonomialBasis::make(n, d);
          for (int it = 0; it < 10; ++it) {
            std::vector<typename std::decay_t<decltype(f)>::Elem> pt;
            bool nonzero = false;
            for (std::uint32_t i = 0; i <= n; ++i) {
              pt.push_back(f.sample(rng));
              nonzero = nonzero || !f.is_zero(pt.back());
            }
            if (!nonzero) pt[0] = f.one();
            normalize_point(f, pt);
            EXPECT_EQ(brute_dimension(f, b, pt), vanishing_dimension(f, b, pt).dim);
          }
        },
        F);
  }
}

TEST(BruteDimension, RefusesOversizedEnumerations) {
  Gf2Field f2 = Gf2Field::with_degree(1);
  MonomialBasis b = MonomialBasis::make(2, 5);  // m = 21, 2^21 > 2^20
  std::vector<Gf2Field::Elem> pt{f2.one(), f2.zero(), f2.zero()};
  EXPECT_THROW(brute_dimension(f2, b, pt), std::domain_error);
  OracleCaps loose;
  loose.max_forms = std::uint64_t(1) << 22;
  EXPECT_EQ(brute_dimension(f2, b, pt, loose), 20u);
}

TEST(BruteMu, FrozenLineValues) {
  EXPECT_EQ(brute_mu(2, 1, 2, 3), Rat(2, 3));
  EXPECT_EQ(brute_mu(2, 1, 2, 2), Rat(2, 5));
}

TEST(BruteMu, TrivialExtensionIsAlwaysOne) {
  for (std::uint64_t q : {2, 3, 4}) {
    for (std::uint32_t n = 1; n <= 2; ++n) {
      for (std::uint32_t d = 1; d <= 3; ++d) {
        EXPECT_EQ(brute_mu(q, n, d, 1), Rat(1)) << "q=" << q << " n=" << n << " d=" << d;
      }
    }
  }
}

TEST(MuLineFormula, FrozenValues) {
  EXPECT_EQ(mu_n1_exact(2, 2, 3), Rat(2, 3));
  EXPECT_EQ(mu_n1_exact(2, 2, 2), Rat(2, 5));
  EXPECT_EQ(mu_n1_exact(2, 2, 1), Rat(1));
  EXPECT_EQ(mu_n1_exact(7, 3, 1), Rat(1));
}

TEST(MuLineFormula, MatchesBruteForceOnAGrid) {
  for (std::uint64_t q : {2, 3}) {
    for (std::uint32_t d = 1; d <= 4; ++d) {
      for (std::uint64_t r = 1; r <= 4; ++r) {
        EXPECT_EQ(mu_n1_exact(q, d, r), brute_mu(q, 1, d, r))
            << "q=" << q << " d=" << d << " r=" << r;
      }
    }
  }
}

TEST(BruteReducibility, LinearFormsNeverFactor) {
  EXPECT_EQ(brute_reducibility(2, 1, 1), Rat(0));
  EXPECT_EQ(brute_reducibility(3, 2, 1), Rat(0));
}

TEST(BruteReducibility, BinaryQuadraticsOverF2) {
  // six of the seven nonzero binary quadratics are products of linear forms
  EXPECT_EQ(brute_reducibility(2, 1, 2), Rat(6, 7));
}

TEST(BruteReducibility, SplitBinaryQuadraticsMatchRootCounting) {
  // a split binary quadratic is a scalar times a degree-2 multiset of roots
  // in P^1: (q+1)(q+2)/2 multisets, q-1 scalars, against q^3-1 nonzero forms
  for (std::uint64_t q : {2, 3, 4, 5}) {
    Rat got = brute_reducibility(q, 1, 2);
    Rat want(Int(static_cast<unsigned long>(q + 1)) * (q + 2) / 2 * (q - 1),
             ipow(q, 3) - 1);
    want.canonicalize();
    EXPECT_EQ(got, want) << "q=" << q;
  }
}

TEST(BruteReducibility, CapIsEnforced) {
  EXPECT_THROW(brute_reducibility(2, 2, 6), std::domain_error);  // m=28
}

TEST(BrutePointCount, PlaneCurvesOverF2) {
  Gf2Field f2 = Gf2Field::with_degree(1);
  {
    // hyperplane x0 = 0 in P^2: a copy of P^1, 3 points
    MonomialBasis b = MonomialBasis::make(2, 1);
    // order: x2, x1, x0
    EXPECT_EQ(brute_point_count(f2, b, {0, 0, 1}), 3);
    // zero form vanishes everywhere: 7 points in P^2(F_2)
    EXPECT_EQ(brute_point_count(f2, b, {0, 0, 0}), 7);
  }
  {
    // x0*x1 = 0: two lines sharing a point, 3 + 3 - 1 = 5
    MonomialBasis b = MonomialBasis::make(2, 2);
    // order: x2^2, x1 x2, x1^2, x0 x2, x0 x1, x0^2
    EXPECT_EQ(brute_point_count(f2, b, {0, 0, 0, 0, 1, 0}), 5);
  }
}

TEST(BrutePointCount, MatchesPerPointDimensionStory) {
  // A form vanishes at P iff its coefficient vector is in the kernel space;
  // summing over forms: sum over points of [F(P)=0] equals sum over forms of
  // their point counts.  Spot-check the double count on one tiny instance.
  Gf2Field f4 = Gf2Field::with_degree(2);
  MonomialBasis b = MonomialBasis::make(1, 2);  // m = 3, 8 forms
  Int total_by_forms = 0;
  for (std::uint64_t v = 0; v < 8; ++v) {
    std::vector<std::uint64_t> coeffs{v & 1, (v >> 1) & 1, (v >> 2) & 1};
    total_by_forms += brute_point_count(f4, b, coeffs);
  }
  Int total_by_points = 0;
  CanonicalPointEnumerator en(f4, 1);
  std::vector<Gf2Field::Elem> pt;
  while (en.next(pt)) {
    std::uint64_t dim = brute_dimension(f4, b, pt);
    total_by_points += ipow(2, dim);
  }
  EXPECT_EQ(total_by_forms, total_by_points);
}

TEST(PrimePowerSplit, Basics) {
  EXPECT_EQ(prime_power_split(2), (std::pair<std::uint64_t, std::uint32_t>{2, 1}));
  EXPECT_EQ(prime_power_split(4), (std::pair<std::uint64_t, std::uint32_t>{2, 2}));
  EXPECT_EQ(prime_power_split(27), (std::pair<std::uint64_t, std::uint32_t>{3, 3}));
  EXPECT_EQ(prime_power_split(49), (std::pair<std::uint64_t, std::uint32_t>{7, 2}));
  EXPECT_THROW(prime_power_split(6), std::domain_error);
  EXPECT_THROW(prime_power_split(12), std::domain_error);
  EXPECT_THROW(prime_power_split(1), std::domain_error);
}

}  // namespace
}  // namespace gpw
