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

#ifndef GPW_SEARCH_HPP_
#define GPW_SEARCH_HPP_

// Random search for witness points.  The analytic bounds leave a finite list
// of parameter windows where the density argument alone does not settle the
// expected dimension; this module enumerates that list, searches each case
// for an explicit point, and packages successes as replayable certificates.
//
// Sampling is uniform over F_{q^r}^{n+1} minus the zero tuple, followed by
// canonical normalization (first nonzero coordinate scaled to 1).  Every
// fiber of normalization has exactly q^r - 1 tuples, so canonical points
// stay uniform.  Each trial draws from its own deterministic stream
// (seed, trial index), so serial and parallel runs agree on the first
// success under the lowest-trial-wins rule.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpw/certificate.hpp"
#include "gpw/field.hpp"
#include "gpw/geometry.hpp"
#include "gpw/incidence.hpp"
#include "gpw/num.hpp"
#include "gpw/rng.hpp"

namespace gpw {

// Which window of the case list a tuple came from, in enumeration order;
// custom marks parameters supplied directly by the caller.
enum class CaseTag { i, ii, iii, iv, v, vi, vii, custom };

inline const char* to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::i: return "i";
    case CaseTag::ii: return "ii";
    case CaseTag::iii: return "iii";
    case CaseTag::iv: return "iv";
    case CaseTag::v: return "v";
    case CaseTag::vi: return "vi";
    case CaseTag::vii: return "vii";
    case CaseTag::custom: return "custom";
  }
  return "custom";
}

struct CaseParams {
  std::uint64_t q = 0;
  std::uint32_t n = 0;
  std::uint32_t d = 0;
  std::uint64_t r = 0;
  std::uint64_t m = 0;  // C(n+d, n)
  CaseTag tag = CaseTag::custom;
};

namespace search_internal {

inline std::uint64_t binom_checked_u64(std::uint64_t top, std::uint64_t k) {
  Int b = binom(top, k);
  if (!b.fits_ulong_p()) throw std::overflow_error("binomial exceeds 64 bits");
  return static_cast<std::uint64_t>(b.get_ui());
}

}  // namespace search_internal

// Builds a CaseParams, deriving m and enforcing the listed-case invariant:
// a non-custom tuple has n, d >= 2 and r strictly above C(n-1+d, n-1) (the
// window where a smaller ambient dimension would already settle the case).
inline CaseParams make_case(std::uint64_t q, std::uint32_t n, std::uint32_t d,
                            std::uint64_t r, CaseTag tag = CaseTag::custom) {
  if (q < 2 || n == 0 || d == 0 || r == 0)
    throw std::domain_error("make_case: need q >= 2 and n, d, r >= 1");
  CaseParams c;
  c.q = q;
  c.n = n;
  c.d = d;
  c.r = r;
  c.m = search_internal::binom_checked_u64(std::uint64_t(n) + d, n);
  c.tag = tag;
  if (tag != CaseTag::custom) {
    if (n < 2 || d < 2)
      throw std::domain_error("make_case: listed cases need n, d >= 2");
    std::uint64_t lower =
        search_internal::binom_checked_u64(std::uint64_t(n) - 1 + d, n - 1);
    if (r <= lower)
      throw std::domain_error(
          "make_case: listed cases need r > C(n-1+d, n-1)");
  }
  return c;
}

// The exhaustive list of parameter windows the general density bound leaves
// open, as tuples (q, n, d, r).  Members satisfy n, d >= 2 and
// r > C(n-1+d, n-1); overlapping windows are deduplicated with the
// lowest-numbered tag winning.  Sorted by (q, n, d, r).
inline std::vector<CaseParams> exceptional_cases() {
  using search_internal::binom_checked_u64;
  std::vector<CaseParams> out;

  auto lower_r = [](std::uint32_t n, std::uint32_t d) {
    return binom_checked_u64(std::uint64_t(n) - 1 + d, n - 1);
  };
  auto seen = [&out](std::uint64_t q, std::uint32_t n, std::uint32_t d,
                     std::uint64_t r) {
    for (const CaseParams& c : out)
      if (c.q == q && c.n == n && c.d == d && c.r == r) return true;
    return false;
  };
  auto add = [&](std::uint64_t q, std::uint32_t n, std::uint32_t d,
                 std::uint64_t r, CaseTag tag) {
    if (r <= lower_r(n, d)) return;   // standing constraint
    if (seen(q, n, d, r)) return;     // lowest-numbered tag wins
    out.push_back(make_case(q, n, d, r, tag));
  };

  // (i) q <= 3, n = 2, d <= 6, r <= m + 1.
  for (std::uint64_t q : {2ull, 3ull})
    for (std::uint32_t d = 2; d <= 6; ++d) {
      std::uint64_t m = binom_checked_u64(2 + d, 2);
      for (std::uint64_t r = 1; r <= m + 1; ++r) add(q, 2, d, r, CaseTag::i);
    }

  // (ii) q = 3, r <= 10.  n and d are bounded through r > C(n-1+d, n-1).
  for (std::uint32_t n = 2; n <= 16; ++n)
    for (std::uint32_t d = 2; d <= 16; ++d) {
      if (lower_r(n, d) >= 10) continue;
      for (std::uint64_t r = 1; r <= 10; ++r) add(3, n, d, r, CaseTag::ii);
    }

  // (iii) q = 2, r <= 24.
  for (std::uint32_t n = 2; n <= 32; ++n)
    for (std::uint32_t d = 2; d <= 32; ++d) {
      if (lower_r(n, d) >= 24) continue;
      for (std::uint64_t r = 1; r <= 24; ++r) add(2, n, d, r, CaseTag::iii);
    }

  // (iv)-(vii): q = 2 with r = m exactly.
  for (std::uint32_t d : {3u, 4u})
    for (std::uint32_t n = 2; n <= 35; ++n)
      add(2, n, d, binom_checked_u64(std::uint64_t(n) + d, n), CaseTag::iv);
  for (std::uint32_t d : {5u, 6u})
    for (std::uint32_t n = 2; n <= 12; ++n)
      add(2, n, d, binom_checked_u64(std::uint64_t(n) + d, n), CaseTag::v);
  for (std::uint32_t d : {7u, 8u})
    for (std::uint32_t n = 2; n <= 10; ++n)
      add(2, n, d, binom_checked_u64(std::uint64_t(n) + d, n), CaseTag::vi);
  add(2, 9, 9, binom_checked_u64(18, 9), CaseTag::vii);

  std::sort(out.begin(), out.end(), [](const CaseParams& a, const CaseParams& b) {
    if (a.q != b.q) return a.q < b.q;
    if (a.n != b.n) return a.n < b.n;
    if (a.d != b.d) return a.d < b.d;
    return a.r < b.r;
  });
  return out;
}

// The least ambient dimension that can still host an extension of degree r:
// the smallest n' >= 1 with r <= C(n' + d, n').  A positive success density
// in P^{n'} lifts to every larger ambient dimension, so searches may run in
// the reduced space.  For r <= d + 1 a line suffices.
inline std::uint32_t reduce_n(std::uint64_t /*q*/, std::uint32_t d,
                              std::uint64_t r) {
  if (d == 0 || r == 0) throw std::domain_error("reduce_n: need d, r >= 1");
  for (std::uint32_t np = 1;; ++np) {
    Int cap = binom(std::uint64_t(np) + d, np);
    if (Int(static_cast<unsigned long>(r)) <= cap) return np;
  }
}

struct SearchOutcome {
  bool found = false;
  Certificate cert;            // meaningful only when found
  std::uint64_t trials = 0;    // trials consumed (index of success + 1)
};

// Random search in a concrete field.  Draws n+1 uniform field elements per
// trial from the stream (seed, trial), rejects the all-zero tuple,
// normalizes, and accepts the first point whose vanishing space has the
// expected dimension.  Deterministic for fixed (params, field, seed).
template <typename Field>
SearchOutcome witness_search_in(const Field& field, const CaseParams& params,
                                std::uint64_t seed,
                                std::uint64_t max_trials = 1000) {
  if (field.q() != params.q || field.r() != params.r)
    throw std::domain_error("witness_search: field does not match parameters");
  MonomialBasis basis = MonomialBasis::make(params.n, params.d);
  std::uint64_t expected = basis.m > params.r ? basis.m - params.r : 0;

  SearchOutcome out;
  for (std::uint64_t trial = 0; trial < max_trials; ++trial) {
    Rng rng(seed, trial);
    std::vector<typename Field::Elem> coords;
    bool all_zero = true;
    do {
      coords.clear();
      all_zero = true;
      for (std::uint32_t i = 0; i <= params.n; ++i) {
        coords.push_back(field.sample(rng));
        if (!field.is_zero(coords.back())) all_zero = false;
      }
    } while (all_zero);
    normalize_point(field, coords);
    if (expected_dimension_holds(field, basis, coords)) {
      out.found = true;
      out.trials = trial + 1;
      out.cert = make_certificate(field, params.n, params.d, coords, expected, seed);
      return out;
    }
  }
  out.trials = max_trials;
  return out;
}

// Variant-dispatching front end: builds the lex-least tower for the case's
// field sizes unless the caller supplies one.
inline SearchOutcome witness_search(const CaseParams& params, const AnyField& field,
                                    std::uint64_t seed,
                                    std::uint64_t max_trials = 1000) {
  return std::visit(
      [&](const auto& f) { return witness_search_in(f, params, seed, max_trials); },
      field);
}

inline SearchOutcome witness_search(const CaseParams& params, std::uint64_t seed,
                                    std::uint64_t max_trials = 1000) {
  auto [p, e] = prime_power_split(params.q);
  AnyField field = make_field(static_cast<std::uint32_t>(p), e, params.r);
  return witness_search(params, field, seed, max_trials);
}

}  // namespace gpw

#endif  // GPW_SEARCH_HPP_
