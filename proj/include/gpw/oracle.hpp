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
//
// Brute-force ground truth at desk scale.  Everything here computes by
// literal enumeration over forms or points, independent of the streaming
// rank machinery, so the two can be checked against each other.

#ifndef GPW_ORACLE_HPP_
#define GPW_ORACLE_HPP_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpw/field.hpp"
#include "gpw/fppoly.hpp"
#include "gpw/geometry.hpp"
#include "gpw/incidence.hpp"
#include "gpw/num.hpp"

namespace gpw {

// Enumeration ceilings.  Defaults match the documented desk-scale limits;
// callers may loosen them knowingly.
struct OracleCaps {
  std::uint64_t max_forms = std::uint64_t(1) << 20;       // q^m for dimension counts
  std::uint64_t max_points = 1000000;                     // q^{r(n+1)} for point sweeps
  std::uint64_t max_red_forms = std::uint64_t(1) << 18;   // q^m for reducibility
};

namespace internal {

inline std::uint64_t checked_power(std::uint64_t q, std::uint64_t exp, std::uint64_t cap,
                                   const char* what) {
  Int total = ipow(q, exp);
  if (total > Int(static_cast<unsigned long>(cap)))
    throw std::domain_error(std::string(what) + ": " + std::to_string(q) + "^" +
                            std::to_string(exp) + " exceeds the enumeration cap " +
                            std::to_string(cap));
  return mpz_get_ui(total.get_mpz_t());
}

}  // namespace internal

// Dimension of {F : F(P) = 0} by counting all q^m coefficient vectors whose
// form vanishes at P.  Coefficients are walked as base-p digits (e digits
// per F_q coefficient, one per power of the F_q generator y), so the running
// value updates in O(1) field additions per vector: when odometer digit i
// ticks over, the value changes by S_i = slot_i + sum_{k<i} slot_k, where
// slot (j,t) carries y^t * vals_j — digits below i wrap from p-1 to 0, and
// -(p-1) = 1 in characteristic p.
template <typename Field>
std::uint64_t brute_dimension(const Field& F, const MonomialBasis& basis,
                              const std::vector<typename Field::Elem>& point,
                              const OracleCaps& caps = {}) {
  const std::uint64_t q = F.q();
  const std::uint64_t p = F.p();
  const std::uint32_t e = F.e();
  internal::checked_power(q, basis.m, caps.max_forms, "brute_dimension");

  auto vals = eval_monomials(F, basis, point);
  std::vector<typename Field::Elem> slot;
  slot.reserve(basis.m * e);
  for (std::uint64_t j = 0; j < basis.m; ++j) {
    std::uint64_t pt_pow = 1;
    for (std::uint32_t t = 0; t < e; ++t) {
      slot.push_back(F.mul(F.from_uint(pt_pow), vals[j]));
      pt_pow *= p;
    }
  }
  std::vector<typename Field::Elem> step;
  step.reserve(slot.size());
  auto prefix = F.zero();
  for (const auto& s : slot) {
    step.push_back(F.add(s, prefix));
    prefix = F.add(prefix, s);
  }

  std::vector<std::uint64_t> digit(slot.size(), 0);
  auto val = F.zero();
  std::uint64_t count = 0;
  for (;;) {
    if (F.is_zero(val)) ++count;
    std::size_t i = 0;
    while (i < digit.size() && digit[i] == p - 1) digit[i++] = 0;
    if (i == digit.size()) break;
    ++digit[i];
    val = F.add(val, step[i]);
  }

  std::uint64_t dim = 0, c = count;
  while (c > 1) {
    if (c % q != 0) throw std::logic_error("vanishing-form count is not a power of q");
    c /= q;
    ++dim;
  }
  return dim;
}

// Exact proportion of points of P^n(F_{q^r}) at which the vanishing space
// has the expected dimension max(m - r, 0).  Every per-point dimension comes
// from brute_dimension, so this shares no code with the production rank path.
inline Rat brute_mu(std::uint64_t q, std::uint32_t n, std::uint32_t d, std::uint64_t r,
                    const OracleCaps& caps = {}) {
  auto [p, e] = prime_power_split(q);
  internal::checked_power(q, r * (n + 1), caps.max_points, "brute_mu");
  MonomialBasis basis = MonomialBasis::make(n, d);
  const std::uint64_t expected = basis.m > r ? basis.m - r : 0;

  AnyField F = make_field(static_cast<std::uint32_t>(p), e, r);
  Int hits = 0, total = 0;
  std::visit(
      [&](const auto& f) {
        CanonicalPointEnumerator en(f, n);
        std::vector<typename std::decay_t<decltype(f)>::Elem> pt;
        while (en.next(pt)) {
          ++total;
          if (brute_dimension(f, basis, pt, caps) == expected) ++hits;
        }
      },
      F);
  Rat mu(hits, total);
  mu.canonicalize();
  return mu;
}

// Closed formula for the n = 1 proportion: a point (theta : 1) qualifies
// exactly when theta generates a subfield no smaller than F_{q^min(r,d+1)},
// and (1 : 0) never does once r >= 2.  B counts the failing theta by summing
// exact-degree-k element counts over divisors k | r with k < min(r, d+1).
// For r = 1 every point qualifies.
inline Rat mu_n1_exact(std::uint64_t q, std::uint32_t d, std::uint64_t r) {
  if (r == 1) return Rat(1);
  Int B = 0;
  std::uint64_t kmax = std::min<std::uint64_t>(r, static_cast<std::uint64_t>(d) + 1);
  for (std::uint64_t k : divisors_u64(r)) {
    if (k >= kmax) continue;
    for (std::uint64_t j : divisors_u64(k)) B += moebius_u64(k / j) * ipow(q, j);
  }
  Int qr = ipow(q, r);
  Rat mu(qr - B, qr + 1);
  mu.canonicalize();
  return mu;
}

// Exact proportion t of nonzero degree-d forms over F_q that factor over
// F_q, found by enumerating every product of a degree-i and a degree-(d-i)
// form for 1 <= i <= d/2 and marking the results.  Matching the counting
// argument directly avoids any factorization machinery.
inline Rat brute_reducibility(std::uint64_t q, std::uint32_t n, std::uint32_t d,
                              const OracleCaps& caps = {}) {
  if (d == 1) return Rat(0);
  auto [p, e] = prime_power_split(q);
  MonomialBasis basis = MonomialBasis::make(n, d);
  std::uint64_t total = internal::checked_power(q, basis.m, caps.max_red_forms,
                                                 "brute_reducibility");
  fq::FqCtx ctx = fq::make_fq(static_cast<std::uint32_t>(p), e);

  std::vector<bool> reducible(total, false);
  for (std::uint32_t i = 1; i <= d / 2; ++i) {
    MonomialBasis bg = MonomialBasis::make(n, i);
    MonomialBasis bh = MonomialBasis::make(n, d - i);
    // index of each product monomial in the degree-d basis
    std::map<std::vector<std::uint32_t>, std::uint64_t> where;
    for (std::uint64_t j = 0; j < basis.m; ++j) where[basis.exps[j]] = j;
    std::vector<std::vector<std::uint64_t>> prod_index(
        bg.m, std::vector<std::uint64_t>(bh.m));
    for (std::uint64_t a = 0; a < bg.m; ++a) {
      for (std::uint64_t b = 0; b < bh.m; ++b) {
        std::vector<std::uint32_t> sum(basis.n + 1);
        for (std::uint32_t t = 0; t <= basis.n; ++t) sum[t] = bg.exps[a][t] + bh.exps[b][t];
        prod_index[a][b] = where.at(sum);
      }
    }

    std::uint64_t ng = internal::checked_power(q, bg.m, caps.max_red_forms, "brute_reducibility");
    std::uint64_t nh = internal::checked_power(q, bh.m, caps.max_red_forms, "brute_reducibility");
    std::vector<fq::FqElem> g(bg.m, ctx.zero()), h(bh.m, ctx.zero());
    for (std::uint64_t vg = 1; vg < ng; ++vg) {
      std::uint64_t t = vg;
      for (std::uint64_t a = 0; a < bg.m; ++a) {
        g[a] = ctx.from_uint(t % q);
        t /= q;
      }
      for (std::uint64_t vh = 1; vh < nh; ++vh) {
        t = vh;
        for (std::uint64_t b = 0; b < bh.m; ++b) {
          h[b] = ctx.from_uint(t % q);
          t /= q;
        }
        std::vector<fq::FqElem> c(basis.m, ctx.zero());
        for (std::uint64_t a = 0; a < bg.m; ++a) {
          if (ctx.is_zero(g[a])) continue;
          for (std::uint64_t b = 0; b < bh.m; ++b) {
            if (ctx.is_zero(h[b])) continue;
            std::uint64_t j = prod_index[a][b];
            c[j] = ctx.add(c[j], ctx.mul(g[a], h[b]));
          }
        }
        std::uint64_t idx = 0;
        for (std::uint64_t j = basis.m; j-- > 0;) idx = idx * q + ctx.to_uint(c[j]);
        reducible[idx] = true;
      }
    }
  }

  std::uint64_t marked = 0;
  for (std::uint64_t idx = 1; idx < total; ++idx) marked += reducible[idx] ? 1 : 0;
  Rat out(marked, total - 1);
  out.canonicalize();
  return out;
}

// Number of canonical points of P^n(F_{q^r}) where the form with the given
// F_q coefficients (values in [0, q), one per basis monomial) vanishes.
template <typename Field>
Int brute_point_count(const Field& F, const MonomialBasis& basis,
                      const std::vector<std::uint64_t>& coeffs, const OracleCaps& caps = {}) {
  if (coeffs.size() != basis.m) throw std::domain_error("coefficient count must equal m");
  internal::checked_power(F.q(), F.r() * (basis.n + 1), caps.max_points, "brute_point_count");
  std::vector<typename Field::Elem> embedded;
  embedded.reserve(basis.m);
  for (std::uint64_t v : coeffs) embedded.push_back(F.from_uint(v));

  Int count = 0;
  CanonicalPointEnumerator en(F, basis.n);
  std::vector<typename Field::Elem> pt;
  while (en.next(pt)) {
    MonomialEvaluator<Field> ev(F, basis, pt);
    auto sum = F.zero();
    for (std::uint64_t j = 0; j < basis.m; ++j) {
      if (coeffs[j] == 0) continue;
      sum = F.add(sum, F.mul(embedded[j], ev.value(j)));
    }
    if (F.is_zero(sum)) ++count;
  }
  return count;
}

}  // namespace gpw

#endif  // GPW_ORACLE_HPP_
