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
// Certified calculators for the closed-form estimates behind the witness
// search: the Lang-Weil style error term, reducible-form proportions, lower
// bounds on the success proportion, hypersurface counts, and the assorted
// one-shot inequality checks that decide which parameter regimes need no
// explicit search.  Exact rationals throughout; irrational atoms (square and
// cube roots) enter only as outward-rounded enclosures.

#ifndef GPW_BOUNDS_HPP_
#define GPW_BOUNDS_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpw/enclosure.hpp"
#include "gpw/num.hpp"

namespace gpw {

enum class Rounding { down, up };

// Error term for points on a hypersurface of degree d over a field of size
// q_power: (d-1)(d-2) q^(-1/2) + 5 d^(13/3) q^(-1).
inline Interval delta_interval(const Int& q_power, const Int& d,
                               unsigned prec = kDefaultRootPrecision) {
  if (q_power < 2) throw std::domain_error("delta: field size must be at least 2");
  if (d < 1) throw std::domain_error("delta: degree must be at least 1");
  Interval inv_sqrt_q = pow_frac(Rat(q_power), Int(-1), 2, prec);
  Interval d_13_3 = pow_frac(Rat(d), Int(13), 3, prec);
  Rat c1(Int((d - 1) * (d - 2)));
  Rat inv_q(Int(1), q_power);
  return c1 * inv_sqrt_q + Rat(5) * (d_13_3 * Interval::exact(inv_q));
}

inline Rat delta(const Int& q_power, const Int& d, Rounding dir,
                 unsigned prec = kDefaultRootPrecision) {
  Interval iv = delta_interval(q_power, d, prec);
  return dir == Rounding::up ? iv.hi : iv.lo;
}

// N_i = C(n+d,n) - C(n+i,n) - C(n+d-i,n); can be negative for n = 1.
inline Int reducible_exponent(std::uint32_t n, std::uint32_t d, std::uint32_t i) {
  return binom(n + d, n) - binom(n + i, n) - binom(std::uint64_t(n) + d - i, n);
}

// Upper bound on the proportion t of nonzero degree-d forms that factor:
// sum over i = 1..d/2 of q^(-N_i), exactly.
inline Rat t_upper_bound(std::uint64_t q, std::uint32_t n, std::uint32_t d) {
  if (n < 1 || d < 1) throw std::domain_error("t_upper_bound: need n, d >= 1");
  Rat total(0);
  for (std::uint32_t i = 1; i <= d / 2; ++i)
    total += qpow(Int(static_cast<unsigned long>(q)), -reducible_exponent(n, d, i));
  return total;
}

// Classifies t_upper_bound * (d-1) against the two thresholds the search
// analysis uses.  half_over_q is the strong regime (n >= 3, or n = 2 with
// d >= 7); nine_eighths covers the remaining small-surface cases.
enum class TThreshold { half_over_q, nine_eighths, fail };

inline TThreshold t_threshold_check(std::uint64_t q, std::uint32_t n, std::uint32_t d) {
  if (n < 2) throw std::domain_error("t_threshold_check: need n >= 2");
  Rat scaled = t_upper_bound(q, n, d) * Rat(Int(d) - 1);
  if (scaled <= Rat(Int(1), Int(2) * Int(static_cast<unsigned long>(q))))
    return TThreshold::half_over_q;
  if (scaled <= Rat(9, 8)) return TThreshold::nine_eighths;
  return TThreshold::fail;
}

inline const char* to_string(TThreshold v) {
  switch (v) {
    case TThreshold::half_over_q: return "half_over_q";
    case TThreshold::nine_eighths: return "nine_eighths";
    default: return "fail";
  }
}

// Lower bound on the proportion mu of points with the expected vanishing
// dimension, given an upper bound t_val for the reducible proportion.
// Branches on r <= m vs r > m; d = 1 has an exact hyperplane count and needs
// no error term.  The returned interval's lo endpoint is the certified bound.
inline Interval mu_lower_bound(std::uint64_t q, std::uint32_t n, std::uint32_t d, std::uint64_t r,
                               const Rat& t_val, unsigned prec = kDefaultRootPrecision) {
  if (n < 1 || d < 1) throw std::domain_error("mu_lower_bound: need n, d >= 1");
  if (t_val < 0 || t_val > 1) throw std::domain_error("mu_lower_bound: t must be in [0, 1]");
  if (r == 1) return Interval::exact(Rat(1));
  Int m = binom(n + d, n);
  Int qi(static_cast<unsigned long>(q));
  Int ri(static_cast<unsigned long>(r));
  Rat qm1(qi - 1);
  if (d == 1) {
    Rat val = (Int(ri) <= m) ? Rat(1) - (qpow(qi, ri - m) - qpow(qi, -m)) / qm1
                             : Rat(1) - (qpow(qi, m - ri) - qpow(qi, -ri)) / qm1;
    return Interval::exact(val);
  }
  Interval dqr = delta_interval(ipow(qi, r), Int(static_cast<unsigned long>(d)), prec);
  Interval term = Interval::exact(t_val * (d - 1)) + dqr;
  Interval expr = (Int(ri) <= m)
                      ? Interval::exact(qpow(qi, ri - m)) + term
                      : Interval::exact(qpow(qi, m - ri)) * (Interval::exact(Rat(1)) + term);
  Interval one = Interval::exact(Rat(1));
  return one - Rat(Int(1), qi - 1) * expr;
}

// Outcome of one named inequality check.  verified means the pessimal
// endpoint of value already clears the limit (value.hi < limit), so the
// conclusion is sound under the outward rounding.
struct CheckResult {
  std::string name;
  Interval value = Interval::exact(Rat(0));
  Rat limit = Rat(0);
  bool in_regime = true;
  bool verified = false;
  std::string note;
};

// The r-dependent part of the common majorant used once r >= d + 2:
//   (r-3)(r-4) q^(-r/2) + 5 (r-2)^(13/3) q^(-r),
// which dominates Delta(q^r, d) for every d <= r - 2.  Decreasing in q for
// fixed r, so evaluating at the smallest field size of a regime bounds the
// whole regime.
inline Interval extension_tail_value(std::uint64_t q, std::uint64_t r,
                                     unsigned prec = kDefaultRootPrecision) {
  if (r < 4) throw std::domain_error("extension_tail_value: need r >= 4");
  Int qi(static_cast<unsigned long>(q));
  Int ri(static_cast<unsigned long>(r));
  Interval half = pow_frac(Rat(qi), -ri, 2, prec);
  Interval frac = pow_frac(Rat(ri - 2), Int(13), 3, prec);
  return Rat((ri - 3) * (ri - 4)) * half +
         Rat(5) * (frac * Interval::exact(qpow(qi, -ri)));
}

// The positivity test for the searchable regime: the branch expression of
// the mu bound, with t replaced by the threshold value the surface analysis
// guarantees, must stay below q - 1.
inline CheckResult searchable_regime_check(std::uint64_t q, std::uint32_t n, std::uint32_t d,
                                   std::uint64_t r, unsigned prec = kDefaultRootPrecision) {
  CheckResult res;
  res.name = "searchable_regime";
  res.limit = Rat(Int(static_cast<unsigned long>(q)) - 1);
  if (n < 2 || d < 2) throw std::domain_error("searchable_regime_check: need n, d >= 2");
  Int r_floor = binom(std::uint64_t(n) - 1 + d, n - 1);
  if (Int(static_cast<unsigned long>(r)) <= r_floor)
    throw std::domain_error("searchable_regime_check: r must exceed C(n-1+d, n-1)");

  TThreshold tv = t_threshold_check(q, n, d);
  if (tv == TThreshold::fail) {
    res.in_regime = false;
    res.note = "no usable bound on t(d-1)";
    return res;
  }
  Rat tbound = tv == TThreshold::half_over_q
                   ? Rat(Int(1), Int(2) * Int(static_cast<unsigned long>(q)))
                   : Rat(9, 8);
  Int m = binom(n + d, n);
  Int qi(static_cast<unsigned long>(q));
  Int ri(static_cast<unsigned long>(r));
  Interval dqr = delta_interval(ipow(qi, r), Int(static_cast<unsigned long>(d)), prec);
  Interval expr = (ri <= m)
                      ? Interval::exact(qpow(qi, ri - m) + tbound) + dqr
                      : Interval::exact(qpow(qi, m - ri)) *
                            (Interval::exact(Rat(1) + tbound) + dqr);
  res.value = expr;
  res.verified = expr.hi < res.limit;
  res.note = std::string(ri <= m ? "r <= m" : "r > m") + " branch, t(d-1) <= " +
             rat_to_string(tbound);
  return res;
}

// Number of projective hypersurfaces of degree j: h_j = (q^C(n+j,j) - 1)/(q-1).
inline Int hypersurface_h(std::uint64_t q, std::uint32_t n, std::uint32_t j) {
  if (j < 1) throw std::domain_error("hypersurface_h: need j >= 1");
  Int qi(static_cast<unsigned long>(q));
  Int num = ipow(qi, binom_u64(n + j, j)) - 1;
  return num / (qi - 1);
}

// Count of irreducible quadric hypersurfaces: g_2 = h_2 - C(h_1, 2) - h_1
// (total quadrics minus pairs of distinct hyperplanes minus doubled ones).
inline Int irreducible_quadric_count(std::uint64_t q, std::uint32_t n) {
  Int h1 = hypersurface_h(q, n, 1);
  Int h2 = hypersurface_h(q, n, 2);
  return h2 - h1 * (h1 - 1) / 2 - h1;
}

// Upper bound on the number of hypersurfaces cut out by some form vanishing
// at a common point: (q^m/(q-1)) (1 - q^-(mn/(n+d)) + 2 q^-(m-(n+1))), with
// the first exponent computed as the integer m - C(n+d-1, d-1).
inline Rat hypersurface_count_bound(std::uint64_t q, std::uint32_t n, std::uint32_t d) {
  Int m = binom(n + d, n);
  Int qi(static_cast<unsigned long>(q));
  Int e1 = m - binom(std::uint64_t(n) + d - 1, d - 1);
  Int e2 = m - Int(n + 1);
  Rat inner = Rat(1) - qpow(qi, -e1) + Rat(2) * qpow(qi, -e2);
  return Rat(ipow(qi, mpz_get_ui(m.get_mpz_t())), qi - 1) * inner;
}

// (1 + m^2 q^(-m/2) + 5 m^(13/3) q^(-m))(1 + 2 q^(-2m/3)) < (q-1)(1 - 3^-30),
// the square-field criterion in the large-q regime.
inline CheckResult square_field_product_check(std::uint64_t q, std::uint64_t m,
                              unsigned prec = kDefaultRootPrecision) {
  CheckResult res;
  res.name = "square_field_product";
  Int qi(static_cast<unsigned long>(q));
  Int mi(static_cast<unsigned long>(m));
  Interval qmh = pow_frac(Rat(qi), -mi, 2, prec);            // q^(-m/2)
  Interval m133 = pow_frac(Rat(mi), Int(13), 3, prec);       // m^(13/3)
  Interval q2m3 = pow_frac(Rat(qi), Int(-2) * mi, 3, prec);  // q^(-2m/3)
  Rat qmi = qpow(qi, -mi);
  Interval left = (Interval::exact(Rat(1)) + Rat(mi * mi) * qmh +
                   Rat(5) * (m133 * Interval::exact(qmi))) *
                  (Interval::exact(Rat(1)) + Rat(2) * q2m3);
  res.value = left;
  res.limit = Rat(qi - 1) * (Rat(1) - Rat(Int(1), ipow(Int(3), 30)));
  res.verified = left.hi < res.limit;
  return res;
}

// Large-degree criterion at q = 2, r = m: two exact integer-power
// inequalities, stated here in cubed / cleared-denominator form so no
// irrational quantity appears.
inline CheckResult large_degree_q2_check(std::uint64_t q, std::uint32_t n, std::uint32_t d) {
  CheckResult res;
  res.name = "large_degree_q2";
  res.limit = Rat(1);
  if (q != 2 || n < 2 || d < std::max<std::uint32_t>(6, n + 1)) {
    res.in_regime = false;
    res.note = "needs q = 2, n >= 2, d >= max(6, n+1)";
    return res;
  }
  Int m = binom(n + d, n);
  // chain step: C(n+d-1, d-1) >= C(d+1, 2)
  bool chain = binom(std::uint64_t(n) + d - 1, d - 1) >= binom(std::uint64_t(d) + 1, 2);
  // 2^C(d+1,2) > 10 d^(13/3), cubed: 2^(3 C(d+1,2)) > 1000 d^13
  Int lhs8 = ipow(Int(2), 3 * binom_u64(std::uint64_t(d) + 1, 2));
  Int rhs8 = 1000 * ipow(Int(static_cast<unsigned long>(d)), 13);
  // 2^(m (1/2 - n/(n+d))) > 2d^2 + 6, cleared: 2^(m(d-n)) > (2d^2+6)^(2(n+d))
  Int lhs9 = ipow(Int(2), mpz_get_ui(Int(m * (d - n)).get_mpz_t()));
  Int rhs9 = ipow(Int(2) * d * d + 6, 2 * (std::uint64_t(n) + d));
  // m - (n+1) > m/2, i.e. m > 2(n+1)
  bool half = m > 2 * Int(n + 1);
  res.verified = chain && lhs8 > rhs8 && lhs9 > rhs9 && half;
  // report the tighter of the two power ratios as the value
  Rat r8(rhs8, lhs8), r9(rhs9, lhs9);
  r8.canonicalize();
  r9.canonicalize();
  res.value = Interval::exact(std::max(r8, r9));
  res.note = chain && half ? "power inequalities in cleared form" : "side condition failed";
  return res;
}

// Quadric criterion at q = d = 2, n >= 4: (2^2n - 1)^3 > 5^3 2^13 in cleared
// form, plus the exact hypersurface-count comparison.
inline CheckResult quadric_q2_check(std::uint64_t q, std::uint32_t n, std::uint32_t d) {
  CheckResult res;
  res.name = "quadric_q2";
  res.limit = Rat(1);
  if (q != 2 || d != 2 || n < 4) {
    res.in_regime = false;
    res.note = "needs q = 2, d = 2, n >= 4";
    return res;
  }
  Int m = binom(std::uint64_t(n) + 2, 2);
  // 2^2n > 5 * 2^(13/3) + 1, cleared: (2^2n - 1)^3 > 125 * 2^13
  Int cube = ipow(ipow(Int(2), 2 * std::uint64_t(n)) - 1, 3);
  Int rhs = 125 * ipow(Int(2), 13);
  // #H = 2^m - 1 - (2^(n+1) - 1)(2^n - 1) <= 2^m - 2^2n
  Int count = ipow(Int(2), mpz_get_ui(m.get_mpz_t())) - 1 -
              (ipow(Int(2), std::uint64_t(n) + 1) - 1) * (ipow(Int(2), n) - 1);
  Int cap = ipow(Int(2), mpz_get_ui(m.get_mpz_t())) - ipow(Int(2), 2 * std::uint64_t(n));
  res.verified = cube > rhs && count <= cap;
  Rat ratio(rhs, cube);
  ratio.canonicalize();
  res.value = Interval::exact(ratio);
  return res;
}

// Probability bound that a random intersection of k degree-d hypersurfaces
// in characteristic p fails to be geometrically irreducible of codimension
// k.  Every exponent is an integer binomial, so the value is exact.
inline Rat singular_bound(std::uint64_t q, std::uint64_t p, std::uint32_t n, std::uint32_t d,
                          std::uint32_t k) {
  if (k < 1 || 2 * k + 1 > n)
    throw std::domain_error("singular_bound: need 1 <= k <= (n-1)/2");
  auto [pp, ee] = prime_power_split(q);
  if (pp != p) throw std::domain_error("singular_bound: p must be the characteristic of F_q");
  (void)ee;
  Int qi(static_cast<unsigned long>(q));
  Rat total(0);
  for (std::uint32_t j = 0; j < k; ++j) {
    Rat inner = qpow(qi, -binom(d / p + std::uint64_t(n) - j, n - j));
    Rat tail(0);
    for (std::uint32_t i = 0; i <= 2 * k - j; ++i) {
      tail += Rat(ipow(Int(static_cast<unsigned long>(d)) - 1, i)) *
              qpow(qi, -binom((d - 1) / p + std::uint64_t(n) - j - i, n - j - i));
    }
    inner += Rat(ipow(Int(static_cast<unsigned long>(d)), j)) * tail;
    total += Rat(binom(n, j)) * inner;
  }
  return Rat(n + 1) * total;
}

// Boundary check for the geometric-irreducibility bound at q = p = 2:
// singular_bound must stay below 6/(5 d^3).
inline CheckResult geom_irred_check(std::uint32_t d, std::uint32_t n, std::uint32_t k = 3) {
  CheckResult res;
  res.name = "geom_irreducibility";
  Rat val = singular_bound(2, 2, n, d, k);
  res.value = Interval::exact(val);
  res.limit = Rat(Int(6), Int(5) * ipow(Int(static_cast<unsigned long>(d)), 3));
  res.limit.canonicalize();
  res.verified = val < res.limit;
  return res;
}

// Inclusion-exclusion weights for unions over 1-, 2-, 3-dimensional systems.
inline std::array<Int, 3> inclusion_exclusion_coeffs(std::uint64_t q) {
  Int qi(static_cast<unsigned long>(q));
  return {Int(1), -qi, qi * qi * qi + qi * qi + qi};
}

// Final gate of the inclusion-exclusion method:
// 19/20 + (17/12) Delta(2^m, m^3) + 2 * 2^-m < 1 - 2^-10.
inline CheckResult incexc_final_check(std::uint64_t m, unsigned prec = kDefaultRootPrecision) {
  CheckResult res;
  res.name = "inclusion_exclusion_gate";
  if (m < 1) throw std::domain_error("incexc_final_check: need m >= 1");
  Int Q = ipow(Int(2), m);
  Int d = ipow(Int(static_cast<unsigned long>(m)), 3);
  Interval dd = delta_interval(Q, d, prec);
  Rat twoqm = Rat(2) * qpow(Int(2), -Int(static_cast<unsigned long>(m)));
  Interval lhs = Interval::exact(Rat(19, 20)) + Rat(17, 12) * dd + Interval::exact(twoqm);
  res.value = lhs;
  res.limit = Rat(1) - Rat(1, 1024);
  res.verified = lhs.hi < res.limit;
  return res;
}

// Everything the CLI reports for one (q, n, d, r): the error term, the exact
// t bound, the certified mu lower bound, and the named verdicts.
struct BoundReport {
  std::uint64_t q = 0;
  std::uint32_t n = 0;
  std::uint32_t d = 0;
  std::uint64_t r = 0;
  Interval delta_qr_d = Interval::exact(Rat(0));
  Rat t_upper = Rat(0);
  Interval mu_lower = Interval::exact(Rat(0));
  TThreshold t_verdict = TThreshold::fail;
  bool has_searchable_regime = false;
  CheckResult searchable_regime;
};

inline BoundReport make_bound_report(std::uint64_t q, std::uint32_t n, std::uint32_t d,
                                     std::uint64_t r, unsigned prec = kDefaultRootPrecision) {
  BoundReport rep;
  rep.q = q;
  rep.n = n;
  rep.d = d;
  rep.r = r;
  rep.delta_qr_d = delta_interval(ipow(Int(static_cast<unsigned long>(q)), r),
                                  Int(static_cast<unsigned long>(d)), prec);
  rep.t_upper = t_upper_bound(q, n, d);
  Rat t_eff = rep.t_upper > 1 ? Rat(1) : rep.t_upper;
  rep.mu_lower = mu_lower_bound(q, n, d, r, t_eff, prec);
  rep.t_verdict = n >= 2 ? t_threshold_check(q, n, d) : TThreshold::fail;
  if (n >= 2 && d >= 2 &&
      Int(static_cast<unsigned long>(r)) > binom(std::uint64_t(n) - 1 + d, n - 1)) {
    rep.has_searchable_regime = true;
    rep.searchable_regime = searchable_regime_check(q, n, d, r, prec);
  }
  return rep;
}

}  // namespace gpw

#endif  // GPW_BOUNDS_HPP_
