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
// Certifier for sums of polynomial-times-exponential terms
//   f(q, t) = sum_i f_i(t) * q^(-g_i(t))
// claimed to stay below a constant M for all integers t >= t0 and prime
// powers q >= q0.  The certificate: check t in [t0, z] by exact evaluation at
// q = q0, then certify the tail [z, infinity) by showing every term is
// nonnegative and decreasing.  Positivity on a half-line is certified by the
// shifted-coefficient test (expand at x = z + s and require all coefficients
// nonnegative) -- sufficient, not necessary, so the checker may answer
// "inconclusive" but never certifies falsely.

#ifndef GPW_POLYEXP_HPP_
#define GPW_POLYEXP_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpw/enclosure.hpp"
#include "gpw/num.hpp"

namespace gpw {

// Dense univariate polynomial with rational coefficients, ascending order.
// coeffs empty means the zero polynomial.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static QPoly constant(const Rat& v) { return QPoly({v}); }
  // c * x^k
  static QPoly monomial(const Rat& c, std::size_t k) {
    std::vector<Rat> v(k + 1, Rat(0));
    v[k] = c;
    return QPoly(std::move(v));
  }

  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  QPoly derivative() const {
    if (c_.size() <= 1) return QPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<unsigned long>(i));
    return QPoly(std::move(d));
  }

  // Taylor shift: returns p(s + x) as a polynomial in x, by repeated
  // synthetic division (Ruffini-Horner), O(deg^2) exact.
  QPoly shifted(const Rat& s) const {
    if (c_.empty()) return QPoly();
    std::vector<Rat> a = c_;
    std::size_t n = a.size();
    for (std::size_t pass = 0; pass + 1 < n; ++pass)
      for (std::size_t j = n - 1; j > pass; --j) a[j - 1] += a[j] * s;
    return QPoly(std::move(a));
  }

  bool all_coeffs_nonnegative() const {
    for (const Rat& v : c_)
      if (v < 0) return false;
    return true;
  }

  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return QPoly(std::move(r));
  }
  friend QPoly operator-(const QPoly& a, const QPoly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return QPoly(std::move(r));
  }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return QPoly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return QPoly(std::move(r));
  }
  friend QPoly operator*(const Rat& s, const QPoly& a) {
    std::vector<Rat> r = a.c_;
    for (Rat& v : r) v *= s;
    return QPoly(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

// One term f_i(t) * q^(-g_i(t)).
struct PolyExpTerm {
  QPoly f;
  QPoly g;
};

// The full claim: sum of terms < M for all integers t >= t0 and q >= q0.
// z >= t0 splits the head (checked pointwise) from the tail (certified by
// monotonicity); the head check evaluates at q = q0 only, which suffices
// because every certified term is nonincreasing in q.
struct PolyExpFunction {
  std::vector<PolyExpTerm> terms;
  std::uint64_t q0 = 2;
  std::int64_t t0 = 0;
  std::int64_t z = 0;
  Rat M = Rat(0);
  unsigned prec = kDefaultRootPrecision;
};

enum class PolyExpStatus { verified, inconclusive, counterexample };

struct PolyExpResult {
  PolyExpStatus status = PolyExpStatus::inconclusive;
  std::int64_t witness_t = 0;  // set when status == counterexample
  std::string note;
};

// Exact rational lower bound for ln(q0).  Shipped values for 2 and 3;
// otherwise floor(log2 q0) * (lower bound of ln 2), valid since
// ln q0 >= floor(log2 q0) * ln 2.
inline Rat log_lower_bound(std::uint64_t q0) {
  if (q0 < 2) throw std::domain_error("log_lower_bound: need q0 >= 2");
  if (q0 == 2) return Rat(6931, 10000);
  if (q0 == 3) return Rat(10986, 10000);
  unsigned long k = 0;
  for (std::uint64_t v = q0; v > 1; v >>= 1) ++k;
  return Rat(static_cast<unsigned long>(k)) * Rat(6931, 10000);
}

namespace internal {

// Outward-rounded enclosure of q^(-y) for rational y.  Integer y is exact.
inline Interval qpow_enclosure(std::uint64_t q, const Rat& y, unsigned prec) {
  Rat yc = y;
  yc.canonicalize();
  Int num = yc.get_num();
  Int den = yc.get_den();  // > 0
  if (den == 1) return Interval::exact(qpow(Int(static_cast<unsigned long>(q)), -num));
  if (!den.fits_ulong_p())
    throw std::domain_error("qpow_enclosure: exponent denominator too large");
  return pow_frac(Rat(Int(static_cast<unsigned long>(q))), -num,
                  den.get_ui(), prec);
}

}  // namespace internal

// Runs the three-part certificate described in the header comment:
//   (a) f_i and g_i take nonnegative values at every integer t >= t0
//       (exactly on [t0, z], by the shift test beyond z);
//   (b) each term is nonincreasing on the real interval [z, infinity) at
//       q = q0: f_i * g_i' * L - f_i' >= 0 with L a rational lower bound of
//       ln q0, plus g_i' >= 0 there, which makes substituting L for ln q0
//       legitimate (both via the shift test);
//   (c) f(q0, t) < M for every integer t in [t0, z], by exact evaluation
//       with outward-rounded enclosures for fractional exponents.
// verified requires all three.  A point where the value provably reaches M
// is returned as a counterexample; an unprovable (c) comparison or a failed
// sufficient test in (a)/(b) is inconclusive.
inline PolyExpResult polyexp_check(const PolyExpFunction& F) {
  if (F.terms.empty()) throw std::invalid_argument("polyexp_check: no terms");
  if (F.q0 < 2) throw std::invalid_argument("polyexp_check: need q0 >= 2");
  if (F.z < F.t0) throw std::invalid_argument("polyexp_check: need z >= t0");
  if (F.prec == 0) throw std::invalid_argument("polyexp_check: need prec >= 1");

  PolyExpResult res;
  Rat zr(static_cast<long>(F.z));

  // (a) nonnegative values.
  for (const PolyExpTerm& term : F.terms) {
    for (std::int64_t t = F.t0; t <= F.z; ++t) {
      Rat tr(static_cast<long>(t));
      if (term.f.eval(tr) < 0 || term.g.eval(tr) < 0) {
        res.status = PolyExpStatus::inconclusive;
        res.note = "a term is negative at t = " + std::to_string(t);
        return res;
      }
    }
    if (!term.f.shifted(zr).all_coeffs_nonnegative() ||
        !term.g.shifted(zr).all_coeffs_nonnegative()) {
      res.status = PolyExpStatus::inconclusive;
      res.note = "positivity beyond the split point is not certified";
      return res;
    }
  }

  // (b) each term nonincreasing on [z, infinity).
  Rat L = log_lower_bound(F.q0);
  for (const PolyExpTerm& term : F.terms) {
    QPoly gp = term.g.derivative();
    QPoly h = L * (term.f * gp) - term.f.derivative();
    if (!gp.shifted(zr).all_coeffs_nonnegative() ||
        !h.shifted(zr).all_coeffs_nonnegative()) {
      res.status = PolyExpStatus::inconclusive;
      res.note = "tail monotonicity is not certified";
      return res;
    }
  }

  // (c) head values below M at q = q0, with precision retries on straddle.
  for (std::int64_t t = F.t0; t <= F.z; ++t) {
    Rat tr(static_cast<long>(t));
    unsigned prec = F.prec;
    for (int attempt = 0;; ++attempt) {
      Interval total = Interval::exact(Rat(0));
      for (const PolyExpTerm& term : F.terms)
        total = total + Interval::exact(term.f.eval(tr)) *
                            internal::qpow_enclosure(F.q0, term.g.eval(tr), prec);
      if (total.hi < F.M) break;
      if (total.lo >= F.M) {
        res.status = PolyExpStatus::counterexample;
        res.witness_t = t;
        res.note = "value at t reaches the target bound";
        return res;
      }
      if (attempt >= 2) {
        res.status = PolyExpStatus::inconclusive;
        res.note = "comparison at t = " + std::to_string(t) +
                   " straddles the bound at the working precision";
        return res;
      }
      prec *= 2;
    }
  }

  res.status = PolyExpStatus::verified;
  res.note = "all three hypotheses certified";
  return res;
}

inline const char* to_string(PolyExpStatus s) {
  switch (s) {
    case PolyExpStatus::verified: return "verified";
    case PolyExpStatus::inconclusive: return "inconclusive";
    default: return "counterexample";
  }
}

// --- Shipped instances -----------------------------------------------------

// t^2 * q^(-t) < 2 for q >= 2, t >= 1 (peak value 9/8 at t = 3 over F_2).
inline PolyExpFunction demo_polyexp() {
  PolyExpFunction F;
  F.terms = {{QPoly::monomial(Rat(1), 2), QPoly::monomial(Rat(1), 1)}};
  F.q0 = 2;
  F.t0 = 1;
  F.z = 4;
  F.M = Rat(2);
  return F;
}

// The large-field product criterion, expanded into poly-exp terms in t = m:
//   (1 + m^2 q^(-m/2) + 5 m^(13/3) q^(-m))(1 + 2 q^(-2m/3)) < (q-1)(1 - 3^-30)
// for q >= 3, m >= 12, after majorizing 5 m^(13/3) <= m^5, valid for
// m >= 5^(3/2) and hence on the whole regime (documented coarsening; the
// naive m^(13/3) <= m^5 is too lossy for the head values at m = 12).
// Constant term 1 moves into M.
inline PolyExpFunction product_criterion_tail() {
  PolyExpFunction F;
  auto t2 = QPoly::monomial(Rat(1), 2);
  auto t5 = QPoly::monomial(Rat(1), 5);
  F.terms = {
      {t2, QPoly({Rat(0), Rat(1, 2)})},                // m^2 q^(-m/2)
      {t5, QPoly({Rat(0), Rat(1)})},                   // m^5 q^(-m)
      {QPoly::constant(Rat(2)), QPoly({Rat(0), Rat(2, 3)})},  // 2 q^(-2m/3)
      {Rat(2) * t2, QPoly({Rat(0), Rat(7, 6)})},       // 2 m^2 q^(-7m/6)
      {Rat(2) * t5, QPoly({Rat(0), Rat(5, 3)})},       // 2 m^5 q^(-5m/3)
  };
  F.q0 = 3;
  F.t0 = 12;
  F.z = 12;
  // LHS - 1 < (q0 - 1)(1 - 3^-30) - 1 = 1 - 2 * 3^-30 at q0 = 3.
  F.M = Rat(1) - Rat(Int(2), ipow(Int(3), 30));
  return F;
}

// Tail of the searchable-regime analysis in the extension degree t = r:
//   1 + 9/8 + (r-3)(r-4) q^(-r/2) + 5 (r-2)^(13/3) q^(-r) < 3
// for q >= 4.  Constants move into M = 3 - 1 - 9/8 = 7/8; the fractional
// power is majorized by 5 (r-2)^(13/3) <= (r-2)^5, valid for r >= 14, which
// fixes t0; rows r in [d+2, 13] are evaluated directly elsewhere with the
// true exponent.  z is the default split t0 + 64.
inline PolyExpFunction regime_tail_instance() {
  PolyExpFunction F;
  // (t-3)(t-4) = t^2 - 7t + 12.
  QPoly f1({Rat(12), Rat(-7), Rat(1)});
  // (t-2)^5.
  QPoly tm2({Rat(-2), Rat(1)});
  QPoly f2 = tm2 * tm2 * tm2 * tm2 * tm2;
  F.terms = {
      {f1, QPoly({Rat(0), Rat(1, 2)})},
      {f2, QPoly({Rat(0), Rat(1)})},
  };
  F.q0 = 4;
  F.t0 = 14;
  F.z = 78;
  F.M = Rat(7, 8);
  return F;
}

}  // namespace gpw

#endif  // GPW_POLYEXP_HPP_
