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
// Directed-rounding arithmetic for the certified inequality checks.  Values
// are intervals of exact rationals; the only inexact atoms are k-th roots,
// which are bracketed by integer root extraction at a chosen precision.  A
// "verified" strict inequality compares the pessimal endpoints, so raising
// the precision can only sharpen a verdict, never flip verified to false.

#ifndef GPW_ENCLOSURE_HPP_
#define GPW_ENCLOSURE_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

#include "gpw/num.hpp"

namespace gpw {

// Bits of scaling used when bracketing irrational roots.
inline constexpr unsigned kDefaultRootPrecision = 96;

struct Interval {
  Rat lo;
  Rat hi;

  static Interval exact(const Rat& v) { return {v, v}; }
  static Interval exact(const Int& v) { return {Rat(v), Rat(v)}; }

  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  Rat width() const { return hi - lo; }
};

inline Interval operator+(const Interval& a, const Interval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

inline Interval operator-(const Interval& a, const Interval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

inline Interval operator*(const Interval& a, const Interval& b) {
  Rat c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
  Rat lo = std::min(std::min(c1, c2), std::min(c3, c4));
  Rat hi = std::max(std::max(c1, c2), std::max(c3, c4));
  return {lo, hi};
}

inline Interval operator*(const Rat& s, const Interval& a) {
  return s >= 0 ? Interval{s * a.lo, s * a.hi} : Interval{s * a.hi, s * a.lo};
}

inline Interval reciprocal(const Interval& a) {
  if (a.lo <= 0) throw std::domain_error("reciprocal of an interval touching zero or below");
  return {Rat(1) / a.hi, Rat(1) / a.lo};
}

// Tight bracket of x^(1/k) for rational x >= 0: exact when x is a perfect
// k-th power of a rational, otherwise within 2^-prec.
inline Interval root_k(const Rat& x, unsigned long k, unsigned prec = kDefaultRootPrecision) {
  if (k == 0) throw std::domain_error("zeroth root");
  if (x < 0) throw std::domain_error("root of a negative value");
  if (x == 0) return Interval::exact(Rat(0));

  Int num = x.get_num(), den = x.get_den();
  Int rn, rd;
  int num_exact = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k);
  int den_exact = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k);
  if (num_exact && den_exact) {
    Rat out(rn, rd);
    out.canonicalize();
    return Interval::exact(out);
  }

  // floor root of num * 2^(k*prec) / den, scaled back by 2^prec
  Int scaled = (num << (k * prec)) / den;
  Int f;
  mpz_root(f.get_mpz_t(), scaled.get_mpz_t(), k);
  Int pow2 = Int(1) << prec;
  Rat lo(f, pow2), hi(f + 1, pow2);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

// x^(a/b) for a rational x > 0 and integer a, b > 0: (x^a)^(1/b).
inline Interval pow_frac(const Rat& x, const Int& a, unsigned long b,
                         unsigned prec = kDefaultRootPrecision) {
  if (x <= 0) throw std::domain_error("pow_frac: base must be positive");
  if (!a.fits_slong_p()) throw std::overflow_error("pow_frac: exponent numerator too large");
  long ae = mpz_get_si(a.get_mpz_t());
  Rat xa;
  if (ae >= 0) {
    Int pn = ipow(x.get_num(), static_cast<std::uint64_t>(ae));
    Int pd = ipow(x.get_den(), static_cast<std::uint64_t>(ae));
    xa = Rat(pn, pd);
  } else {
    Int pn = ipow(x.get_den(), static_cast<std::uint64_t>(-ae));
    Int pd = ipow(x.get_num(), static_cast<std::uint64_t>(-ae));
    xa = Rat(pn, pd);
  }
  xa.canonicalize();
  return root_k(xa, b, prec);
}

}  // namespace gpw

#endif  // GPW_ENCLOSURE_HPP_
