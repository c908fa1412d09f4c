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
// Dense polynomials over GF(2), bit-packed 64 coefficients per word.
// Multiplication uses carry-less multiply (PCLMULQDQ when the CPU has it,
// a 4-bit-window portable routine otherwise) with Karatsuba on top.
// Reduction modulo a fixed modulus is either shift-fold (sparse moduli of
// the form x^R + g with deg g <= 63) or Barrett with a precomputed inverse.

#ifndef GPW_GF2POLY_HPP
#define GPW_GF2POLY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#if defined(__x86_64__) || defined(__i386__)
#define GPW_HAVE_X86_CLMUL 1
#include <immintrin.h>
#endif

namespace gpw {
namespace gf2 {

using word = std::uint64_t;

namespace internal {

inline int word_degree(word w) { return w ? 63 - __builtin_clzll(w) : -1; }

inline long span_degree(const word* w, std::size_t n) {
  for (std::size_t j = n; j-- > 0;)
    if (w[j]) return static_cast<long>(64 * j) + word_degree(w[j]);
  return -1;
}

#if GPW_HAVE_X86_CLMUL
__attribute__((target("pclmul,sse2"))) inline void clmul_hw(word a, word b, word& lo, word& hi) {
  __m128i va = _mm_cvtsi64_si128(static_cast<long long>(a));
  __m128i vb = _mm_cvtsi64_si128(static_cast<long long>(b));
  __m128i r = _mm_clmulepi64_si128(va, vb, 0x00);
  lo = static_cast<word>(_mm_cvtsi128_si64(r));
  hi = static_cast<word>(_mm_cvtsi128_si64(_mm_srli_si128(r, 8)));
}

__attribute__((target("pclmul,sse2"))) inline void mul_schoolbook_hw(const word* a, std::size_t na,
                                                                     const word* b, std::size_t nb,
                                                                     word* out) {
  for (std::size_t i = 0; i < na; ++i) {
    __m128i va = _mm_cvtsi64_si128(static_cast<long long>(a[i]));
    for (std::size_t j = 0; j < nb; ++j) {
      __m128i vb = _mm_cvtsi64_si128(static_cast<long long>(b[j]));
      __m128i r = _mm_clmulepi64_si128(va, vb, 0x00);
      out[i + j] ^= static_cast<word>(_mm_cvtsi128_si64(r));
      out[i + j + 1] ^= static_cast<word>(_mm_cvtsi128_si64(_mm_srli_si128(r, 8)));
    }
  }
}

__attribute__((target("pclmul,sse2"))) inline void sqr_words_hw(const word* a, std::size_t n,
                                                                word* out) {
  for (std::size_t i = 0; i < n; ++i) {
    __m128i v = _mm_cvtsi64_si128(static_cast<long long>(a[i]));
    __m128i r = _mm_clmulepi64_si128(v, v, 0x00);
    out[2 * i] = static_cast<word>(_mm_cvtsi128_si64(r));
    out[2 * i + 1] = static_cast<word>(_mm_cvtsi128_si64(_mm_srli_si128(r, 8)));
  }
}
#endif  // GPW_HAVE_X86_CLMUL

inline bool use_hw_clmul() {
#if GPW_HAVE_X86_CLMUL
  static const bool ok = __builtin_cpu_supports("pclmul") != 0;
  return ok;
#else
  return false;
#endif
}

// Builds the 16-entry nibble table for `a` used by the windowed multiply.
inline void clmul_table(word a, word* tl, word* th) {
  tl[0] = 0;
  th[0] = 0;
  tl[1] = a;
  th[1] = 0;
  for (int u = 2; u < 16; u += 2) {
    tl[u] = tl[u >> 1] << 1;
    th[u] = (th[u >> 1] << 1) | (tl[u >> 1] >> 63);
    tl[u + 1] = tl[u] ^ a;
    th[u + 1] = th[u];
  }
}

inline void clmul_from_table(const word* tl, const word* th, word b, word& lo, word& hi) {
  word rl = 0, rh = 0;
  for (int s = 60; s >= 0; s -= 4) {
    rh = (rh << 4) | (rl >> 60);
    rl <<= 4;
    unsigned nib = static_cast<unsigned>(b >> s) & 0xF;
    rl ^= tl[nib];
    rh ^= th[nib];
  }
  lo = rl;
  hi = rh;
}

inline void clmul_sw(word a, word b, word& lo, word& hi) {
  word tl[16], th[16];
  clmul_table(a, tl, th);
  clmul_from_table(tl, th, b, lo, hi);
}

inline void mul_schoolbook_sw(const word* a, std::size_t na, const word* b, std::size_t nb,
                              word* out) {
  word tl[16], th[16];
  for (std::size_t i = 0; i < na; ++i) {
    clmul_table(a[i], tl, th);
    for (std::size_t j = 0; j < nb; ++j) {
      word lo, hi;
      clmul_from_table(tl, th, b[j], lo, hi);
      out[i + j] ^= lo;
      out[i + j + 1] ^= hi;
    }
  }
}

inline const std::uint16_t* bit_spread_table() {
  static const std::array<std::uint16_t, 256> table = [] {
    std::array<std::uint16_t, 256> t{};
    for (unsigned v = 0; v < 256; ++v) {
      std::uint16_t s = 0;
      for (int i = 0; i < 8; ++i)
        if (v & (1u << i)) s = static_cast<std::uint16_t>(s | (1u << (2 * i)));
      t[v] = s;
    }
    return t;
  }();
  return table.data();
}

inline void sqr_words_sw(const word* a, std::size_t n, word* out) {
  const std::uint16_t* sp = bit_spread_table();
  for (std::size_t i = 0; i < n; ++i) {
    word v = a[i];
    word lo = 0, hi = 0;
    for (int b = 0; b < 4; ++b) lo |= static_cast<word>(sp[(v >> (8 * b)) & 0xFF]) << (16 * b);
    for (int b = 4; b < 8; ++b) hi |= static_cast<word>(sp[(v >> (8 * b)) & 0xFF]) << (16 * (b - 4));
    out[2 * i] = lo;
    out[2 * i + 1] = hi;
  }
}

inline void clmul(word a, word b, word& lo, word& hi) {
#if GPW_HAVE_X86_CLMUL
  if (use_hw_clmul()) {
    clmul_hw(a, b, lo, hi);
    return;
  }
#endif
  clmul_sw(a, b, lo, hi);
}

inline word clmul_lo(word a, word b) {
  word lo, hi;
  clmul(a, b, lo, hi);
  return lo;
}

inline void mul_schoolbook(const word* a, std::size_t na, const word* b, std::size_t nb,
                           word* out) {
#if GPW_HAVE_X86_CLMUL
  if (use_hw_clmul()) {
    mul_schoolbook_hw(a, na, b, nb, out);
    return;
  }
#endif
  mul_schoolbook_sw(a, na, b, nb, out);
}

inline void sqr_words(const word* a, std::size_t n, word* out) {
#if GPW_HAVE_X86_CLMUL
  if (use_hw_clmul()) {
    sqr_words_hw(a, n, out);
    return;
  }
#endif
  sqr_words_sw(a, n, out);
}

constexpr std::size_t kKaratsubaThreshold = 24;

inline std::size_t mul_workspace(std::size_t n) { return 9 * n + 64; }

// XORs a*b into out[0 .. na+nb). `ws` must hold mul_workspace(max(na, nb)) words.
inline void mul_rec(const word* a, std::size_t na, const word* b, std::size_t nb, word* out,
                    word* ws) {
  if (na == 0 || nb == 0) return;
  if (na < nb) {
    std::swap(a, b);
    std::swap(na, nb);
  }
  if (nb <= kKaratsubaThreshold) {
    mul_schoolbook(a, na, b, nb, out);
    return;
  }
  std::size_t h = (na + 1) / 2;
  if (nb <= h) {
    mul_rec(a, h, b, nb, out, ws);
    mul_rec(a + h, na - h, b, nb, out + h, ws);
    return;
  }
  std::size_t na1 = na - h, nb1 = nb - h;
  word* p0 = ws;           // 2h words
  word* p2 = p0 + 2 * h;   // 2h words (na1 + nb1 used)
  word* pm = p2 + 2 * h;   // 2h words
  word* sa = pm + 2 * h;   // h words
  word* sb = sa + h;       // h words
  word* cws = sb + h;
  std::memset(p0, 0, 6 * h * sizeof(word));
  for (std::size_t i = 0; i < h; ++i) sa[i] = a[i] ^ (i < na1 ? a[h + i] : 0);
  for (std::size_t i = 0; i < h; ++i) sb[i] = b[i] ^ (i < nb1 ? b[h + i] : 0);
  mul_rec(a, h, b, h, p0, cws);
  mul_rec(a + h, na1, b + h, nb1, p2, cws);
  mul_rec(sa, h, sb, h, pm, cws);
  for (std::size_t i = 0; i < 2 * h; ++i) out[i] ^= p0[i];
  for (std::size_t i = 0; i < na1 + nb1; ++i) out[2 * h + i] ^= p2[i];
  for (std::size_t i = 0; i < 2 * h; ++i) out[h + i] ^= p0[i] ^ pm[i];
  for (std::size_t i = 0; i < na1 + nb1; ++i) out[h + i] ^= p2[i];
}

// dst ^= src << bits.  dst must have room for bits/64 + nsrc + 1 words.
inline void xor_shl(word* dst, const word* src, std::size_t nsrc, std::size_t bits) {
  std::size_t ws = bits >> 6;
  int bs = static_cast<int>(bits & 63);
  if (bs == 0) {
    for (std::size_t i = 0; i < nsrc; ++i) dst[ws + i] ^= src[i];
  } else {
    word carry = 0;
    for (std::size_t i = 0; i < nsrc; ++i) {
      word v = src[i];
      dst[ws + i] ^= (v << bs) | carry;
      carry = v >> (64 - bs);
    }
    dst[ws + nsrc] ^= carry;
  }
}

// a ^= (hi:lo) << pos.  a must have room for pos/64 + 3 words.
inline void xor128_at(word* a, std::size_t pos, word lo, word hi) {
  std::size_t w = pos >> 6;
  int s = static_cast<int>(pos & 63);
  if (s == 0) {
    a[w] ^= lo;
    a[w + 1] ^= hi;
  } else {
    a[w] ^= lo << s;
    a[w + 1] ^= (lo >> (64 - s)) | (hi << s);
    a[w + 2] ^= hi >> (64 - s);
  }
}

}  // namespace internal

class Gf2Poly {
 public:
  Gf2Poly() = default;

  static Gf2Poly zero() { return Gf2Poly(); }
  static Gf2Poly one() { return from_value(1); }
  static Gf2Poly x() { return from_value(2); }

  // Interprets bit i of v as the coefficient of x^i.
  static Gf2Poly from_value(word v) {
    Gf2Poly p;
    if (v) p.w_.push_back(v);
    return p;
  }

  static Gf2Poly from_words(std::vector<word> w) {
    Gf2Poly p;
    p.w_ = std::move(w);
    p.trim();
    return p;
  }

  static Gf2Poly monomial(std::size_t k) {
    Gf2Poly p;
    p.w_.assign(k / 64 + 1, 0);
    p.w_[k / 64] = word(1) << (k % 64);
    return p;
  }

  template <typename IntVec>
  static Gf2Poly from_coeffs(const IntVec& coeffs) {
    Gf2Poly p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] % 2 != 0) p.set_coeff(i, true);
    }
    return p;
  }

  long degree() const { return internal::span_degree(w_.data(), w_.size()); }
  bool is_zero() const { return w_.empty(); }
  bool is_one() const { return w_.size() == 1 && w_[0] == 1; }

  bool coeff(std::size_t i) const {
    std::size_t j = i / 64;
    return j < w_.size() && ((w_[j] >> (i % 64)) & 1);
  }

  void set_coeff(std::size_t i, bool v) {
    std::size_t j = i / 64;
    if (v) {
      if (j >= w_.size()) w_.resize(j + 1, 0);
      w_[j] |= word(1) << (i % 64);
    } else if (j < w_.size()) {
      w_[j] &= ~(word(1) << (i % 64));
      trim();
    }
  }

  // The coefficient vector read as an integer; requires degree() <= 63.
  word value() const {
    if (w_.size() > 1) throw std::overflow_error("gf2 polynomial value exceeds 64 bits");
    return w_.empty() ? 0 : w_[0];
  }

  const std::vector<word>& words() const { return w_; }

  friend bool operator==(const Gf2Poly& a, const Gf2Poly& b) { return a.w_ == b.w_; }
  friend bool operator!=(const Gf2Poly& a, const Gf2Poly& b) { return !(a == b); }

  Gf2Poly& operator^=(const Gf2Poly& o) {
    if (o.w_.size() > w_.size()) w_.resize(o.w_.size(), 0);
    for (std::size_t i = 0; i < o.w_.size(); ++i) w_[i] ^= o.w_[i];
    trim();
    return *this;
  }

  friend Gf2Poly operator^(Gf2Poly a, const Gf2Poly& b) {
    a ^= b;
    return a;
  }

  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
    if (a.is_zero() || b.is_zero()) return Gf2Poly();
    std::vector<word> out(a.w_.size() + b.w_.size(), 0);
    std::vector<word> ws(internal::mul_workspace(std::max(a.w_.size(), b.w_.size())));
    internal::mul_rec(a.w_.data(), a.w_.size(), b.w_.data(), b.w_.size(), out.data(), ws.data());
    return from_words(std::move(out));
  }

  Gf2Poly sqr() const {
    if (is_zero()) return Gf2Poly();
    std::vector<word> out(2 * w_.size(), 0);
    internal::sqr_words(w_.data(), w_.size(), out.data());
    return from_words(std::move(out));
  }

  Gf2Poly shl(std::size_t bits) const {
    if (is_zero()) return Gf2Poly();
    std::vector<word> out(w_.size() + bits / 64 + 1, 0);
    internal::xor_shl(out.data(), w_.data(), w_.size(), bits);
    return from_words(std::move(out));
  }

  Gf2Poly shr(std::size_t bits) const {
    long d = degree();
    if (d < static_cast<long>(bits)) return Gf2Poly();
    std::size_t ws = bits / 64;
    int bs = static_cast<int>(bits % 64);
    std::vector<word> out(w_.size() - ws, 0);
    if (bs == 0) {
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = w_[ws + i];
    } else {
      for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = w_[ws + i] >> bs;
        if (ws + i + 1 < w_.size()) out[i] |= w_[ws + i + 1] << (64 - bs);
      }
    }
    return from_words(std::move(out));
  }

  // Quotient and remainder with deg(rem) < deg(b).
  static std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& a, const Gf2Poly& b) {
    if (b.is_zero()) throw std::domain_error("gf2 polynomial division by zero");
    long da = a.degree(), db = b.degree();
    if (da < db) return {Gf2Poly(), a};
    std::vector<word> r = a.w_;
    r.push_back(0);
    std::vector<word> q(static_cast<std::size_t>(da - db) / 64 + 1, 0);
    long dr = da;
    while (dr >= db) {
      std::size_t sh = static_cast<std::size_t>(dr - db);
      q[sh >> 6] |= word(1) << (sh & 63);
      internal::xor_shl(r.data(), b.w_.data(), b.w_.size(), sh);
      dr = internal::span_degree(r.data(), static_cast<std::size_t>(dr >> 6) + 1);
    }
    return {from_words(std::move(q)), from_words(std::move(r))};
  }

  Gf2Poly mod(const Gf2Poly& b) const { return divmod(*this, b).second; }

  // Sparse rendering, e.g. "x^5 + x^2 + 1".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (long d = degree(); d >= 0; --d) {
      if (!coeff(static_cast<std::size_t>(d))) continue;
      if (!s.empty()) s += " + ";
      if (d == 0)
        s += "1";
      else if (d == 1)
        s += "x";
      else
        s += "x^" + std::to_string(d);
    }
    return s;
  }

 private:
  void trim() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
  }

  std::vector<word> w_;  // bit i of w_[j] is the coefficient of x^(64j + i)
};

inline Gf2Poly gcd(const Gf2Poly& a, const Gf2Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::size_t cap = std::max(a.words().size(), b.words().size()) + 1;
  std::vector<word> u = a.words();
  std::vector<word> v = b.words();
  u.resize(cap, 0);
  v.resize(cap, 0);
  long du = a.degree(), dv = b.degree();
  while (true) {
    if (du < dv) {
      u.swap(v);
      std::swap(du, dv);
    }
    internal::xor_shl(u.data(), v.data(), static_cast<std::size_t>(dv >> 6) + 1,
                      static_cast<std::size_t>(du - dv));
    du = internal::span_degree(u.data(), static_cast<std::size_t>(du >> 6) + 1);
    if (du < 0) {
      v.resize(static_cast<std::size_t>(dv >> 6) + 1);
      return Gf2Poly::from_words(std::move(v));
    }
  }
}

// Reduction modulo a fixed monic modulus.  Sparse moduli (everything below the
// leading term fits in one word) take the shift-fold path; dense moduli use a
// Barrett inverse computed once.
class Gf2Reducer {
 public:
  explicit Gf2Reducer(Gf2Poly f) : f_(std::move(f)) {
    long d = f_.degree();
    if (d < 1) throw std::domain_error("gf2 modulus must have degree >= 1");
    deg_ = static_cast<std::size_t>(d);
    Gf2Poly low = f_;
    low.set_coeff(deg_, false);
    if (low.degree() <= 63) {
      fold_ = true;
      low_ = low.is_zero() ? 0 : low.words()[0];
    } else {
      fold_ = false;
      mu_ = Gf2Poly::divmod(Gf2Poly::monomial(2 * deg_), f_).first;
    }
  }

  const Gf2Poly& modulus() const { return f_; }
  std::size_t degree() const { return deg_; }

  // Words needed to store a reduced element.
  std::size_t words() const { return deg_ / 64 + 1; }

  Gf2Poly reduce(const Gf2Poly& a) const {
    std::vector<word> v = a.words();
    reduce_words(v);
    return Gf2Poly::from_words(std::move(v));
  }

  // In-place reduction of an arbitrary-length word vector.
  void reduce_words(std::vector<word>& a) const {
    if (fold_)
      fold_reduce(a);
    else
      barrett_reduce(a);
    if (a.size() > words()) a.resize(words());
    a.resize(words(), 0);
  }

 private:
  void fold_reduce(std::vector<word>& a) const {
    const std::size_t rw = deg_ / 64;
    const int rb = static_cast<int>(deg_ % 64);
    const std::size_t jmin = (deg_ + 63) / 64;
    long d = internal::span_degree(a.data(), a.size());
    while (d >= static_cast<long>(deg_)) {
      std::size_t top = static_cast<std::size_t>(d) / 64;
      if (a.size() < top + 3) a.resize(top + 3, 0);
      for (std::size_t j = top + 1; j-- > jmin;) {
        word v = a[j];
        if (!v) continue;
        a[j] = 0;
        word lo, hi;
        internal::clmul(v, low_, lo, hi);
        internal::xor128_at(a.data(), 64 * j - deg_, lo, hi);
      }
      if (rb != 0 && rw < a.size()) {
        word v = a[rw] >> rb;
        if (v) {
          a[rw] &= (word(1) << rb) - 1;
          word lo, hi;
          internal::clmul(v, low_, lo, hi);
          internal::xor128_at(a.data(), 0, lo, hi);
        }
      }
      d = internal::span_degree(a.data(), a.size());
    }
  }

  void barrett_reduce(std::vector<word>& a) const {
    Gf2Poly p = Gf2Poly::from_words(a);
    long d = p.degree();
    if (d >= static_cast<long>(deg_)) {
      Gf2Poly t = p.shr(deg_);
      Gf2Poly q = (t * mu_).shr(deg_);
      p ^= q * f_;
      // The Barrett quotient can be short by a few terms; finish by division.
      d = p.degree();
      while (d >= static_cast<long>(deg_)) {
        p ^= f_.shl(static_cast<std::size_t>(d) - deg_);
        d = p.degree();
      }
    }
    a = p.words();
  }

  Gf2Poly f_;
  Gf2Poly mu_;
  std::size_t deg_ = 0;
  bool fold_ = false;
  word low_ = 0;
};

inline Gf2Poly mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Reducer& red) {
  return red.reduce(a * b);
}

inline Gf2Poly sqrmod(const Gf2Poly& a, const Gf2Reducer& red) { return red.reduce(a.sqr()); }

// Inverse of a modulo f via the shift-and-subtract extended Euclid.
inline Gf2Poly inverse_mod(const Gf2Poly& a, const Gf2Poly& f) {
  long df = f.degree();
  if (df < 1) throw std::domain_error("gf2 modulus must have degree >= 1");
  Gf2Poly ar = a.mod(f);
  if (ar.is_zero()) throw std::domain_error("gf2 element is not invertible");
  std::size_t fw = f.words().size();
  std::size_t rcap = fw + 1;
  std::size_t vcap = 2 * fw + 4;
  std::vector<word> r0 = f.words(), r1 = ar.words();
  r0.resize(rcap, 0);
  r1.resize(rcap, 0);
  std::vector<word> v0(vcap, 0), v1(vcap, 0);
  v1[0] = 1;
  long d0 = df, d1 = ar.degree();
  long e0 = -1, e1 = 0;  // degrees of v0, v1
  while (d1 >= 0) {
    if (d0 < d1) {
      r0.swap(r1);
      v0.swap(v1);
      std::swap(d0, d1);
      std::swap(e0, e1);
    }
    std::size_t sh = static_cast<std::size_t>(d0 - d1);
    internal::xor_shl(r0.data(), r1.data(), static_cast<std::size_t>(d1 >> 6) + 1, sh);
    internal::xor_shl(v0.data(), v1.data(), static_cast<std::size_t>(std::max(e1, 0L) >> 6) + 1,
                      sh);
    long bound = std::max(e0, e1 + static_cast<long>(sh));
    e0 = internal::span_degree(v0.data(),
                               std::min(vcap, static_cast<std::size_t>(bound >> 6) + 1));
    d0 = internal::span_degree(r0.data(), static_cast<std::size_t>(d0 >> 6) + 1);
  }
  if (d0 != 0) throw std::domain_error("gf2 element is not invertible");
  v0.resize(static_cast<std::size_t>(std::max(e0, 0L) >> 6) + 1);
  return Gf2Poly::from_words(std::move(v0)).mod(f);
}

namespace internal {

inline std::vector<std::uint64_t> small_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace internal

// Carry-less product of two single-word polynomials, low word only
// (valid when deg a + deg b <= 63).
inline word clmul_value(word a, word b) { return internal::clmul_lo(a, b); }

// Sieve of all binary polynomials of degree <= max_deg, marking composites by
// enumerating carry-less multiples of each irreducible found in turn.
class SmallSieve {
 public:
  explicit SmallSieve(int max_deg) : max_deg_(max_deg) {
    if (max_deg < 2 || max_deg > 27) throw std::domain_error("sieve depth out of range");
    std::size_t n = std::size_t(1) << (max_deg + 1);
    comp_.assign(n / 64, 0);
    for (word p = 2; p < (word(1) << max_deg); ++p) {
      if (test(p)) continue;
      int dp = internal::word_degree(p);
      if (dp + 1 > max_deg) continue;
      word hmax = word(1) << (max_deg - dp + 1);
      for (word h = 2; h < hmax; ++h) set(internal::clmul_lo(p, h));
    }
  }

  int max_deg() const { return max_deg_; }

  // v is the coefficient vector of a polynomial with degree <= max_deg.
  bool is_irreducible_value(word v) const {
    if (v < 2) return false;
    return !test(v);
  }

 private:
  void set(word v) { comp_[v >> 6] |= word(1) << (v & 63); }
  bool test(word v) const { return (comp_[v >> 6] >> (v & 63)) & 1; }

  int max_deg_;
  std::vector<word> comp_;
};

inline const SmallSieve& small_sieve(int max_deg) {
  if (max_deg <= 20) {
    static const SmallSieve s(20);
    return s;
  }
  static const SmallSieve s24(24);
  return s24;
}

namespace internal {

// a*b mod g, all single-word polynomials.
inline word mulmod_small(word a, word b, word g) {
  word lo, hi;
  clmul(a, b, lo, hi);
  int dg = word_degree(g);
  while (hi) {
    int d = 64 + word_degree(hi);
    int sh = d - dg;
    // sh >= 1 because dg <= 63 < d
    if (sh >= 64) {
      hi ^= g << (sh - 64);
    } else {
      hi ^= g >> (64 - sh);
      lo ^= g << sh;
    }
  }
  int d;
  while ((d = word_degree(lo)) >= dg) lo ^= g << (d - dg);
  return lo;
}

// x^e mod g for a single-word modulus g with deg g >= 1.
inline word pow_x_mod_small(std::uint64_t e, word g) {
  int dg = word_degree(g);
  if (dg < 1) throw std::domain_error("modulus degree must be >= 1");
  word t = 1;
  if (e == 0) return t;
  int top = 63 - __builtin_clzll(e);
  for (int i = top; i >= 0; --i) {
    t = mulmod_small(t, t, g);
    if ((e >> i) & 1) {
      // multiply by x: one shift, then at most one fold since deg t < dg <= 63
      t <<= 1;
      if (word_degree(t) >= dg) t ^= g << (word_degree(t) - dg);
    }
  }
  return t;
}

}  // namespace internal

// Rabin irreducibility test over GF(2).
inline bool is_irreducible(const Gf2Poly& f) {
  long d = f.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  if (!f.coeff(0)) return false;  // divisible by x
  if (d <= 20) return small_sieve(20).is_irreducible_value(f.value());
  std::size_t r = static_cast<std::size_t>(d);
  Gf2Reducer red(f);
  std::vector<std::uint64_t> checkpoints;
  for (std::uint64_t l : internal::small_prime_factors(r)) checkpoints.push_back(r / l);
  std::sort(checkpoints.begin(), checkpoints.end());
  checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
  Gf2Poly t = Gf2Poly::x();
  const Gf2Poly x = Gf2Poly::x();
  std::size_t ci = 0;
  for (std::size_t k = 1; k <= r; ++k) {
    t = sqrmod(t, red);
    while (ci < checkpoints.size() && checkpoints[ci] == k) {
      if (gcd(t ^ x, f).degree() != 0) return false;
      ++ci;
    }
  }
  return t == x;
}

namespace internal {

// Filter: true when f provably has no irreducible factor with degree in
// (b1, b2].  false positives never occur; the caller still runs the full test.
inline bool no_factor_in_range(const Gf2Reducer& red, const Gf2Poly& f, std::size_t b1,
                               std::size_t b2) {
  Gf2Poly t = Gf2Poly::x();
  const Gf2Poly x = Gf2Poly::x();
  Gf2Poly acc = Gf2Poly::one();
  for (std::size_t k = 1; k <= b2; ++k) {
    t = sqrmod(t, red);
    if (k > b1) acc = mulmod(acc, t ^ x, red);
  }
  return gcd(acc, f).degree() == 0;
}

}  // namespace internal

// The monic irreducible of the given degree whose coefficient vector, read as
// an integer with the constant term in the lowest bit, is smallest.
inline Gf2Poly lex_least_irreducible(std::uint64_t degree) {
  if (degree == 0) throw std::domain_error("irreducible degree must be >= 1");
  if (degree == 1) return Gf2Poly::x();
  if (degree <= 20) {
    const SmallSieve& sv = small_sieve(20);
    for (word v = word(1) << degree; v < (word(2) << degree); ++v)
      if (sv.is_irreducible_value(v)) return Gf2Poly::from_value(v);
    throw std::logic_error("no irreducible found in sieve range");
  }

  const int mark_depth = degree >= 40000 ? 24 : 20;
  const std::size_t stage2_to = degree > 20000 ? 96 : (degree > 2000 ? 48 : 0);
  const SmallSieve& sv = small_sieve(mark_depth);

  for (word lmax = word(1) << 20; lmax <= (word(1) << 26); lmax <<= 2) {
    // bad[L>>1] marks odd offsets L for which x^degree + L has a factor of
    // degree <= mark_depth.
    std::vector<word> bad(lmax / 128 + 1, 0);
    for (word g = 4; g < (word(2) << mark_depth); ++g) {
      if (!sv.is_irreducible_value(g)) continue;
      int dg = internal::word_degree(g);
      word rho = internal::pow_x_mod_small(degree, g);
      word hmax = std::max<word>(1, (2 * lmax) >> dg);
      for (word h = 0; h < hmax; ++h) {
        word fl = rho ^ internal::clmul_lo(g, h);
        if (fl < lmax && (fl & 1)) bad[fl >> 7] |= word(1) << ((fl >> 1) & 63);
      }
    }
    for (word l = 1; l < lmax; l += 2) {
      if (__builtin_popcountll(l) & 1) continue;  // would be divisible by x + 1
      if ((bad[l >> 7] >> ((l >> 1) & 63)) & 1) continue;
      Gf2Poly f = Gf2Poly::monomial(degree);
      f ^= Gf2Poly::from_value(l);
      if (stage2_to > 0) {
        Gf2Reducer red(f);
        if (!internal::no_factor_in_range(red, f, mark_depth, stage2_to)) continue;
      }
      if (is_irreducible(f)) return f;
    }
  }
  throw std::runtime_error("irreducible search space exhausted");
}

}  // namespace gf2
}  // namespace gpw

#endif  // GPW_GF2POLY_HPP
