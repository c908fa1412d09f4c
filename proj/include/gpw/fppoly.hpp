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
// Arithmetic for F_q = F_p[y]/(g) with small p, and dense polynomials over
// F_q.  Everything here is sized for moduli of a few thousand coefficients at
// most; the binary-field fast path lives in gf2poly.hpp.

#ifndef GPW_FPPOLY_HPP
#define GPW_FPPOLY_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gpw {
namespace fq {

namespace internal {

inline std::uint32_t addmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint32_t submod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

inline std::uint32_t invmod(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw std::domain_error("division by zero in prime field");
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::domain_error("element not invertible in prime field");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
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

// An element of F_q in the power basis over F_p: digit i is the coefficient
// of y^i.  Always has length e.
using FqElem = std::vector<std::uint32_t>;

// A polynomial over F_q; coefficient i belongs to x^i.  Functions below treat
// trailing zero coefficients as absent.
using FqPoly = std::vector<FqElem>;

struct FqCtx;

FqPoly fq_poly_inverse_mod(const FqPoly& a, const FqPoly& f, const FqCtx& ctx);

// Describes F_q = F_p[y]/(base_mod); base_mod is empty when e == 1.
struct FqCtx {
  std::uint32_t p = 0;
  std::uint32_t e = 1;
  std::vector<std::uint32_t> base_mod;  // size e + 1, monic, digits < p

  static FqCtx prime_field(std::uint32_t p) {
    if (!internal::is_prime_u32(p)) throw std::domain_error("characteristic must be prime");
    FqCtx c;
    c.p = p;
    c.e = 1;
    return c;
  }

  static FqCtx with_modulus(std::uint32_t p, std::vector<std::uint32_t> base_mod) {
    if (!internal::is_prime_u32(p)) throw std::domain_error("characteristic must be prime");
    if (base_mod.size() < 3) throw std::domain_error("base modulus must have degree >= 2");
    for (std::uint32_t d : base_mod)
      if (d >= p) throw std::domain_error("base modulus digit out of range");
    if (base_mod.back() != 1) throw std::domain_error("base modulus must be monic");
    FqCtx c;
    c.p = p;
    c.e = static_cast<std::uint32_t>(base_mod.size() - 1);
    c.base_mod = std::move(base_mod);
    return c;
  }

  // p^e, guarded against overflow.
  std::uint64_t q() const {
    std::uint64_t v = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
      if (v > (std::uint64_t(1) << 62) / p) throw std::overflow_error("field size exceeds 2^62");
      v *= p;
    }
    return v;
  }

  FqElem zero() const { return FqElem(e, 0); }

  FqElem one() const {
    FqElem v(e, 0);
    v[0] = 1;
    return v;
  }

  // Base-p digit expansion of v; requires v < q().
  FqElem from_uint(std::uint64_t v) const {
    FqElem out(e, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
      out[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    if (v != 0) throw std::domain_error("value exceeds field size");
    return out;
  }

  std::uint64_t to_uint(const FqElem& a) const {
    std::uint64_t v = 0;
    for (std::uint32_t i = e; i-- > 0;) v = v * p + a[i];
    return v;
  }

  bool is_zero(const FqElem& a) const {
    for (std::uint32_t d : a)
      if (d) return false;
    return true;
  }

  FqElem add(const FqElem& a, const FqElem& b) const {
    FqElem out(e);
    for (std::uint32_t i = 0; i < e; ++i) out[i] = internal::addmod(a[i], b[i], p);
    return out;
  }

  FqElem sub(const FqElem& a, const FqElem& b) const {
    FqElem out(e);
    for (std::uint32_t i = 0; i < e; ++i) out[i] = internal::submod(a[i], b[i], p);
    return out;
  }

  FqElem neg(const FqElem& a) const {
    FqElem out(e);
    for (std::uint32_t i = 0; i < e; ++i) out[i] = a[i] ? p - a[i] : 0;
    return out;
  }

  FqElem mul(const FqElem& a, const FqElem& b) const {
    if (e == 1) return {internal::mulmod(a[0], b[0], p)};
    // convolution followed by reduction modulo the base modulus
    std::vector<std::uint32_t> conv(2 * e - 1, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
      if (!a[i]) continue;
      for (std::uint32_t j = 0; j < e; ++j) {
        conv[i + j] = static_cast<std::uint32_t>(
            (conv[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
      }
    }
    // y^e = -(sum of the lower base modulus terms), applied top down
    for (std::uint32_t i = 2 * e - 2; i >= e; --i) {
      std::uint32_t c = conv[i];
      if (!c) continue;
      conv[i] = 0;
      for (std::uint32_t j = 0; j < e; ++j) {
        std::uint32_t t = internal::mulmod(c, base_mod[j], p);
        conv[i - e + j] = internal::submod(conv[i - e + j], t, p);
      }
    }
    conv.resize(e);
    return conv;
  }

  FqElem inv(const FqElem& a) const;  // defined after the polynomial routines
};

inline int fq_poly_degree(const FqPoly& f, const FqCtx& ctx) {
  for (std::size_t i = f.size(); i-- > 0;)
    if (!ctx.is_zero(f[i])) return static_cast<int>(i);
  return -1;
}

inline FqPoly fq_poly_trim(FqPoly f, const FqCtx& ctx) {
  f.resize(static_cast<std::size_t>(fq_poly_degree(f, ctx) + 1));
  return f;
}

inline FqPoly fq_poly_zero() { return {}; }

inline FqPoly fq_poly_one(const FqCtx& ctx) { return {ctx.one()}; }

inline FqPoly fq_poly_x(const FqCtx& ctx) { return {ctx.zero(), ctx.one()}; }

inline bool fq_poly_equal(const FqPoly& a, const FqPoly& b, const FqCtx& ctx) {
  int da = fq_poly_degree(a, ctx), db = fq_poly_degree(b, ctx);
  if (da != db) return false;
  for (int i = 0; i <= da; ++i)
    if (a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)]) return false;
  return true;
}

inline FqPoly fq_poly_add(const FqPoly& a, const FqPoly& b, const FqCtx& ctx) {
  FqPoly out(std::max(a.size(), b.size()), ctx.zero());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] = ctx.add(out[i], a[i]);
    if (i < b.size()) out[i] = ctx.add(out[i], b[i]);
  }
  return fq_poly_trim(std::move(out), ctx);
}

inline FqPoly fq_poly_sub(const FqPoly& a, const FqPoly& b, const FqCtx& ctx) {
  FqPoly out(std::max(a.size(), b.size()), ctx.zero());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] = ctx.add(out[i], a[i]);
    if (i < b.size()) out[i] = ctx.sub(out[i], b[i]);
  }
  return fq_poly_trim(std::move(out), ctx);
}

inline FqPoly fq_poly_mul(const FqPoly& a, const FqPoly& b, const FqCtx& ctx) {
  int da = fq_poly_degree(a, ctx), db = fq_poly_degree(b, ctx);
  if (da < 0 || db < 0) return {};
  FqPoly out(static_cast<std::size_t>(da + db) + 1, ctx.zero());
  for (int i = 0; i <= da; ++i) {
    const FqElem& ai = a[static_cast<std::size_t>(i)];
    if (ctx.is_zero(ai)) continue;
    for (int j = 0; j <= db; ++j) {
      const FqElem& bj = b[static_cast<std::size_t>(j)];
      if (ctx.is_zero(bj)) continue;
      std::size_t k = static_cast<std::size_t>(i + j);
      out[k] = ctx.add(out[k], ctx.mul(ai, bj));
    }
  }
  return fq_poly_trim(std::move(out), ctx);
}

inline std::pair<FqPoly, FqPoly> fq_poly_divmod(const FqPoly& a, const FqPoly& b,
                                                const FqCtx& ctx) {
  int db = fq_poly_degree(b, ctx);
  if (db < 0) throw std::domain_error("polynomial division by zero");
  int da = fq_poly_degree(a, ctx);
  if (da < db) return {{}, fq_poly_trim(a, ctx)};
  FqElem lead_inv = ctx.inv(b[static_cast<std::size_t>(db)]);
  FqPoly rem = fq_poly_trim(a, ctx);
  FqPoly quo(static_cast<std::size_t>(da - db) + 1, ctx.zero());
  for (int i = da; i >= db; --i) {
    const FqElem& top = rem[static_cast<std::size_t>(i)];
    if (ctx.is_zero(top)) continue;
    FqElem c = ctx.mul(top, lead_inv);
    quo[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      std::size_t k = static_cast<std::size_t>(i - db + j);
      rem[k] = ctx.sub(rem[k], ctx.mul(c, b[static_cast<std::size_t>(j)]));
    }
  }
  return {fq_poly_trim(std::move(quo), ctx), fq_poly_trim(std::move(rem), ctx)};
}

inline FqPoly fq_poly_mod(const FqPoly& a, const FqPoly& b, const FqCtx& ctx) {
  return fq_poly_divmod(a, b, ctx).second;
}

// Monic gcd.
inline FqPoly fq_poly_gcd(FqPoly a, FqPoly b, const FqCtx& ctx) {
  a = fq_poly_trim(std::move(a), ctx);
  b = fq_poly_trim(std::move(b), ctx);
  while (fq_poly_degree(b, ctx) >= 0) {
    FqPoly r = fq_poly_mod(a, b, ctx);
    a = std::move(b);
    b = std::move(r);
  }
  int da = fq_poly_degree(a, ctx);
  if (da >= 0) {
    FqElem s = ctx.inv(a[static_cast<std::size_t>(da)]);
    for (auto& c : a) c = ctx.mul(c, s);
  }
  return a;
}

inline FqPoly fq_poly_mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& f,
                             const FqCtx& ctx) {
  return fq_poly_mod(fq_poly_mul(a, b, ctx), f, ctx);
}

// t^n mod f by binary exponentiation.
inline FqPoly fq_poly_powmod(const FqPoly& t, std::uint64_t n, const FqPoly& f,
                             const FqCtx& ctx) {
  FqPoly result = fq_poly_one(ctx);
  FqPoly base = fq_poly_mod(t, f, ctx);
  while (n) {
    if (n & 1) result = fq_poly_mulmod(result, base, f, ctx);
    n >>= 1;
    if (n) base = fq_poly_mulmod(base, base, f, ctx);
  }
  return result;
}

inline FqPoly fq_poly_inverse_mod(const FqPoly& a, const FqPoly& f, const FqCtx& ctx) {
  if (fq_poly_degree(f, ctx) < 1) throw std::domain_error("modulus must have degree >= 1");
  FqPoly r0 = fq_poly_trim(f, ctx), r1 = fq_poly_mod(a, f, ctx);
  if (fq_poly_degree(r1, ctx) < 0) throw std::domain_error("element is not invertible");
  FqPoly t0 = fq_poly_zero(), t1 = fq_poly_one(ctx);
  while (fq_poly_degree(r1, ctx) >= 0) {
    auto [q, r] = fq_poly_divmod(r0, r1, ctx);
    r0 = std::move(r1);
    r1 = std::move(r);
    FqPoly t2 = fq_poly_sub(t0, fq_poly_mul(q, t1, ctx), ctx);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  int d0 = fq_poly_degree(r0, ctx);
  if (d0 != 0) throw std::domain_error("element is not invertible");
  FqElem s = ctx.inv(r0[0]);
  for (auto& c : t0) c = ctx.mul(c, s);
  return fq_poly_mod(t0, f, ctx);
}

inline FqElem FqCtx::inv(const FqElem& a) const {
  if (is_zero(a)) throw std::domain_error("division by zero in field");
  if (e == 1) return {internal::invmod(a[0], p)};
  FqCtx pf = prime_field(p);
  FqPoly ap(e);
  for (std::uint32_t i = 0; i < e; ++i) ap[i] = FqElem{a[i]};
  FqPoly fp(e + 1);
  for (std::uint32_t i = 0; i <= e; ++i) fp[i] = FqElem{base_mod[i]};
  FqPoly ip = fq_poly_inverse_mod(ap, fp, pf);
  FqElem out(e, 0);
  for (std::size_t i = 0; i < ip.size(); ++i) out[i] = ip[i][0];
  return out;
}

// Rabin's criterion: f of degree r is irreducible over F_q iff x^(q^r) = x
// mod f and gcd(x^(q^(r/l)) - x, f) = 1 for every prime l dividing r.  A few
// extra gcd probes at small k reject most composites early.
inline bool fq_is_irreducible(const FqPoly& fin, const FqCtx& ctx) {
  FqPoly f = fq_poly_trim(fin, ctx);
  int r = fq_poly_degree(f, ctx);
  if (r <= 0) return false;
  if (r == 1) return true;
  if (ctx.is_zero(f[0])) return false;  // divisible by x
  std::uint64_t q = ctx.q();
  std::vector<std::uint64_t> checkpoints;
  for (std::uint64_t l : internal::prime_factors(static_cast<std::uint64_t>(r)))
    checkpoints.push_back(static_cast<std::uint64_t>(r) / l);
  for (std::uint64_t k = 1; k <= 4 && k < static_cast<std::uint64_t>(r); ++k)
    checkpoints.push_back(k);
  std::sort(checkpoints.begin(), checkpoints.end());
  checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
  const FqPoly x = fq_poly_x(ctx);
  FqPoly t = x;
  std::size_t ci = 0;
  for (std::uint64_t k = 1; k <= static_cast<std::uint64_t>(r); ++k) {
    t = fq_poly_powmod(t, q, f, ctx);
    while (ci < checkpoints.size() && checkpoints[ci] == k) {
      FqPoly d = fq_poly_gcd(fq_poly_sub(t, x, ctx), f, ctx);
      if (fq_poly_degree(d, ctx) != 0) return false;
      ++ci;
    }
  }
  return fq_poly_equal(t, x, ctx);
}

// The monic irreducible of degree r over F_q whose coefficient string, read
// as an integer with the constant term least significant (digits base q, each
// digit base p), is smallest.
inline FqPoly fq_lex_least_irreducible(std::uint32_t r, const FqCtx& ctx) {
  if (r == 0) throw std::domain_error("irreducible degree must be >= 1");
  if (r == 1) return fq_poly_x(ctx);  // tail 0 gives x itself
  std::uint64_t q = ctx.q();
  const std::uint64_t tail_cap = 50'000'000;
  for (std::uint64_t tail = 0; tail < tail_cap; ++tail) {
    // digits of the tail in base q become the low coefficients
    FqPoly f(static_cast<std::size_t>(r) + 1, ctx.zero());
    std::uint64_t t = tail;
    for (std::uint32_t i = 0; i < r && t; ++i) {
      f[i] = ctx.from_uint(t % q);
      t /= q;
    }
    if (t != 0) break;  // tail no longer fits below the leading term
    f[r] = ctx.one();
    if (ctx.is_zero(f[0])) continue;  // divisible by x
    if (fq_is_irreducible(f, ctx)) return f;
  }
  throw std::runtime_error("irreducible search space exhausted");
}

// Lex-least irreducible over the prime field, returned as plain digits
// (index i = coefficient of y^i).
inline std::vector<std::uint32_t> fp_lex_least_irreducible(std::uint32_t p, std::uint32_t e) {
  FqCtx pf = FqCtx::prime_field(p);
  FqPoly f = fq_lex_least_irreducible(e, pf);
  std::vector<std::uint32_t> out(e + 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i][0];
  return out;
}

// F_q = F_p[y]/(lex-least irreducible of degree e); plain F_p when e == 1.
inline FqCtx make_fq(std::uint32_t p, std::uint32_t e) {
  if (e == 0) throw std::domain_error("extension degree must be >= 1");
  if (e == 1) return FqCtx::prime_field(p);
  return FqCtx::with_modulus(p, fp_lex_least_irreducible(p, e));
}

}  // namespace fq
}  // namespace gpw

#endif  // GPW_FPPOLY_HPP
