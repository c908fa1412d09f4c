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
// The extension tower F_p <= F_q <= F_(q^r) behind witness search.  Two
// interchangeable engines expose the same interface: Gf2Field (bit-packed,
// for q = 2) and TowerField (digit vectors, any prime power).  Pipelines are
// templated on the engine and dispatched once through AnyField.

#ifndef GPW_FIELD_HPP
#define GPW_FIELD_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gpw/fppoly.hpp"
#include "gpw/gf2poly.hpp"
#include "gpw/rng.hpp"

namespace gpw {

// Everything needed to reconstruct the tower: moduli are in the power basis,
// index i = coefficient of the i-th power, each coefficient a digit vector
// over F_p of length e.
struct FieldDesc {
  std::uint32_t p = 0;
  std::uint32_t e = 1;
  std::uint64_t q = 0;
  std::uint64_t r = 0;
  std::vector<std::uint32_t> base_mod;              // empty when e == 1
  std::vector<std::vector<std::uint32_t>> ext_mod;  // r + 1 coefficients
};

// F_(2^r) on top of the packed GF(2) engine.
class Gf2Field {
 public:
  using Elem = gf2::Gf2Poly;

  explicit Gf2Field(gf2::Gf2Poly modulus) : red_(std::move(modulus)) {
    r_ = static_cast<std::uint64_t>(red_.degree());
  }

  static Gf2Field with_degree(std::uint64_t r) {
    return Gf2Field(gf2::lex_least_irreducible(r));
  }

  std::uint32_t p() const { return 2; }
  std::uint32_t e() const { return 1; }
  std::uint64_t q() const { return 2; }
  std::uint64_t r() const { return r_; }

  // Field size 2^r, when it fits in 64 bits.
  std::uint64_t size_u64() const {
    if (r_ >= 64) throw std::overflow_error("field size exceeds 64 bits");
    return std::uint64_t(1) << r_;
  }

  Elem zero() const { return gf2::Gf2Poly::zero(); }
  Elem one() const { return gf2::Gf2Poly::one(); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool is_one(const Elem& a) const { return a.is_one(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const { return a ^ b; }
  Elem sub(const Elem& a, const Elem& b) const { return a ^ b; }
  Elem mul(const Elem& a, const Elem& b) const { return gf2::mulmod(a, b, red_); }
  Elem inv(const Elem& a) const { return gf2::inverse_mod(a, red_.modulus()); }
  Elem frobenius(const Elem& a) const { return gf2::sqrmod(a, red_); }

  Elem from_uint(std::uint64_t v) const {
    if (r_ < 64 && v >= (std::uint64_t(1) << r_))
      throw std::domain_error("value exceeds field size");
    return gf2::Gf2Poly::from_value(v);
  }

  // Least k >= 1 with a^(q^k) = a; divides r.
  std::uint64_t element_degree(const Elem& a) const {
    Elem t = frobenius(a);
    std::uint64_t k = 1;
    while (!(t == a)) {
      t = frobenius(t);
      if (++k > r_) throw std::logic_error("Frobenius orbit exceeded field degree");
    }
    return k;
  }

  Elem sample(Rng& rng) const {
    std::vector<gf2::word> w(r_ / 64 + 1, 0);
    for (auto& v : w) v = rng.bits();
    if (r_ % 64) {
      w.back() &= (gf2::word(1) << (r_ % 64)) - 1;
    } else {
      w.back() = 0;
    }
    return gf2::Gf2Poly::from_words(std::move(w));
  }

  // Coefficients of a over F_q in the power basis, as digit vectors.
  std::vector<std::vector<std::uint32_t>> eltseq_digits(const Elem& a) const {
    std::vector<std::vector<std::uint32_t>> out(r_);
    for (std::uint64_t i = 0; i < r_; ++i)
      out[i] = {a.coeff(static_cast<std::size_t>(i)) ? 1u : 0u};
    return out;
  }

  Elem from_digits(const std::vector<std::vector<std::uint32_t>>& digits) const {
    if (digits.size() != r_) throw std::domain_error("coordinate has wrong length");
    Elem out;
    for (std::uint64_t i = 0; i < r_; ++i) {
      const auto& d = digits[i];
      if (d.size() != 1 || d[0] > 1) throw std::domain_error("digit out of range for GF(2)");
      if (d[0]) out.set_coeff(static_cast<std::size_t>(i), true);
    }
    return out;
  }

  bool modulus_irreducible() const { return gf2::is_irreducible(red_.modulus()); }

  const gf2::Gf2Poly& modulus() const { return red_.modulus(); }

  FieldDesc describe() const {
    FieldDesc d;
    d.p = 2;
    d.e = 1;
    d.q = 2;
    d.r = r_;
    d.ext_mod.resize(static_cast<std::size_t>(r_) + 1);
    for (std::size_t i = 0; i <= r_; ++i)
      d.ext_mod[i] = {red_.modulus().coeff(i) ? 1u : 0u};
    return d;
  }

 private:
  gf2::Gf2Reducer red_;
  std::uint64_t r_ = 0;
};

// F_(q^r) with q = p^e as digit-vector polynomials; correct for any small
// prime power, no bit tricks.
class TowerField {
 public:
  using Elem = fq::FqPoly;

  TowerField(fq::FqCtx base, fq::FqPoly ext_mod)
      : base_(std::move(base)), mod_(fq::fq_poly_trim(std::move(ext_mod), base_)) {
    int d = fq::fq_poly_degree(mod_, base_);
    if (d < 1) throw std::domain_error("extension modulus must have degree >= 1");
    r_ = static_cast<std::uint64_t>(d);
    if (!base_.is_zero(base_.sub(mod_.back(), base_.one())))
      throw std::domain_error("extension modulus must be monic");
  }

  static TowerField make(std::uint32_t p, std::uint32_t e, std::uint64_t r) {
    fq::FqCtx base = fq::make_fq(p, e);
    fq::FqPoly mod = fq::fq_lex_least_irreducible(static_cast<std::uint32_t>(r), base);
    return TowerField(std::move(base), std::move(mod));
  }

  std::uint32_t p() const { return base_.p; }
  std::uint32_t e() const { return base_.e; }
  std::uint64_t q() const { return base_.q(); }
  std::uint64_t r() const { return r_; }
  const fq::FqCtx& base() const { return base_; }

  // Field size q^r, when it fits in 64 bits.
  std::uint64_t size_u64() const {
    std::uint64_t out = 1, qq = q();
    for (std::uint64_t i = 0; i < r_; ++i) {
      if (out > std::numeric_limits<std::uint64_t>::max() / qq)
        throw std::overflow_error("field size exceeds 64 bits");
      out *= qq;
    }
    return out;
  }

  Elem zero() const { return {}; }
  Elem one() const { return fq::fq_poly_one(base_); }
  bool is_zero(const Elem& a) const { return fq::fq_poly_degree(a, base_) < 0; }
  bool is_one(const Elem& a) const { return eq(a, one()); }
  bool eq(const Elem& a, const Elem& b) const { return fq::fq_poly_equal(a, b, base_); }

  Elem add(const Elem& a, const Elem& b) const { return fq::fq_poly_add(a, b, base_); }
  Elem sub(const Elem& a, const Elem& b) const { return fq::fq_poly_sub(a, b, base_); }
  Elem mul(const Elem& a, const Elem& b) const {
    return fq::fq_poly_mulmod(a, b, mod_, base_);
  }
  Elem inv(const Elem& a) const { return fq::fq_poly_inverse_mod(a, mod_, base_); }
  Elem frobenius(const Elem& a) const { return fq::fq_poly_powmod(a, q(), mod_, base_); }

  Elem from_uint(std::uint64_t v) const {
    // base-q digits of v, digit i the coefficient of x^i
    Elem out;
    std::uint64_t qq = q();
    while (v) {
      out.push_back(base_.from_uint(v % qq));
      v /= qq;
    }
    if (out.size() > r_) throw std::domain_error("value exceeds field size");
    return out;
  }

  std::uint64_t element_degree(const Elem& a) const {
    Elem t = frobenius(a);
    std::uint64_t k = 1;
    while (!eq(t, a)) {
      t = frobenius(t);
      if (++k > r_) throw std::logic_error("Frobenius orbit exceeded field degree");
    }
    return k;
  }

  Elem sample(Rng& rng) const {
    Elem out(static_cast<std::size_t>(r_), base_.zero());
    for (auto& c : out)
      for (auto& d : c) d = static_cast<std::uint32_t>(rng.below(base_.p));
    return out;
  }

  std::vector<std::vector<std::uint32_t>> eltseq_digits(const Elem& a) const {
    std::vector<std::vector<std::uint32_t>> out(static_cast<std::size_t>(r_), base_.zero());
    for (std::size_t i = 0; i < a.size() && i < out.size(); ++i) out[i] = a[i];
    return out;
  }

  Elem from_digits(const std::vector<std::vector<std::uint32_t>>& digits) const {
    if (digits.size() != r_) throw std::domain_error("coordinate has wrong length");
    Elem out(digits.size());
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (digits[i].size() != base_.e) throw std::domain_error("digit vector has wrong length");
      for (std::uint32_t d : digits[i])
        if (d >= base_.p) throw std::domain_error("digit out of range");
      out[i] = digits[i];
    }
    return out;
  }

  bool modulus_irreducible() const {
    if (base_.e >= 2) {
      fq::FqCtx pf = fq::FqCtx::prime_field(base_.p);
      fq::FqPoly g(base_.base_mod.size());
      for (std::size_t i = 0; i < g.size(); ++i) g[i] = fq::FqElem{base_.base_mod[i]};
      if (!fq::fq_is_irreducible(g, pf)) return false;
    }
    return fq::fq_is_irreducible(mod_, base_);
  }

  const fq::FqPoly& modulus() const { return mod_; }

  FieldDesc describe() const {
    FieldDesc d;
    d.p = base_.p;
    d.e = base_.e;
    d.q = q();
    d.r = r_;
    d.base_mod = base_.base_mod;
    d.ext_mod.assign(static_cast<std::size_t>(r_) + 1, base_.zero());
    for (std::size_t i = 0; i < mod_.size(); ++i) d.ext_mod[i] = mod_[i];
    return d;
  }

 private:
  fq::FqCtx base_;
  fq::FqPoly mod_;
  std::uint64_t r_ = 0;
};

using AnyField = std::variant<Gf2Field, TowerField>;

// Builds the tower with lex-least moduli, picking the packed engine for
// plain GF(2) towers.
inline AnyField make_field(std::uint32_t p, std::uint32_t e, std::uint64_t r) {
  if (e == 0 || r == 0) throw std::domain_error("tower degrees must be >= 1");
  if (p == 2 && e == 1) return Gf2Field::with_degree(r);
  return TowerField::make(p, e, r);
}

// Reconstructs the tower from explicit moduli (certificate verification);
// validates shape and digit ranges but not irreducibility (the caller checks
// that separately so it can report it as a distinct failure).
inline AnyField make_field_from_desc(const FieldDesc& d) {
  if (d.p < 2 || d.e == 0 || d.r == 0) throw std::domain_error("invalid field description");
  if (d.ext_mod.size() != d.r + 1) throw std::domain_error("extension modulus has wrong degree");
  if (d.p == 2 && d.e == 1) {
    gf2::Gf2Poly f;
    for (std::size_t i = 0; i < d.ext_mod.size(); ++i) {
      if (d.ext_mod[i].size() != 1 || d.ext_mod[i][0] > 1)
        throw std::domain_error("modulus digit out of range for GF(2)");
      if (d.ext_mod[i][0]) f.set_coeff(i, true);
    }
    if (!f.coeff(d.r)) throw std::domain_error("extension modulus must be monic");
    return Gf2Field(std::move(f));
  }
  fq::FqCtx base = (d.e == 1) ? fq::FqCtx::prime_field(d.p)
                              : fq::FqCtx::with_modulus(d.p, d.base_mod);
  fq::FqPoly mod(d.ext_mod.size());
  for (std::size_t i = 0; i < mod.size(); ++i) {
    if (d.ext_mod[i].size() != d.e) throw std::domain_error("modulus digit vector wrong length");
    for (std::uint32_t dg : d.ext_mod[i])
      if (dg >= d.p) throw std::domain_error("modulus digit out of range");
    mod[i] = d.ext_mod[i];
  }
  return TowerField(std::move(base), std::move(mod));
}

}  // namespace gpw

#endif  // GPW_FIELD_HPP
