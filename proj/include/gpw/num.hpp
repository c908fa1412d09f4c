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

#ifndef GPW_NUM_HPP
#define GPW_NUM_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gpw {

using Int = mpz_class;
using Rat = mpq_class;

inline Int binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// binom(n, k) when the caller has established the result fits in 64 bits.
inline std::uint64_t binom_u64(std::uint64_t n, std::uint64_t k) {
  Int b = binom(n, k);
  if (!b.fits_ulong_p())
    throw std::overflow_error("binomial coefficient exceeds 64 bits: C(" + std::to_string(n) +
                              "," + std::to_string(k) + ")");
  return mpz_get_ui(b.get_mpz_t());
}

inline Int ipow(const Int& base, std::uint64_t exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

inline Int ipow(std::uint64_t base, std::uint64_t exp) { return ipow(Int(static_cast<unsigned long>(base)), exp); }

// q^e for a signed exponent, as an exact rational.
inline Rat qpow(const Int& q, const Int& e) {
  if (q <= 0) throw std::domain_error("qpow: base must be positive");
  if (!e.fits_slong_p()) throw std::overflow_error("qpow: exponent out of range");
  long ee = mpz_get_si(e.get_mpz_t());
  Int p = ipow(q, static_cast<std::uint64_t>(ee < 0 ? -ee : ee));
  Rat out = (ee < 0) ? Rat(1, p) : Rat(p, 1);
  out.canonicalize();
  return out;
}

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  Int z(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;  // exact for 64-bit inputs in practice
}

inline std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n) {
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

inline std::vector<std::uint64_t> divisors_u64(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline int moebius_u64(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

// Decimal rendering of a rational bound value for reports; exact values keep
// the "a/b" form alongside.
inline std::string rat_to_decimal(const Rat& x, int digits = 12) {
  mpf_class f(x, 256);
  mp_exp_t exp;
  std::string mant = f.get_str(exp, 10, static_cast<std::size_t>(digits));
  if (mant.empty() || mant == "-") return "0";
  bool neg = mant[0] == '-';
  if (neg) mant = mant.substr(1);
  std::string out = std::string(neg ? "-" : "") + "0." + mant + "e" + std::to_string(exp);
  return out;
}

inline std::string rat_to_string(const Rat& x) { return x.get_str(); }

// Writes q as p^e with p prime; rejects anything that is not a prime power.
inline std::pair<std::uint64_t, std::uint32_t> prime_power_split(std::uint64_t q) {
  if (q < 2) throw std::domain_error("prime power must be at least 2");
  std::uint64_t p = q;
  for (std::uint64_t f = 2; f * f <= q; ++f) {
    if (q % f == 0) {
      p = f;
      break;
    }
  }
  std::uint32_t e = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1)
    throw std::domain_error(std::to_string(q) + " is not a prime power");
  return {p, e};
}

}  // namespace gpw

#endif  // GPW_NUM_HPP
