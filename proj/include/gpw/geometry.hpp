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
// Degree-d monomials in n+1 variables, enumerated through the bijection with
// n-element subsets of {1..n+d}, plus evaluation at projective points.

#ifndef GPW_GEOMETRY_HPP_
#define GPW_GEOMETRY_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpw/num.hpp"

namespace gpw {

// Number of degree-d monomials in n+1 variables: C(n+d, n).
inline Int binom_m(std::uint64_t n, std::uint64_t d) { return binom(n + d, n); }

// Maps a strictly increasing n-subset s of {1..n+d} to the exponent vector
// (e_0, ..., e_n): with sentinels s_0 = 0 and s_{n+1} = n+d+1, the exponent
// of x_i is s_{i+1} - s_i - 1.  The gaps between consecutive subset elements
// sum to d, so every image is a degree-d monomial, and the map is a bijection
// onto them.
inline std::vector<std::uint32_t> subset_to_exponents(const std::vector<std::uint32_t>& s,
                                                      std::uint32_t n, std::uint32_t d) {
  if (s.size() != n) throw std::domain_error("subset_to_exponents: subset must have n elements");
  std::uint32_t prev = 0;
  std::vector<std::uint32_t> exps(n + 1);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (s[i] <= prev || s[i] > n + d)
      throw std::domain_error("subset_to_exponents: subset not strictly increasing in [1, n+d]");
    exps[i] = s[i] - prev - 1;
    prev = s[i];
  }
  exps[n] = (n + d + 1) - prev - 1;
  return exps;
}

// The ordered list of all degree-d monomials in x_0..x_n.  Order is the
// lexicographic order of the corresponding subsets, so the first monomial is
// x_n^d and the last is x_0^d.
struct MonomialBasis {
  std::uint32_t n = 0;
  std::uint32_t d = 0;
  std::uint64_t m = 0;                           // C(n+d, n), overflow-checked
  std::vector<std::vector<std::uint32_t>> exps;  // m vectors of length n+1

  static MonomialBasis make(std::uint32_t n, std::uint32_t d) {
    if (n < 1 || d < 1) throw std::domain_error("MonomialBasis: need n, d >= 1");
    MonomialBasis b;
    b.n = n;
    b.d = d;
    b.m = binom_u64(n + d, n);
    b.exps.reserve(b.m);
    // Lex-order enumeration of n-subsets of {1..n+d}: start at {1..n}; to
    // advance, bump the rightmost element that still has headroom and reset
    // everything after it to consecutive values.
    std::vector<std::uint32_t> s(n);
    for (std::uint32_t i = 0; i < n; ++i) s[i] = i + 1;
    for (;;) {
      b.exps.push_back(subset_to_exponents(s, n, d));
      std::int64_t i = static_cast<std::int64_t>(n) - 1;
      while (i >= 0 && s[static_cast<std::size_t>(i)] == d + 1 + static_cast<std::uint32_t>(i)) --i;
      if (i < 0) break;
      ++s[static_cast<std::size_t>(i)];
      for (std::size_t j = static_cast<std::size_t>(i) + 1; j < n; ++j) s[j] = s[j - 1] + 1;
    }
    if (b.exps.size() != b.m) throw std::logic_error("MonomialBasis: enumeration size mismatch");
    return b;
  }
};

// Replaces coords (not all zero) with the canonical representative of the
// same projective point: the one whose first nonzero coordinate is 1.
template <typename Field>
void normalize_point(const Field& F, std::vector<typename Field::Elem>& coords) {
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (F.is_zero(coords[i])) continue;
    if (!F.is_one(coords[i])) {
      auto s = F.inv(coords[i]);
      coords[i] = F.one();
      for (std::size_t j = i + 1; j < coords.size(); ++j) coords[j] = F.mul(coords[j], s);
    }
    return;
  }
  throw std::domain_error("normalize_point: zero vector");
}

// Evaluates the monomials of a basis at a fixed point, one at a time.  Keeps
// a table of coordinate powers so each monomial costs at most one field
// multiplication per variable it mentions.  0^0 = 1 throughout, so points
// with zero coordinates evaluate correctly.
template <typename Field>
class MonomialEvaluator {
 public:
  using Elem = typename Field::Elem;

  MonomialEvaluator(const Field& F, const MonomialBasis& basis, std::vector<Elem> coords)
      : field_(F), basis_(basis), coords_(std::move(coords)) {
    if (coords_.size() != static_cast<std::size_t>(basis_.n) + 1)
      throw std::domain_error("MonomialEvaluator: point has wrong number of coordinates");
    pow_.resize(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      pow_[i].reserve(basis_.d + 1);
      pow_[i].push_back(field_.one());
      for (std::uint32_t k = 1; k <= basis_.d; ++k)
        pow_[i].push_back(field_.mul(pow_[i][k - 1], coords_[i]));
    }
  }

  std::uint64_t size() const { return basis_.m; }

  // Value of the j-th monomial at the point.
  Elem value(std::uint64_t j) const {
    const std::vector<std::uint32_t>& e = basis_.exps.at(j);
    Elem acc = field_.one();
    bool started = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      const Elem& f = pow_[i][e[i]];
      acc = started ? field_.mul(acc, f) : f;
      started = true;
    }
    return acc;
  }

 private:
  const Field& field_;
  const MonomialBasis& basis_;
  std::vector<Elem> coords_;
  std::vector<std::vector<Elem>> pow_;
};

template <typename Field>
std::vector<typename Field::Elem> eval_monomials(const Field& F, const MonomialBasis& basis,
                                                 const std::vector<typename Field::Elem>& coords) {
  MonomialEvaluator<Field> ev(F, basis, coords);
  std::vector<typename Field::Elem> out;
  out.reserve(basis.m);
  for (std::uint64_t j = 0; j < basis.m; ++j) out.push_back(ev.value(j));
  return out;
}

// Enumerates every point of P^n over the field exactly once, as canonical
// representatives: for each position i of the first nonzero coordinate, emit
// coords = (0,...,0,1,*,...,*) with the tail running over all field elements
// in from_uint order.  Total count is (Q^{n+1}-1)/(Q-1) for Q = #field.
// Only usable when #field fits in 64 bits; intended for small brute-force
// sweeps.
template <typename Field>
class CanonicalPointEnumerator {
 public:
  using Elem = typename Field::Elem;

  CanonicalPointEnumerator(const Field& F, std::uint32_t n) : field_(F), n_(n) {
    order_ = field_.size_u64();  // throws if the field is too large
  }

  // Writes the next canonical point into coords; returns false when done.
  bool next(std::vector<Elem>& coords) {
    if (lead_ > n_) return false;
    std::size_t tail = n_ - lead_;
    if (!started_) {
      started_ = true;
      odo_.assign(tail, 0);
    } else {
      // advance the base-Q odometer over the tail
      std::size_t i = 0;
      while (i < tail && ++odo_[i] == order_) odo_[i++] = 0;
      if (i == tail) {
        ++lead_;
        if (lead_ > n_) return false;
        odo_.assign(n_ - lead_, 0);
      }
    }
    coords.assign(n_ + 1, field_.zero());
    coords[lead_] = field_.one();
    for (std::size_t j = 0; j < coords.size() - lead_ - 1; ++j)
      coords[lead_ + 1 + j] = field_.from_uint(odo_[j]);
    return true;
  }

 private:
  const Field& field_;
  std::uint32_t n_;
  std::uint64_t order_ = 0;
  std::uint32_t lead_ = 0;
  bool started_ = false;
  std::vector<std::uint64_t> odo_;
};

// (Q^{n+1} - 1) / (Q - 1): number of points of P^n over a field of size Q.
inline Int projective_point_count(const Int& field_size, std::uint32_t n) {
  Int num = 1;
  for (std::uint32_t i = 0; i <= n; ++i) num *= field_size;
  return (num - 1) / (field_size - 1);
}

}  // namespace gpw

#endif  // GPW_GEOMETRY_HPP_
