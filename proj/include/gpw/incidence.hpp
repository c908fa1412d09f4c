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
// The core computation: the dimension of the space of degree-d forms over
// F_q vanishing at a point P of P^n(F_{q^r}), obtained as m - rank of the
// m x r matrix whose j-th row is the base-field expansion of the j-th
// monomial value at P.  Rows are generated streaming and only pivot rows are
// retained, so peak memory is about min(m,r) rows.

#ifndef GPW_INCIDENCE_HPP_
#define GPW_INCIDENCE_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "gpw/field.hpp"
#include "gpw/geometry.hpp"

namespace gpw {

// Matrix allocation budget in bytes, from GPW_MAX_MEMORY_MB (default 4096).
inline std::uint64_t memory_cap_bytes() {
  const char* env = std::getenv("GPW_MAX_MEMORY_MB");
  std::uint64_t mb = 4096;
  if (env && *env) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw std::runtime_error("GPW_MAX_MEMORY_MB must be a positive integer");
    mb = v;
  }
  return mb << 20;
}

namespace internal {

inline void check_matrix_budget(std::uint64_t bytes_needed, const char* what) {
  std::uint64_t cap = memory_cap_bytes();
  if (bytes_needed > cap)
    throw std::runtime_error(std::string(what) + " needs " +
                             std::to_string(bytes_needed >> 20) + " MB but GPW_MAX_MEMORY_MB caps " +
                             std::to_string(cap >> 20) + " MB");
}

}  // namespace internal

struct DimensionResult {
  std::uint64_t m = 0;
  std::uint64_t rank = 0;
  std::uint64_t dim = 0;       // m - rank
  std::uint64_t expected = 0;  // max(m - r, 0)
  bool expected_holds = false;
};

// Incremental rank of a bit matrix: rows arrive one at a time, get reduced
// against the stored pivot rows, and are kept only if they bring a new pivot
// column (lowest set bit).
class Gf2RowEliminator {
 public:
  explicit Gf2RowEliminator(std::uint64_t cols)
      : cols_(cols), words_((cols + 63) / 64), pivots_(cols) {
    if (cols == 0) throw std::domain_error("eliminator needs at least one column");
  }

  std::uint64_t rank() const { return rank_; }
  std::uint64_t words_per_row() const { return words_; }

  // Consumes a packed row (must be words_per_row() words, bits beyond cols
  // clear).  Returns true if the row was independent of all previous ones.
  bool add_row(std::vector<gf2::word> row) {
    std::size_t c = first_set(row, 0);
    while (c != kNone) {
      std::vector<gf2::word>& pv = pivots_[c];
      if (pv.empty()) {
        pivots_[c] = std::move(row);
        ++rank_;
        return true;
      }
      const std::size_t w0 = c / 64;
      for (std::size_t w = w0; w < words_; ++w) row[w] ^= pv[w];
      c = first_set(row, c + 1);  // bit c just cancelled
    }
    return false;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t first_set(const std::vector<gf2::word>& row, std::size_t from) const {
    std::size_t w = from / 64;
    if (w >= words_) return kNone;
    gf2::word cur = row[w] & (~gf2::word(0) << (from % 64));
    for (;;) {
      if (cur) return w * 64 + static_cast<std::size_t>(__builtin_ctzll(cur));
      if (++w == words_) return kNone;
      cur = row[w];
    }
  }

  std::uint64_t cols_;
  std::size_t words_;
  std::uint64_t rank_ = 0;
  std::vector<std::vector<gf2::word>> pivots_;  // indexed by pivot column
};

// Same protocol over a prime field F_p, p odd and small.  Row updates are
// accumulated in 64-bit lanes and reduced once per incoming row (the bound
// below keeps every lane < 2^63), which is the point of taking p < 2^20.
class FpRowEliminator {
 public:
  FpRowEliminator(std::uint32_t p, std::uint64_t cols) : p_(p), cols_(cols), pivots_(cols) {
    if (cols == 0) throw std::domain_error("eliminator needs at least one column");
    if (p < 2 || p >= (1u << 20)) throw std::domain_error("prime out of range for this eliminator");
    if (cols_ > (std::uint64_t(1) << 22))
      throw std::domain_error("too many columns for delayed reduction");
  }

  std::uint64_t rank() const { return rank_; }

  // Row entries must already be in [0, p).
  bool add_row(const std::vector<std::uint32_t>& row) {
    acc_.assign(row.begin(), row.end());
    for (std::size_t c = 0; c < cols_; ++c) {
      std::uint64_t lead = acc_[c] % p_;
      if (lead == 0) continue;
      const std::vector<std::uint32_t>& pv = pivots_[c];
      if (pv.empty()) {
        // new pivot: normalize so the leading entry is 1
        std::uint64_t s = inv_mod_p(lead);
        std::vector<std::uint32_t> keep(cols_);
        for (std::size_t k = c; k < cols_; ++k)
          keep[k] = static_cast<std::uint32_t>((acc_[k] % p_) * s % p_);
        pivots_[c] = std::move(keep);
        ++rank_;
        return true;
      }
      // acc -= lead * pivot, as acc += (p - lead) * pivot
      std::uint64_t f = p_ - lead;
      for (std::size_t k = c; k < cols_; ++k) acc_[k] += f * pv[k];
      acc_[c] %= p_;  // now 0; keep lanes bounded as c advances
    }
    return false;
  }

 private:
  std::uint64_t inv_mod_p(std::uint64_t a) const {
    // Fermat: a^(p-2) mod p
    std::uint64_t r = 1, b = a % p_, ee = p_ - 2;
    while (ee) {
      if (ee & 1) r = r * b % p_;
      b = b * b % p_;
      ee >>= 1;
    }
    return r;
  }

  std::uint32_t p_;
  std::uint64_t cols_;
  std::uint64_t rank_ = 0;
  std::vector<std::vector<std::uint32_t>> pivots_;
  std::vector<std::uint64_t> acc_;
};

// Fallback for q = p^e with e >= 2: entries are field elements handled
// through FqCtx.  Only used at small scales, so plain immediate arithmetic.
class FqRowEliminator {
 public:
  FqRowEliminator(const fq::FqCtx& ctx, std::uint64_t cols) : ctx_(ctx), cols_(cols), pivots_(cols) {
    if (cols == 0) throw std::domain_error("eliminator needs at least one column");
  }

  std::uint64_t rank() const { return rank_; }

  bool add_row(std::vector<fq::FqElem> row) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (ctx_.is_zero(row[c])) continue;
      std::vector<fq::FqElem>& pv = pivots_[c];
      if (pv.empty()) {
        fq::FqElem s = ctx_.inv(row[c]);
        for (std::size_t k = c; k < cols_; ++k) row[k] = ctx_.mul(row[k], s);
        pivots_[c] = std::move(row);
        ++rank_;
        return true;
      }
      fq::FqElem f = row[c];
      for (std::size_t k = c; k < cols_; ++k)
        row[k] = ctx_.sub(row[k], ctx_.mul(f, pv[k]));
    }
    return false;
  }

 private:
  const fq::FqCtx& ctx_;
  std::uint64_t cols_;
  std::uint64_t rank_ = 0;
  std::vector<std::vector<fq::FqElem>> pivots_;
};

namespace internal {

struct StreamOutcome {
  std::uint64_t rank = 0;
  std::uint64_t rows_seen = 0;
  int settled = 0;  // +1: expected dimension proven, -1: refuted, 0: ran to the end
};

// Feeds the m monomial rows into an eliminator.  With early_abort the loop
// stops as soon as the answer to "is rank = min(m, r)?" is decided: rank
// already at the target (yes), or more dependent rows than m - min(m, r)
// (no).
template <typename Field, typename Elim, typename Pack>
StreamOutcome stream_rows(const Field& F, const MonomialBasis& basis,
                          const std::vector<typename Field::Elem>& point, Elim& elim, Pack pack,
                          bool early_abort) {
  MonomialEvaluator<Field> ev(F, basis, point);
  const std::uint64_t m = basis.m;
  const std::uint64_t target = std::min<std::uint64_t>(m, F.r());
  const std::uint64_t budget = m - target;
  std::uint64_t deps = 0;
  StreamOutcome out;
  for (std::uint64_t j = 0; j < m; ++j) {
    if (!elim.add_row(pack(ev.value(j)))) ++deps;
    out.rows_seen = j + 1;
    if (early_abort) {
      if (elim.rank() == target) {
        out.settled = 1;
        break;
      }
      if (deps > budget) {
        out.settled = -1;
        break;
      }
    }
  }
  out.rank = elim.rank();
  return out;
}

inline StreamOutcome stream_dimension(const Gf2Field& F, const MonomialBasis& basis,
                                      const std::vector<Gf2Field::Elem>& point, bool early_abort) {
  const std::uint64_t r = F.r();
  const std::uint64_t words = (r + 63) / 64;
  check_matrix_budget(std::min<std::uint64_t>(basis.m, r) * words * 8, "rank computation");
  Gf2RowEliminator elim(r);
  auto pack = [&](const Gf2Field::Elem& v) {
    std::vector<gf2::word> row(v.words());
    row.resize(words, 0);
    return row;
  };
  return stream_rows(F, basis, point, elim, pack, early_abort);
}

inline StreamOutcome stream_dimension(const TowerField& F, const MonomialBasis& basis,
                                      const std::vector<TowerField::Elem>& point,
                                      bool early_abort) {
  const std::uint64_t r = F.r();
  const fq::FqCtx& ctx = F.base();
  if (ctx.e == 1 && ctx.p < (1u << 20) && r <= (std::uint64_t(1) << 22)) {
    check_matrix_budget(std::min<std::uint64_t>(basis.m, r) * r * 4, "rank computation");
    FpRowEliminator elim(ctx.p, r);
    auto pack = [&](const TowerField::Elem& v) {
      std::vector<std::uint32_t> row(r, 0);
      for (std::size_t i = 0; i < v.size(); ++i) row[i] = v[i][0];
      return row;
    };
    return stream_rows(F, basis, point, elim, pack, early_abort);
  }
  check_matrix_budget(std::min<std::uint64_t>(basis.m, r) * r * (ctx.e * 4ull + 32), "rank computation");
  FqRowEliminator elim(ctx, r);
  auto pack = [&](const TowerField::Elem& v) {
    std::vector<fq::FqElem> row(r, ctx.zero());
    for (std::size_t i = 0; i < v.size(); ++i) row[i] = v[i];
    return row;
  };
  return stream_rows(F, basis, point, elim, pack, early_abort);
}

}  // namespace internal

// Exact dimension of {F in S_{n,d}(F_q) : F(P) = 0}.
template <typename Field>
DimensionResult vanishing_dimension(const Field& F, const MonomialBasis& basis,
                                    const std::vector<typename Field::Elem>& point) {
  internal::StreamOutcome s = internal::stream_dimension(F, basis, point, false);
  DimensionResult res;
  res.m = basis.m;
  res.rank = s.rank;
  res.dim = basis.m - s.rank;
  res.expected = basis.m > F.r() ? basis.m - F.r() : 0;
  res.expected_holds = res.dim == res.expected;
  return res;
}

// True iff the dimension equals max(m - r, 0), i.e. the monomial values at P
// span the largest possible space.  Stops streaming as soon as the verdict
// is forced, which matters when m = r and most sampled points succeed.
template <typename Field>
bool expected_dimension_holds(const Field& F, const MonomialBasis& basis,
                              const std::vector<typename Field::Elem>& point) {
  internal::StreamOutcome s = internal::stream_dimension(F, basis, point, true);
  if (s.settled != 0) return s.settled > 0;
  return s.rank == std::min<std::uint64_t>(basis.m, F.r());
}

// Echelon basis of the left kernel: coefficient vectors c (length m, entries
// in [0, q) via the digit encoding) with sum_j c_j * M_j(P) = 0.  Tracks row
// combinations through the elimination, so memory grows with m^2; guarded by
// the same budget as the matrices.  Each basis vector has its highest
// nonzero coordinate at a distinct monomial index.
template <typename Field>
std::vector<std::vector<std::uint64_t>> kernel_basis(const Field& F, const MonomialBasis& basis,
                                                     const std::vector<typename Field::Elem>& point) {
  FieldDesc dsc = F.describe();
  fq::FqCtx ctx = dsc.e == 1 ? fq::FqCtx::prime_field(dsc.p)
                             : fq::FqCtx::with_modulus(dsc.p, dsc.base_mod);
  const std::uint64_t m = basis.m;
  const std::uint64_t r = F.r();
  internal::check_matrix_budget((std::min<std::uint64_t>(m, r) * r + m * m) * (dsc.e * 4ull + 8),
                                "kernel computation");

  MonomialEvaluator<Field> ev(F, basis, point);
  // pivot rows with their tags: tag = combination of input rows giving the row
  std::vector<std::vector<fq::FqElem>> pivot_row(r);
  std::vector<std::vector<fq::FqElem>> pivot_tag(r);
  std::vector<std::vector<std::uint64_t>> kernel;

  for (std::uint64_t j = 0; j < m; ++j) {
    auto digits = F.eltseq_digits(ev.value(j));
    std::vector<fq::FqElem> row(r, ctx.zero());
    for (std::size_t i = 0; i < digits.size(); ++i) row[i] = digits[i];
    std::vector<fq::FqElem> tag(m, ctx.zero());
    tag[j] = ctx.one();

    bool independent = false;
    for (std::size_t c = 0; c < r; ++c) {
      if (ctx.is_zero(row[c])) continue;
      if (pivot_row[c].empty()) {
        fq::FqElem s = ctx.inv(row[c]);
        for (auto& v : row) v = ctx.mul(v, s);
        for (auto& v : tag) v = ctx.mul(v, s);
        pivot_row[c] = std::move(row);
        pivot_tag[c] = std::move(tag);
        independent = true;
        break;
      }
      fq::FqElem f = row[c];
      for (std::size_t k = c; k < r; ++k)
        row[k] = ctx.sub(row[k], ctx.mul(f, pivot_row[c][k]));
      for (std::size_t k = 0; k < m; ++k)
        tag[k] = ctx.sub(tag[k], ctx.mul(f, pivot_tag[c][k]));
    }
    if (!independent) {
      std::vector<std::uint64_t> vec(m);
      for (std::size_t k = 0; k < m; ++k) vec[k] = ctx.to_uint(tag[k]);
      kernel.push_back(std::move(vec));
    }
  }
  return kernel;
}

}  // namespace gpw

#endif  // GPW_INCIDENCE_HPP_
