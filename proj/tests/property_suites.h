// Copyright 2026 The gpw Authors
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

#ifndef GPW_TESTS_PROPERTY_SUITES_H_
#define GPW_TESTS_PROPERTY_SUITES_H_

// Randomized structural properties shared by the unit tests and the
// acceptance runner.  Each suite runs a fixed number of trials over tiny
// parameter boxes and reports the first failure; all randomness flows from
// one seed, so failures replay exactly.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "gpw/certificate.hpp"
#include "gpw/field.hpp"
#include "gpw/geometry.hpp"
#include "gpw/incidence.hpp"
#include "gpw/oracle.hpp"
#include "gpw/rng.hpp"
#include "gpw/search.hpp"

namespace gpw {
namespace props {

struct PropertyOutcome {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::string first_failure;  // empty when failures == 0

  void fail(const std::string& what) {
    ++failures;
    if (first_failure.empty()) first_failure = what;
  }
};

struct TinyParams {
  std::uint64_t q;
  std::uint32_t e;  // q = p^e
  std::uint32_t n;
  std::uint32_t d;
  std::uint64_t r;
};

// Draws one parameter tuple from the tiny box q in {2,3,4}, n in {1,2},
// d in {1,2,3}, r in {1,2,3}.
inline TinyParams draw_params(Rng& rng) {
  static const std::uint64_t qs[] = {2, 3, 4};
  TinyParams t;
  t.q = qs[rng.below(3)];
  t.e = t.q == 4 ? 2 : 1;
  t.n = 1 + static_cast<std::uint32_t>(rng.below(2));
  t.d = 1 + static_cast<std::uint32_t>(rng.below(3));
  t.r = 1 + rng.below(3);
  return t;
}

inline std::string describe(const TinyParams& t, std::uint64_t trial) {
  std::ostringstream s;
  s << "trial " << trial << " at (q=" << t.q << ", n=" << t.n << ", d=" << t.d
    << ", r=" << t.r << ")";
  return s.str();
}

template <typename Field>
std::vector<typename Field::Elem> draw_point(const Field& f, std::uint32_t n,
                                             Rng& rng) {
  std::vector<typename Field::Elem> coords;
  bool all_zero = true;
  do {
    coords.clear();
    all_zero = true;
    for (std::uint32_t i = 0; i <= n; ++i) {
      coords.push_back(f.sample(rng));
      if (!f.is_zero(coords.back())) all_zero = false;
    }
  } while (all_zero);
  normalize_point(f, coords);
  return coords;
}

// --- Suite 1: the forms vanishing at a point form an F_q-subspace. ---
// Checks the power-of-q count law (via the enumeration oracle, which counts
// every form individually), that the kernel basis has exactly dim elements,
// that each basis vector really evaluates to zero, and that a random F_q
// combination of basis vectors evaluates to zero.
inline PropertyOutcome run_subspace_law(std::uint64_t trials, std::uint64_t seed) {
  PropertyOutcome out;
  Rng rng(seed, 1);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    ++out.trials;
    TinyParams t = draw_params(rng);
    MonomialBasis basis = MonomialBasis::make(t.n, t.d);
    AnyField F = make_field(t.q == 4 ? 2 : static_cast<std::uint32_t>(t.q), t.e, t.r);
    std::visit(
        [&](const auto& f) {
          auto coords = draw_point(f, t.n, rng);
          std::uint64_t dim = vanishing_dimension(f, basis, coords).dim;
          std::uint64_t slow = 0;
          try {
            slow = brute_dimension(f, basis, coords);  // throws if not a q-power
          } catch (const std::exception& err) {
            out.fail(describe(t, trial) + ": count law broken: " + err.what());
            return;
          }
          if (slow != dim) {
            out.fail(describe(t, trial) + ": enumeration disagrees with rank");
            return;
          }
          auto kern = kernel_basis(f, basis, coords);
          if (kern.size() != dim) {
            out.fail(describe(t, trial) + ": kernel basis size != dim");
            return;
          }
          auto vals = eval_monomials(f, basis, coords);
          auto eval_vec = [&](const std::vector<std::uint64_t>& vec) {
            auto acc = f.zero();
            for (std::uint64_t j = 0; j < basis.m; ++j)
              acc = f.add(acc, f.mul(f.from_uint(vec[j]), vals[j]));
            return acc;
          };
          for (const auto& vec : kern) {
            if (!f.is_zero(eval_vec(vec))) {
              out.fail(describe(t, trial) + ": kernel vector does not vanish");
              return;
            }
          }
          if (kern.size() >= 2) {
            auto a = f.from_uint(rng.below(t.q));
            auto b = f.from_uint(rng.below(t.q));
            auto acc = f.zero();
            for (std::uint64_t j = 0; j < basis.m; ++j) {
              auto cj = f.add(f.mul(a, f.from_uint(kern[0][j])),
                              f.mul(b, f.from_uint(kern[1][j])));
              acc = f.add(acc, f.mul(cj, vals[j]));
            }
            if (!f.is_zero(acc))
              out.fail(describe(t, trial) + ": combination does not vanish");
          }
        },
        F);
    if (out.failures) return out;  // replayable: stop at first failure
  }
  return out;
}

// --- Suite 2: scaling a point never changes the vanishing dimension. ---
inline PropertyOutcome run_scaling_invariance(std::uint64_t trials,
                                              std::uint64_t seed) {
  PropertyOutcome out;
  Rng rng(seed, 2);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    ++out.trials;
    TinyParams t = draw_params(rng);
    MonomialBasis basis = MonomialBasis::make(t.n, t.d);
    AnyField F = make_field(t.q == 4 ? 2 : static_cast<std::uint32_t>(t.q), t.e, t.r);
    std::visit(
        [&](const auto& f) {
          auto coords = draw_point(f, t.n, rng);
          auto lambda = f.sample(rng);
          while (f.is_zero(lambda)) lambda = f.sample(rng);
          auto scaled = coords;
          for (auto& c : scaled) c = f.mul(c, lambda);
          std::uint64_t base = vanishing_dimension(f, basis, coords).dim;
          std::uint64_t after = vanishing_dimension(f, basis, scaled).dim;
          if (base != after)
            out.fail(describe(t, trial) + ": scaling changed the dimension");
        },
        F);
    if (out.failures) return out;
  }
  return out;
}

// --- Suite 3: the q-power (Frobenius) map fixes the vanishing dimension. ---
// The incidence rows of the image point are the Frobenius images of the
// original rows, and Frobenius is an F_q-linear bijection.
inline PropertyOutcome run_frobenius_invariance(std::uint64_t trials,
                                                std::uint64_t seed) {
  PropertyOutcome out;
  Rng rng(seed, 3);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    ++out.trials;
    TinyParams t = draw_params(rng);
    MonomialBasis basis = MonomialBasis::make(t.n, t.d);
    AnyField F = make_field(t.q == 4 ? 2 : static_cast<std::uint32_t>(t.q), t.e, t.r);
    std::visit(
        [&](const auto& f) {
          auto coords = draw_point(f, t.n, rng);
          auto mapped = coords;
          for (auto& c : mapped) c = f.frobenius(c);
          std::uint64_t base = vanishing_dimension(f, basis, coords).dim;
          std::uint64_t after = vanishing_dimension(f, basis, mapped).dim;
          if (base != after)
            out.fail(describe(t, trial) + ": Frobenius changed the dimension");
        },
        F);
    if (out.failures) return out;
  }
  return out;
}

// --- Suite 4: invertible base-field coordinate changes fix the dimension. ---
// Substituting x -> A x permutes the space of degree-d forms linearly, so
// the vanishing space at A^-1 P maps isomorphically onto the one at P.
inline PropertyOutcome run_coordinate_change_invariance(std::uint64_t trials,
                                                        std::uint64_t seed) {
  PropertyOutcome out;
  Rng rng(seed, 4);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    ++out.trials;
    TinyParams t = draw_params(rng);
    MonomialBasis basis = MonomialBasis::make(t.n, t.d);
    AnyField F = make_field(t.q == 4 ? 2 : static_cast<std::uint32_t>(t.q), t.e, t.r);
    std::visit(
        [&](const auto& f) {
          using Elem = typename std::decay_t<decltype(f)>::Elem;
          const std::uint32_t size = t.n + 1;
          // Draw matrices over F_q until the determinant is nonzero.
          std::vector<std::vector<Elem>> A;
          for (;;) {
            A.assign(size, std::vector<Elem>());
            for (auto& row : A)
              for (std::uint32_t j = 0; j < size; ++j)
                row.push_back(f.from_uint(rng.below(t.q)));
            Elem det = f.zero();
            if (size == 2) {
              det = f.sub(f.mul(A[0][0], A[1][1]), f.mul(A[0][1], A[1][0]));
            } else {
              // 3x3 cofactor expansion along the first row.
              Elem m0 = f.sub(f.mul(A[1][1], A[2][2]), f.mul(A[1][2], A[2][1]));
              Elem m1 = f.sub(f.mul(A[1][0], A[2][2]), f.mul(A[1][2], A[2][0]));
              Elem m2 = f.sub(f.mul(A[1][0], A[2][1]), f.mul(A[1][1], A[2][0]));
              det = f.add(f.sub(f.mul(A[0][0], m0), f.mul(A[0][1], m1)),
                          f.mul(A[0][2], m2));
            }
            if (!f.is_zero(det)) break;
          }
          auto coords = draw_point(f, t.n, rng);
          std::vector<Elem> image(size, f.zero());
          for (std::uint32_t i = 0; i < size; ++i)
            for (std::uint32_t j = 0; j < size; ++j)
              image[i] = f.add(image[i], f.mul(A[i][j], coords[j]));
          std::uint64_t base = vanishing_dimension(f, basis, coords).dim;
          std::uint64_t after = vanishing_dimension(f, basis, image).dim;
          if (base != after)
            out.fail(describe(t, trial) + ": coordinate change moved the dimension");
        },
        F);
    if (out.failures) return out;
  }
  return out;
}

// --- Suite 5: certificates survive serialize -> parse -> verify. ---
inline PropertyOutcome run_certificate_roundtrip(std::uint64_t trials,
                                                 std::uint64_t seed) {
  PropertyOutcome out;
  Rng rng(seed, 5);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    ++out.trials;
    TinyParams t = draw_params(rng);
    CaseParams params = make_case(t.q, t.n, t.d, t.r);
    SearchOutcome s = witness_search(params, rng.bits(), 200);
    if (!s.found) {
      out.fail(describe(t, trial) + ": no witness in 200 trials");
      return out;
    }
    std::string text = certificate_to_json(s.cert);
    Certificate back;
    try {
      back = parse_certificate(text);
    } catch (const CertificateParseError& err) {
      out.fail(describe(t, trial) + ": reparse failed: " + err.what());
      return out;
    }
    if (certificate_to_json(back) != text) {
      out.fail(describe(t, trial) + ": serialization not stable");
      return out;
    }
    VerifyOutcome v = verify_certificate(back);
    if (!v.ok) {
      out.fail(describe(t, trial) + ": round-tripped certificate rejected: " +
               v.diagnostic);
      return out;
    }
  }
  return out;
}

// --- Suite 6: searches with one seed agree byte for byte. ---
inline PropertyOutcome run_search_determinism(std::uint64_t trials,
                                              std::uint64_t seed) {
  PropertyOutcome out;
  Rng rng(seed, 6);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    ++out.trials;
    TinyParams t = draw_params(rng);
    CaseParams params = make_case(t.q, t.n, t.d, t.r);
    std::uint64_t s = rng.bits();
    SearchOutcome a = witness_search(params, s, 50);
    SearchOutcome b = witness_search(params, s, 50);
    if (a.found != b.found || a.trials != b.trials) {
      out.fail(describe(t, trial) + ": outcomes diverge");
      return out;
    }
    if (a.found && certificate_to_json(a.cert) != certificate_to_json(b.cert)) {
      out.fail(describe(t, trial) + ": certificates diverge");
      return out;
    }
  }
  return out;
}

}  // namespace props
}  // namespace gpw

#endif  // GPW_TESTS_PROPERTY_SUITES_H_
