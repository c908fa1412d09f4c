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

#ifndef GPW_CERTIFICATE_HPP_
#define GPW_CERTIFICATE_HPP_

// Witness certificates: a replayable record of one verified point.  The JSON
// layout is part of the tool's contract and is kept bit-stable:
//
//   {"q":..,"n":..,"d":..,"r":..,"p":..,"e":..,
//    "base_modulus":[c0,...],            // only when e >= 2
//    "ext_modulus":[[digits],...],       // r+1 ascending coefficients
//    "point":[[[digits],...],...],       // n+1 coords, each r digit vectors
//    "claimed_dim":..,"seed":..,"tool_version":".."}
//
// Digit vectors always have length e (coefficients over F_p, ascending), so
// a coordinate is exactly the eltseq of the element it encodes.  Files are
// UTF-8 and newline-terminated.  Verification trusts nothing: it rebuilds
// the tower from the embedded moduli, re-checks irreducibility, and
// recomputes the vanishing dimension from scratch.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "gpw/field.hpp"
#include "gpw/geometry.hpp"
#include "gpw/incidence.hpp"
#include "gpw/version.hpp"

namespace gpw {

struct Certificate {
  std::uint64_t q = 0;
  std::uint32_t n = 0;
  std::uint32_t d = 0;
  std::uint64_t r = 0;
  std::uint32_t p = 0;
  std::uint32_t e = 1;
  std::vector<std::uint32_t> base_mod;              // empty when e == 1
  std::vector<std::vector<std::uint32_t>> ext_mod;  // r + 1 coefficients
  // n + 1 coordinates, each the eltseq of one element: r digit vectors of
  // length e.
  std::vector<std::vector<std::vector<std::uint32_t>>> point;
  std::uint64_t claimed_dim = 0;
  std::uint64_t seed = 0;
  std::string tool_version = kToolVersion;
};

// Malformed JSON (bad syntax, missing keys, wrong types).  Values that parse
// cleanly but fail consistency checks are not parse errors; they surface as
// verification failures instead.
class CertificateParseError : public std::runtime_error {
 public:
  explicit CertificateParseError(const std::string& what)
      : std::runtime_error(what) {}
};

namespace cert_internal {

inline std::uint64_t get_u64(const nlohmann::ordered_json& j, const char* key) {
  if (!j.contains(key))
    throw CertificateParseError(std::string("missing key: ") + key);
  const auto& v = j.at(key);
  if (!v.is_number_unsigned())
    throw CertificateParseError(std::string("key is not an unsigned integer: ") + key);
  return v.get<std::uint64_t>();
}

inline std::uint32_t get_u32(const nlohmann::ordered_json& j, const char* key) {
  std::uint64_t v = get_u64(j, key);
  if (v > 0xffffffffull)
    throw CertificateParseError(std::string("value out of range: ") + key);
  return static_cast<std::uint32_t>(v);
}

inline std::vector<std::uint32_t> digit_vector(const nlohmann::ordered_json& v,
                                               const char* what) {
  if (!v.is_array())
    throw CertificateParseError(std::string(what) + ": expected an array");
  std::vector<std::uint32_t> out;
  out.reserve(v.size());
  for (const auto& d : v) {
    if (!d.is_number_unsigned() || d.get<std::uint64_t>() > 0xffffffffull)
      throw CertificateParseError(std::string(what) +
                                  ": digits must be unsigned integers");
    out.push_back(d.get<std::uint32_t>());
  }
  return out;
}

}  // namespace cert_internal

// Serializes to the stable layout above; the result ends with a newline.
inline std::string certificate_to_json(const Certificate& c) {
  nlohmann::ordered_json j;
  j["q"] = c.q;
  j["n"] = c.n;
  j["d"] = c.d;
  j["r"] = c.r;
  j["p"] = c.p;
  j["e"] = c.e;
  if (c.e >= 2) j["base_modulus"] = c.base_mod;
  j["ext_modulus"] = c.ext_mod;
  j["point"] = c.point;
  j["claimed_dim"] = c.claimed_dim;
  j["seed"] = c.seed;
  j["tool_version"] = c.tool_version;
  return j.dump() + "\n";
}

// Parses the JSON layout; throws CertificateParseError on anything that is
// not structurally a certificate.  No consistency checking happens here.
inline Certificate parse_certificate(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw CertificateParseError(std::string("invalid JSON: ") + err.what());
  }
  if (!j.is_object()) throw CertificateParseError("top level is not an object");

  using cert_internal::digit_vector;
  using cert_internal::get_u32;
  using cert_internal::get_u64;

  Certificate c;
  c.q = get_u64(j, "q");
  c.n = get_u32(j, "n");
  c.d = get_u32(j, "d");
  c.r = get_u64(j, "r");
  c.p = get_u32(j, "p");
  c.e = get_u32(j, "e");
  if (j.contains("base_modulus"))
    c.base_mod = digit_vector(j.at("base_modulus"), "base_modulus");
  if (!j.contains("ext_modulus") || !j.at("ext_modulus").is_array())
    throw CertificateParseError("ext_modulus: expected an array");
  for (const auto& coeff : j.at("ext_modulus"))
    c.ext_mod.push_back(digit_vector(coeff, "ext_modulus"));
  if (!j.contains("point") || !j.at("point").is_array())
    throw CertificateParseError("point: expected an array");
  for (const auto& coord : j.at("point")) {
    if (!coord.is_array())
      throw CertificateParseError("point: coordinates must be arrays");
    std::vector<std::vector<std::uint32_t>> digits;
    for (const auto& dv : coord) digits.push_back(digit_vector(dv, "point"));
    c.point.push_back(std::move(digits));
  }
  c.claimed_dim = get_u64(j, "claimed_dim");
  c.seed = get_u64(j, "seed");
  if (!j.contains("tool_version") || !j.at("tool_version").is_string())
    throw CertificateParseError("tool_version: expected a string");
  c.tool_version = j.at("tool_version").get<std::string>();
  return c;
}

struct VerifyOutcome {
  bool ok = false;
  std::string diagnostic;  // empty on success
  std::uint64_t computed_dim = 0;
  std::uint64_t expected_dim = 0;
};

// Full re-verification from the embedded data only.  Never throws on
// inconsistent input: every defect becomes {false, diagnostic}.  (Parse
// errors are the caller's concern; this takes an already-parsed record.)
inline VerifyOutcome verify_certificate(const Certificate& c) {
  VerifyOutcome out;

  // Parameter sanity.
  if (c.p < 2 || c.e == 0 || c.r == 0 || c.n == 0 || c.d == 0) {
    out.diagnostic = "bad parameters: need p >= 2, e, r, n, d >= 1";
    return out;
  }
  for (std::uint32_t f = 2; static_cast<std::uint64_t>(f) * f <= c.p; ++f) {
    if (c.p % f == 0) {
      out.diagnostic = "bad parameters: p is not prime";
      return out;
    }
  }
  std::uint64_t qq = 1;
  for (std::uint32_t i = 0; i < c.e; ++i) {
    if (qq > std::numeric_limits<std::uint64_t>::max() / c.p) {
      out.diagnostic = "bad parameters: q overflows";
      return out;
    }
    qq *= c.p;
  }
  if (qq != c.q) {
    out.diagnostic = "bad parameters: q != p^e";
    return out;
  }

  // Rebuild the tower from the embedded moduli.
  FieldDesc desc;
  desc.p = c.p;
  desc.e = c.e;
  desc.q = c.q;
  desc.r = c.r;
  desc.base_mod = c.base_mod;
  desc.ext_mod = c.ext_mod;
  if (c.e >= 2 && desc.base_mod.size() != c.e + 1) {
    out.diagnostic = "bad modulus: base modulus has wrong degree";
    return out;
  }

  try {
    AnyField F = make_field_from_desc(desc);
    return std::visit(
        [&](const auto& field) {
          VerifyOutcome res;
          if (!field.modulus_irreducible()) {
            res.diagnostic = "bad modulus: not irreducible";
            return res;
          }
          using Field = std::decay_t<decltype(field)>;
          using Elem = typename Field::Elem;

          if (c.point.size() != static_cast<std::size_t>(c.n) + 1) {
            res.diagnostic = "bad point: wrong coordinate count";
            return res;
          }
          std::vector<Elem> coords;
          bool all_zero = true;
          for (const auto& digits : c.point) {
            Elem el = field.from_digits(digits);  // validates shape and range
            if (!field.is_zero(el)) all_zero = false;
            coords.push_back(std::move(el));
          }
          if (all_zero) {
            res.diagnostic = "bad point: all coordinates are zero";
            return res;
          }

          MonomialBasis basis = MonomialBasis::make(c.n, c.d);
          DimensionResult dim = vanishing_dimension(field, basis, coords);
          res.computed_dim = dim.dim;
          res.expected_dim = dim.expected;
          if (dim.dim != dim.expected) {
            res.diagnostic = "dimension mismatch: computed " +
                             std::to_string(dim.dim) + ", expected " +
                             std::to_string(dim.expected);
            return res;
          }
          if (c.claimed_dim != dim.dim) {
            res.diagnostic = "dimension mismatch: claimed " +
                             std::to_string(c.claimed_dim) + ", computed " +
                             std::to_string(dim.dim);
            return res;
          }
          res.ok = true;
          return res;
        },
        F);
  } catch (const std::exception& err) {
    out.diagnostic = std::string("inconsistent certificate: ") + err.what();
    return out;
  }
}

// Packages a verified point into a certificate.  The field supplies its own
// description, so the emitted record is self-contained.
template <typename Field>
Certificate make_certificate(const Field& field, std::uint32_t n, std::uint32_t d,
                             const std::vector<typename Field::Elem>& coords,
                             std::uint64_t claimed_dim, std::uint64_t seed) {
  FieldDesc desc = field.describe();
  Certificate c;
  c.q = desc.q;
  c.n = n;
  c.d = d;
  c.r = desc.r;
  c.p = desc.p;
  c.e = desc.e;
  c.base_mod = desc.base_mod;
  c.ext_mod = desc.ext_mod;
  for (const auto& el : coords) c.point.push_back(field.eltseq_digits(el));
  c.claimed_dim = claimed_dim;
  c.seed = seed;
  return c;
}

}  // namespace gpw

#endif  // GPW_CERTIFICATE_HPP_
