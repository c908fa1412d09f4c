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

// Checks the shipped certificate fixtures: every case with m <= 1000 must
// have a certificate that verifies from scratch, and any larger shipped
// certificate must at least parse and be internally consistent.  The large
// ones are re-verified by the acceptance runner, not here, because a single
// full verification takes minutes.

#include <gtest/gtest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "gpw/certificate.hpp"
#include "gpw/search.hpp"

namespace gpw {
namespace {

namespace fs = std::filesystem;

constexpr std::uint64_t kFullVerifyLimit = 1000;  // largest m verified here

std::string cert_dir() { return std::string(GPW_FIXTURE_DIR) + "/certs"; }

std::string expected_name(const CaseParams& c) {
  std::ostringstream name;
  name << "cert_q" << c.q << "_n" << c.n << "_d" << c.d << "_r" << c.r
       << ".json";
  return name.str();
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TEST(Fixtures, EverySmallCaseHasACertificate) {
  std::set<std::string> present;
  for (const auto& entry : fs::directory_iterator(cert_dir()))
    present.insert(entry.path().filename().string());
  std::uint64_t expected = 0;
  for (const CaseParams& c : exceptional_cases()) {
    if (c.m > kFullVerifyLimit) continue;
    ++expected;
    EXPECT_TRUE(present.count(expected_name(c)))
        << "missing certificate " << expected_name(c);
  }
  EXPECT_EQ(expected, 416u);
}

TEST(Fixtures, SmallCertificatesVerifyFromScratch) {
  std::uint64_t verified = 0;
  for (const CaseParams& c : exceptional_cases()) {
    if (c.m > kFullVerifyLimit) continue;
    fs::path path = fs::path(cert_dir()) / expected_name(c);
    ASSERT_TRUE(fs::exists(path)) << path;
    Certificate cert;
    ASSERT_NO_THROW(cert = parse_certificate(slurp(path))) << path;
    EXPECT_EQ(cert.q, c.q);
    EXPECT_EQ(cert.n, c.n);
    EXPECT_EQ(cert.d, c.d);
    EXPECT_EQ(cert.r, c.r);
    VerifyOutcome v = verify_certificate(cert);
    EXPECT_TRUE(v.ok) << path << ": " << v.diagnostic;
    if (v.ok) ++verified;
  }
  EXPECT_EQ(verified, 416u);
}

TEST(Fixtures, LargeCertificatesAreInternallyConsistent) {
  for (const auto& entry : fs::directory_iterator(cert_dir())) {
    Certificate cert;
    ASSERT_NO_THROW(cert = parse_certificate(slurp(entry.path())))
        << entry.path();
    std::uint64_t m = 1;
    for (std::uint32_t i = 1; i <= cert.n; ++i)
      m = m * (cert.d + i) / i;  // C(n + d, n), exact at these sizes
    if (m <= kFullVerifyLimit) continue;
    EXPECT_EQ(cert.claimed_dim, m > cert.r ? m - cert.r : 0) << entry.path();
    EXPECT_EQ(cert.point.size(), cert.n + 1u) << entry.path();
    for (const auto& coord : cert.point) {
      EXPECT_EQ(coord.size(), cert.r) << entry.path();
      for (const auto& digits : coord) EXPECT_EQ(digits.size(), cert.e);
    }
    EXPECT_EQ(cert.ext_mod.size(), cert.r + 1u) << entry.path();
    EXPECT_EQ(cert.tool_version, kToolVersion) << entry.path();
  }
}

}  // namespace
}  // namespace gpw
