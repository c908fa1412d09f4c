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

// Batch front-end.  Machine-readable JSON lines go to stdout; human-readable
// notes and tables go to stderr.  Exit codes: 0 ok, 1 verification failure,
// 2 usage error, 3 search exhausted.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gpw/bounds.hpp"
#include "gpw/oracle.hpp"
#include "gpw/search.hpp"
#include "gpw/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotFound = 3;

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

ordered_json interval_json(const gpw::Interval& v, int digits = 12) {
  return ordered_json{{"lo", gpw::rat_to_decimal(v.lo, digits)},
                      {"hi", gpw::rat_to_decimal(v.hi, digits)}};
}

ordered_json check_json(const gpw::CheckResult& c) {
  return ordered_json{{"name", c.name},
                      {"value_lo", gpw::rat_to_decimal(c.value.lo, 12)},
                      {"value_hi", gpw::rat_to_decimal(c.value.hi, 12)},
                      {"limit", gpw::rat_to_string(c.limit)},
                      {"in_regime", c.in_regime},
                      {"verdict", c.verified ? "verified" : "not-verified"},
                      {"note", c.note}};
}

// ---------------------------------------------------------------------------
// search
// ---------------------------------------------------------------------------
int run_search(std::uint64_t q, std::uint32_t n, std::uint32_t d, std::uint64_t r,
               std::uint64_t seed, std::uint64_t max_trials,
               const std::string& out_path) {
  gpw::CaseParams params = gpw::make_case(q, n, d, r);
  gpw::SearchOutcome s = gpw::witness_search(params, seed, max_trials);
  if (!s.found) {
    std::cerr << "no witness in " << max_trials << " trials for (q=" << q
              << ", n=" << n << ", d=" << d << ", r=" << r << ")\n";
    return kExitNotFound;
  }
  std::string text = gpw::certificate_to_json(s.cert);
  std::cout << text;
  if (!out_path.empty()) write_file(out_path, text);
  std::cerr << "witness found on trial " << s.trials << "; claimed_dim "
            << s.cert.claimed_dim << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------
int run_verify(const std::vector<std::string>& paths) {
  bool all_ok = true;
  for (const std::string& path : paths) {
    ordered_json line;
    line["file"] = path;
    try {
      gpw::Certificate cert = gpw::parse_certificate(read_file(path));
      gpw::VerifyOutcome v = gpw::verify_certificate(cert);
      line["ok"] = v.ok;
      if (!v.ok) {
        line["diagnostic"] = v.diagnostic;
        std::cerr << path << ": " << v.diagnostic << "\n";
        all_ok = false;
      }
    } catch (const std::exception& err) {
      line["ok"] = false;
      line["diagnostic"] = err.what();
      std::cerr << path << ": " << err.what() << "\n";
      all_ok = false;
    }
    std::cout << line.dump() << "\n";
  }
  return all_ok ? kExitOk : kExitVerifyFailure;
}

// ---------------------------------------------------------------------------
// cases
// ---------------------------------------------------------------------------
ordered_json case_json(const gpw::CaseParams& c) {
  return ordered_json{{"q", c.q}, {"n", c.n},     {"d", c.d},
                      {"r", c.r}, {"m", c.m},     {"tag", gpw::to_string(c.tag)}};
}

int run_cases(std::uint64_t min_m, std::uint64_t max_m) {
  for (const gpw::CaseParams& c : gpw::exceptional_cases()) {
    if (c.m < min_m || c.m > max_m) continue;
    std::cout << case_json(c).dump() << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------
int run_bounds(std::uint64_t q, std::uint32_t n, std::uint32_t d, std::uint64_t r,
               unsigned prec) {
  gpw::BoundReport rep = gpw::make_bound_report(q, n, d, r, prec);
  ordered_json j;
  j["q"] = rep.q;
  j["n"] = rep.n;
  j["d"] = rep.d;
  j["r"] = rep.r;
  j["delta"] = interval_json(rep.delta_qr_d);
  j["t_upper"] = gpw::rat_to_string(rep.t_upper);
  j["t_upper_decimal"] = gpw::rat_to_decimal(rep.t_upper, 12);
  j["t_threshold"] = gpw::to_string(rep.t_verdict);
  j["mu_lower"] = interval_json(rep.mu_lower);
  ordered_json checks = ordered_json::array();
  if (rep.has_searchable_regime) checks.push_back(check_json(rep.searchable_regime));
  j["checks"] = checks;
  std::cout << j.dump() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------
struct SweepRow {
  gpw::CaseParams params;
  std::string status;  // verified | not-found | skipped-by-cap
  std::uint64_t trials = 0;
  std::int64_t ms = 0;
  std::string file;
  std::string note;
};

SweepRow sweep_one(const gpw::CaseParams& c, std::uint64_t seed,
                   std::uint64_t max_trials, const std::string& out_dir) {
  SweepRow row;
  row.params = c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    gpw::SearchOutcome s = gpw::witness_search(c, seed, max_trials);
    row.trials = s.trials;
    if (!s.found) {
      row.status = "not-found";
    } else {
      gpw::VerifyOutcome v = gpw::verify_certificate(s.cert);
      if (v.ok) {
        row.status = "verified";
        std::ostringstream name;
        name << "cert_q" << c.q << "_n" << c.n << "_d" << c.d << "_r" << c.r
             << ".json";
        row.file = (std::filesystem::path(out_dir) / name.str()).string();
        write_file(row.file, gpw::certificate_to_json(s.cert));
      } else {
        row.status = "not-found";
        row.note = v.diagnostic;
      }
    }
  } catch (const std::runtime_error& err) {
    if (std::string(err.what()).find("GPW_MAX_MEMORY_MB") != std::string::npos) {
      row.status = "skipped-by-cap";
      row.note = err.what();
    } else {
      row.status = "not-found";
      row.note = err.what();
    }
  }
  auto t1 = std::chrono::steady_clock::now();
  row.ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return row;
}

int run_sweep(std::uint64_t max_m, const std::string& out_dir, std::uint64_t seed,
              std::uint64_t max_trials, unsigned threads) {
  std::vector<gpw::CaseParams> todo;
  for (const gpw::CaseParams& c : gpw::exceptional_cases())
    if (c.m <= max_m) todo.push_back(c);
  std::filesystem::create_directories(out_dir);

  std::vector<SweepRow> rows(todo.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= todo.size()) return;
      rows[i] = sweep_one(todo[i], seed, max_trials, out_dir);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::uint64_t verified = 0, missing = 0, skipped = 0;
  std::int64_t total_ms = 0;
  for (const SweepRow& row : rows) {
    ordered_json j = case_json(row.params);
    j["status"] = row.status;
    j["trials"] = row.trials;
    j["ms"] = row.ms;
    if (!row.file.empty()) j["file"] = row.file;
    if (!row.note.empty()) j["note"] = row.note;
    std::cout << j.dump() << "\n";

    std::ostringstream line;
    line << "(q=" << row.params.q << ", n=" << row.params.n
         << ", d=" << row.params.d << ", r=" << row.params.r << ")";
    std::cerr << line.str() << std::string(line.str().size() < 32 ? 32 - line.str().size() : 1, ' ')
              << row.status << "  " << row.ms << " ms\n";

    total_ms += row.ms;
    if (row.status == "verified") ++verified;
    else if (row.status == "skipped-by-cap") ++skipped;
    else ++missing;
  }
  std::cerr << rows.size() << " cases: " << verified << " verified, " << missing
            << " not-found, " << skipped << " skipped-by-cap ("
            << total_ms / 1000.0 << " s total)\n";
  if (missing > 0) return kExitNotFound;
  if (skipped > 0) return kExitVerifyFailure;
  return kExitOk;
}

// ---------------------------------------------------------------------------
// oracle
// ---------------------------------------------------------------------------
int run_oracle_mu(std::uint64_t q, std::uint32_t n, std::uint32_t d, std::uint64_t r,
                  const gpw::OracleCaps& caps) {
  gpw::Rat mu = gpw::brute_mu(q, n, d, r, caps);
  ordered_json j{{"q", q},
                 {"n", n},
                 {"d", d},
                 {"r", r},
                 {"mu", gpw::rat_to_string(mu)},
                 {"mu_decimal", gpw::rat_to_decimal(mu, 12)}};
  std::cout << j.dump() << "\n";
  return kExitOk;
}

int run_oracle_mu_exact(std::uint64_t q, std::uint32_t d, std::uint64_t r) {
  gpw::Rat mu = gpw::mu_n1_exact(q, d, r);
  ordered_json j{{"q", q},
                 {"n", 1},
                 {"d", d},
                 {"r", r},
                 {"mu", gpw::rat_to_string(mu)},
                 {"mu_decimal", gpw::rat_to_decimal(mu, 12)}};
  std::cout << j.dump() << "\n";
  return kExitOk;
}

int run_oracle_reducibility(std::uint64_t q, std::uint32_t n, std::uint32_t d,
                            const gpw::OracleCaps& caps) {
  gpw::Rat t = gpw::brute_reducibility(q, n, d, caps);
  gpw::Rat upper = gpw::t_upper_bound(q, n, d);
  ordered_json j{{"q", q},
                 {"n", n},
                 {"d", d},
                 {"t", gpw::rat_to_string(t)},
                 {"t_decimal", gpw::rat_to_decimal(t, 12)},
                 {"t_upper_bound", gpw::rat_to_string(upper)}};
  std::cout << j.dump() << "\n";
  return kExitOk;
}

int run_oracle_grid(std::uint64_t q, std::uint32_t n, std::uint32_t d,
                    std::uint64_t r, const gpw::OracleCaps& caps) {
  auto [p, e] = gpw::prime_power_split(q);
  gpw::MonomialBasis basis = gpw::MonomialBasis::make(n, d);
  gpw::AnyField F = gpw::make_field(static_cast<std::uint32_t>(p), e, r);
  std::uint64_t points = 0, disagreements = 0;
  std::visit(
      [&](const auto& f) {
        gpw::CanonicalPointEnumerator en(f, n);
        std::vector<typename std::decay_t<decltype(f)>::Elem> pt;
        while (en.next(pt)) {
          ++points;
          std::uint64_t fast = gpw::vanishing_dimension(f, basis, pt).dim;
          std::uint64_t slow = gpw::brute_dimension(f, basis, pt, caps);
          if (fast != slow) ++disagreements;
        }
      },
      F);
  ordered_json j{{"q", q},       {"n", n},
                 {"d", d},       {"r", r},
                 {"points", points}, {"disagreements", disagreements},
                 {"agree", disagreements == 0}};
  std::cout << j.dump() << "\n";
  return disagreements == 0 ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"witness search and certified bounds for vanishing dimensions"};
  app.set_version_flag("--version", gpw::kToolVersion);
  app.require_subcommand(1);

  std::uint64_t q = 2, r = 1, seed = 0, max_trials = 1000;
  std::uint32_t n = 1, d = 1;
  unsigned prec = gpw::kDefaultRootPrecision;
  unsigned threads = 1;
  std::uint64_t min_m = 0, max_m = std::uint64_t(-1);
  std::string out_path, out_dir = "certs";
  std::vector<std::string> verify_paths;
  gpw::OracleCaps caps;

  CLI::App* search = app.add_subcommand("search", "find one witness point");
  search->add_option("--q", q, "field size (prime power)")->required();
  search->add_option("--n", n, "ambient projective dimension")->required();
  search->add_option("--d", d, "form degree")->required();
  search->add_option("--r", r, "extension degree")->required();
  search->add_option("--seed", seed, "search seed (default 0)");
  search->add_option("--max-trials", max_trials, "trial budget (default 1000)");
  search->add_option("--out", out_path, "also write the certificate here");

  CLI::App* verify = app.add_subcommand("verify", "re-verify certificates");
  verify->add_option("files", verify_paths, "certificate JSON files")
      ->required()
      ->expected(-1);

  CLI::App* cases = app.add_subcommand("cases", "list the open parameter windows");
  cases->add_option("--min-m", min_m, "keep cases with m >= this");
  cases->add_option("--max-m", max_m, "keep cases with m <= this");

  CLI::App* bounds = app.add_subcommand("bounds", "evaluate the certified bounds");
  bounds->add_option("--q", q, "field size (prime power)")->required();
  bounds->add_option("--n", n, "ambient projective dimension")->required();
  bounds->add_option("--d", d, "form degree")->required();
  bounds->add_option("--r", r, "extension degree")->required();
  bounds->add_option("--prec", prec, "enclosure precision bits (default 96)");

  CLI::App* sweep = app.add_subcommand("sweep", "search and verify every listed case");
  sweep->add_option("--max-m", max_m, "process cases with m <= this")->required();
  sweep->add_option("--out-dir", out_dir, "certificate directory (default ./certs)");
  sweep->add_option("--seed", seed, "search seed (default 0)");
  sweep->add_option("--max-trials", max_trials, "per-case trial budget");
  sweep->add_option("--threads", threads, "worker threads (default 1)");

  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive small-case checks");
  oracle->require_subcommand(1);
  CLI::App* omu = oracle->add_subcommand("mu", "success density by enumeration");
  omu->add_option("--q", q)->required();
  omu->add_option("--n", n)->required();
  omu->add_option("--d", d)->required();
  omu->add_option("--r", r)->required();
  omu->add_option("--max-points", caps.max_points, "enumeration cap");
  CLI::App* omx = oracle->add_subcommand("mu-exact", "closed-form density on a line");
  omx->add_option("--q", q)->required();
  omx->add_option("--d", d)->required();
  omx->add_option("--r", r)->required();
  CLI::App* ored = oracle->add_subcommand("reducibility",
                                          "reducible proportion by enumeration");
  ored->add_option("--q", q)->required();
  ored->add_option("--n", n)->required();
  ored->add_option("--d", d)->required();
  ored->add_option("--max-forms", caps.max_red_forms, "enumeration cap");
  CLI::App* ogrid = oracle->add_subcommand(
      "grid", "compare streamed rank with enumeration at every point");
  ogrid->add_option("--q", q)->required();
  ogrid->add_option("--n", n)->required();
  ogrid->add_option("--d", d)->required();
  ogrid->add_option("--r", r)->required();
  ogrid->add_option("--max-forms", caps.max_forms, "enumeration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*search) return run_search(q, n, d, r, seed, max_trials, out_path);
    if (*verify) return run_verify(verify_paths);
    if (*cases) return run_cases(min_m, max_m);
    if (*bounds) return run_bounds(q, n, d, r, prec);
    if (*sweep) return run_sweep(max_m, out_dir, seed, max_trials, threads);
    if (*oracle) {
      if (*omu) return run_oracle_mu(q, n, d, r, caps);
      if (*omx) return run_oracle_mu_exact(q, d, r);
      if (*ored) return run_oracle_reducibility(q, n, d, caps);
      if (*ogrid) return run_oracle_grid(q, n, d, r, caps);
    }
  } catch (const gpw::CertificateParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return kExitVerifyFailure;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
