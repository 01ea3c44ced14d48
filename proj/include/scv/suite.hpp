#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "scv/check.hpp"
#include "scv/identities.hpp"
#include "scv/registry.hpp"
#include "scv/report.hpp"

namespace scv {

struct SuiteConfig {
  std::int64_t prime_lo = 5;
  std::int64_t prime_hi = 1000;
  std::vector<CheckId> checks;  // prime-indexed checks
  std::vector<IdentityId> identities;
  long n_lo = 1;
  long n_hi = 200;
  VerifyParams params;
  ReportFormat format = ReportFormat::Jsonl;
  std::string out = "-";
  unsigned jobs = 0;  // 0: one per hardware thread
};

/// Expands a comma-separated selection into prime-indexed checks and
/// identities. Besides individual names it accepts the groups THEOREMS,
/// CONJECTURES, LEMMAS, GAMMA, IDENTITIES and ALL.
void select_checks(std::string_view list, SuiteConfig& config);

/// "lo:hi" (inclusive) or a single value.
std::pair<long, long> parse_range(std::string_view text);

/// "auto" (0) or a positive count.
unsigned parse_jobs(std::string_view text);

/// Applies one key=value setting (keys: primes, checks, precision, n,
/// gamma_budget, format, out, jobs).
void apply_setting(std::string_view key, std::string_view value, SuiteConfig& config);

/// Flat key=value file; blank lines and lines starting with '#' are skipped.
/// A "checks" entry replaces whatever selection the config already held.
void apply_config_file(const std::string& path, SuiteConfig& config);

/// Throws ConfigInvalid on an unusable configuration.
void validate(const SuiteConfig& config);

struct SuiteSummary {
  std::size_t reports = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t errors = 0;
  std::size_t skipped = 0;  // (check, prime) pairs outside the class or budget
  double seconds = 0;
  std::vector<std::string> problems;

  bool ok() const { return failed == 0 && errors == 0; }
};

/// Verifies every applicable (check, prime) pair and every selected identity.
/// Work is spread over `jobs` threads, one prime per task; `sink` is called
/// from the calling thread only, in prime order, identities last.
SuiteSummary run_suite(const SuiteConfig& config, const std::function<void(const CheckReport&)>& sink);

}  // namespace scv
