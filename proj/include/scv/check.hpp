#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scv/padic.hpp"

namespace scv {

/// Residue-class gate p == residue (mod modulus), p >= min_prime.
struct PrimeClass {
  long modulus = 1;
  long residue = 0;
  long min_prime = 5;

  bool admits(std::int64_t p) const { return p >= min_prime && p % modulus == residue && is_prime(p); }
  std::string to_string() const;
};

/// Every verifiable statement. Lemma congruences of the last section carry a
/// "c" suffix to keep them apart from the binomial identities D1/D2.
enum class CheckId {
  THM1, THM2, CONJ1, CONJ2, VANHAMME_D2, LONG_RAMA, WOLSTENHOLME, REFLECTION,
  B1, B2, B3, B4, B5, B6, NEW1,
  C2, C3, C4, C5, C6, C7, C8, C9, C12, C13, C14, C15,
  D1c, D2c, D3c, D4c, D5c, D6c, D7c, D8c, D9c,
  B7, B8, B9, B10, C10, C11, D1, D2,
  GAMMA_REFLECTION,
};

std::string_view to_string(CheckId id);
std::optional<CheckId> parse_check_id(std::string_view name);
const std::vector<CheckId>& all_check_ids();

/// Verdict for one (check, prime) pair. For identity checks prime is 0,
/// exponent is 0 and lhs/rhs hold exact rationals.
struct CheckReport {
  std::int64_t prime = 0;
  CheckId check = CheckId::THM1;
  int exponent = 0;
  std::string lhs;  // canonical residue mod p^exponent, decimal
  std::string rhs;
  int diff_valuation = 0;  // capped at the working precision
  bool pass = false;
  std::int64_t elapsed_us = 0;
  std::string detail;  // which instance decided the verdict; not serialized
  std::string error;   // set when the check raised instead of deciding
};

/// One instance of a congruence lhs == rhs (mod p^exponent).
struct Congruence {
  std::string label;
  PadicNum lhs;
  PadicNum rhs;
  int exponent;
};

/// Verdict for a single instance; diff valuation is capped at `cap`.
CheckReport compare(CheckId id, const Congruence& c, int cap);

/// Verdict for a family of instances (a quantified lemma, or a statement with
/// several displayed parts): the first failing instance decides, otherwise
/// the instance with the least slack above its exponent.
CheckReport summarize(CheckId id, std::int64_t p, std::span<const Congruence> instances, int cap);

/// Runs fn and stamps the wall time it took into the returned report.
template <class Fn>
CheckReport timed_check(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport r = fn();
  r.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

}  // namespace scv
