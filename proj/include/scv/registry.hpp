#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "scv/bernoulli.hpp"
#include "scv/check.hpp"
#include "scv/gamma.hpp"
#include "scv/harmonic.hpp"
#include "scv/padic.hpp"

namespace scv {

struct VerifyParams {
  int precision = 8;
  std::int64_t gamma_budget = kDefaultGammaBudget;
  std::uint64_t bernoulli_oracle_cap = 2000;  // largest p for the O(p^2) table
};

/// Quantities shared by the checks at one prime, computed on first use.
/// A context is confined to the thread that owns it.
class PrimeContext {
 public:
  PrimeContext(std::int64_t p, const VerifyParams& params);

  std::int64_t p() const { return ring_.prime(); }
  const Ring& ring() const { return ring_; }
  const VerifyParams& params() const { return params_; }
  /// (p-1)/3 for p == 1 (mod 3), (p+1)/3 for p == 2 (mod 3).
  long n() const { return n_; }

  PadicNum integer(long v) const { return ring_.from_integer(Int(v)); }
  PadicNum rational(long num, long den) const { return ring_.from_rational(Rat(num, den)); }
  PadicNum p_power(int e) const { return ring_.prime_power_element(e); }
  PadicNum binomial(long top, long k) const;

  /// H_m^(r) for 0 <= m <= p-1.
  const PadicNum& H(long m, int r = 1);
  /// S_m^(r) and T_m^(r) for the m whose denominators stay below p.
  const PadicNum& S(long m, int r = 1);
  const PadicNum& T(long m, int r = 1);

  /// sum_{k=lo}^{hi} H_{offset+k} / k
  PadicNum shifted_harmonic_sum(long lo, long hi, long offset);

  /// B_{p-2}(1/3) mod p as a p-adic number known to one digit.
  const PadicNum& bernoulli13();
  /// Same value from the full Bernoulli table (BudgetExceeded above the cap).
  const PadicNum& bernoulli13_recurrence();

  /// Theorem sum for this prime's residue class, plain and inner-weighted.
  const PadicNum& theorem_lhs();
  const PadicNum& inner_weighted();
  const PadicNum& vanhamme_lhs();
  /// Gamma_p(1/3) known mod p^precision.
  PadicNum gamma_third(int precision) const;

 private:
  const HarmonicTable<Ring>& table(HarmonicFamily f, int r);

  VerifyParams params_;
  Ring ring_;
  long n_;
  std::map<std::pair<HarmonicFamily, int>, std::unique_ptr<HarmonicTable<Ring>>> tables_;
  std::optional<PadicNum> b13_, b13_rec_, thm_lhs_, inner_, vanhamme_;
};

using InstanceFn = std::vector<Congruence> (*)(PrimeContext&);

/// One row of the congruence inventory.
struct CheckDef {
  CheckId id;
  PrimeClass cls;
  int exponent;  // highest power of p the statement claims
  bool quantified;
  std::string statement;
  InstanceFn instances;
};

const std::vector<CheckDef>& check_registry();
const CheckDef* find_check(CheckId id);

/// Whether `id` is applicable at p under `params` (residue class, plus the
/// Gamma product budget and the Bernoulli oracle cap where relevant).
bool applicable(const CheckDef& def, std::int64_t p, const VerifyParams& params);

/// Runs one registered check at p; throws InapplicablePrime / WrongResidueClass
/// when p is outside the check's class.
CheckReport run_check(CheckId id, std::int64_t p, const VerifyParams& params = {});
CheckReport run_check(const CheckDef& def, PrimeContext& ctx);

/// THM1 / THM2 at `exponent` (at most 4: the Bernoulli term is only known mod p).
CheckReport check_theorem(CheckId id, std::int64_t p, const VerifyParams& params = {}, int exponent = 4);
/// Any lemma-level row of the registry.
CheckReport check_lemma(CheckId id, std::int64_t p, const VerifyParams& params = {});

/// v_p(LHS - p) for THM1/THM2 (capped at the precision), and whether the
/// p^3 correction term vanishes mod p.
struct Sharpness {
  int lhs_minus_p_valuation;
  bool correction_vanishes;
};
Sharpness theorem_sharpness(CheckId id, std::int64_t p, const VerifyParams& params = {});

}  // namespace scv
