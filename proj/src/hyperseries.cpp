#include "scv/hyperseries.hpp"

namespace scv {

namespace {

using Idx = PochhammerIndex;

PochhammerFactor num(AffineRational base, Idx index, int power = 1) { return {base, index, power, false}; }
PochhammerFactor den(AffineRational base, Idx index, int power = 1) { return {base, index, power, true}; }

constexpr AffineRational constant(long c, long d = 1) { return {c, 0, d}; }

// Summand of the n-parameter identities with weight 6k+1 and 6k-1.
std::vector<PochhammerFactor> plus_family_factors() {
  return {num(constant(1, 3), Idx::K, 2),  num(constant(1), Idx::TwoK), num({0, -1, 1}, Idx::K),
          num({2, 3, 3}, Idx::K),          den(constant(1), Idx::K, 2), den(constant(2, 3), Idx::TwoK),
          den({4, 3, 3}, Idx::K),          den({2, -3, 3}, Idx::K)};
}

std::vector<PochhammerFactor> minus_family_factors() {
  return {num(constant(-1, 3), Idx::K, 2), num(constant(1), Idx::TwoK), num({0, -1, 1}, Idx::K),
          num({-2, 3, 3}, Idx::K),         den(constant(1), Idx::K, 2), den(constant(-2, 3), Idx::TwoK),
          den({4, -3, 3}, Idx::K),         den({2, 3, 3}, Idx::K)};
}

std::vector<PochhammerFactor> thm1_factors() {
  return {num(constant(1, 3), Idx::K, 4), num(constant(1), Idx::TwoK), den(constant(1), Idx::K, 4),
          den(constant(2, 3), Idx::TwoK)};
}

std::vector<PochhammerFactor> thm2_factors() {
  return {num(constant(-1, 3), Idx::K, 4), num(constant(1), Idx::TwoK), den(constant(1), Idx::K, 4),
          den(constant(-2, 3), Idx::TwoK)};
}

const PrimeClass kOneModThree{3, 1, 7};
const PrimeClass kTwoModThree{3, 2, 5};
const PrimeClass kAnyPrime{1, 0, 5};

constexpr AffineRational kThirdBelow{-1, 1, 3};  // (p-1)/3
constexpr AffineRational kThirdAbove{1, 1, 3};   // (p+1)/3
constexpr AffineRational kPrimeMinusOne{-1, 1, 1};
constexpr AffineRational kN{0, 1, 1};

std::vector<SumSpec> build_specs() {
  using S = SpecId;
  const auto prime = Parameter::Prime;
  const auto free_n = Parameter::FreeN;
  return {
      {S::THM1_LHS, "THM1_LHS", 6, 1, thm1_factors(), InnerWeight::None, prime, kThirdBelow, kOneModThree},
      {S::THM2_LHS, "THM2_LHS", 6, -1, thm2_factors(), InnerWeight::None, prime, kThirdAbove, kTwoModThree},
      {S::VANHAMME_D2_LHS, "VANHAMME_D2_LHS", 6, 1,
       {num(constant(1, 3), Idx::K, 6), den(constant(1), Idx::K, 6)}, InnerWeight::None, prime, kPrimeMinusOne,
       kAnyPrime},
      {S::B7_WEIGHTED, "B7_WEIGHTED", 6, 1, plus_family_factors(), InnerWeight::None, free_n, kN, {}},
      {S::B8_WEIGHTED, "B8_WEIGHTED", 6, -1, minus_family_factors(), InnerWeight::None, free_n, kN, {}},
      {S::B9_LHS, "B9_LHS", 6, 1, plus_family_factors(), InnerWeight::A, free_n, kN, {}},
      {S::B10_LHS, "B10_LHS", 6, -1, minus_family_factors(), InnerWeight::B, free_n, kN, {}},
      {S::C3_INNER_WEIGHTED, "C3_INNER_WEIGHTED", 6, 1, thm1_factors(), InnerWeight::A, prime, kThirdBelow,
       kOneModThree},
      {S::D1_INNER_WEIGHTED, "D1_INNER_WEIGHTED", 6, -1, thm2_factors(), InnerWeight::B, prime, kThirdAbove,
       kTwoModThree},
  };
}

}  // namespace

const std::vector<SumSpec>& registered_specs() {
  static const std::vector<SumSpec> specs = build_specs();
  return specs;
}

const SumSpec& sum_spec(SpecId id) {
  for (const auto& s : registered_specs())
    if (s.id == id) return s;
  throw DomainError("unregistered sum spec");
}

std::optional<SpecId> parse_spec_id(std::string_view name) {
  for (const auto& s : registered_specs())
    if (s.name == name) return s.id;
  return std::nullopt;
}

PadicNum pochhammer_padic(const Rat& base, long k, const Ring& ring) {
  if (k < 0) throw DomainError("negative Pochhammer length");
  return pochhammer(base, k, ring);
}

Rat inner_weight_sum(long k, InnerWeight variant) { return inner_weight_sum(k, variant, ExactField{}); }

namespace detail {

PadicNum checked_denominator(const PadicNum& v, long k, const std::string& what) {
  if (v.is_zero() || v.valuation() != 0)
    throw DenominatorNotUnit("factor " + what + " at k=" + std::to_string(k) + " is not a " +
                             std::to_string(v.prime()) + "-adic unit");
  return v;
}

Rat checked_denominator(const Rat& v, long k, const std::string& what) {
  if (v.is_zero()) throw DivisionByZero("factor " + what + " vanishes at k=" + std::to_string(k));
  return v;
}

long upper_bound(const SumSpec& spec, long param) {
  const Rat u = spec.upper.at(param);
  if (!u.is_integer()) throw DomainError(spec.name + ": upper bound is not an integer at " + std::to_string(param));
  return u.numerator().get_si();
}

void check_parameter(const SumSpec& spec, long param) {
  if (spec.parameter == Parameter::FreeN) {
    if (param < 1) throw DomainError(spec.name + " needs n >= 1, got " + std::to_string(param));
    return;
  }
  if (param == 2 || param == 3) throw InapplicablePrime(spec.name + " at p = " + std::to_string(param));
  if (!is_prime(param)) throw DomainError(std::to_string(param) + " is not prime");
  if (!spec.admissible.admits(param))
    throw WrongResidueClass(spec.name + " requires " + spec.admissible.to_string() + ", got p = " +
                            std::to_string(param));
}

void check_parameter(const SumSpec& spec, long param, const Ring& ring) {
  check_parameter(spec, param);
  if (spec.parameter == Parameter::Prime && param != ring.prime())
    throw PrimeMismatch(spec.name + " evaluated at p = " + std::to_string(param) + " in a " +
                        std::to_string(ring.prime()) + "-adic ring");
}

}  // namespace detail

PadicNum truncated_sum(const SumSpec& spec, long param, const Ring& ring, std::optional<long> upper_override) {
  return truncated_sum<Ring>(spec, param, ring, upper_override);
}

Rat truncated_sum_exact(const SumSpec& spec, long param, std::optional<long> upper_override) {
  return truncated_sum<ExactField>(spec, param, ExactField{}, upper_override);
}

}  // namespace scv
