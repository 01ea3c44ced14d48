#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scv/check.hpp"
#include "scv/errors.hpp"
#include "scv/padic.hpp"

namespace scv {

/// (c0 + c1 * N) / den, N being the sum's free parameter (the prime p or an
/// integer n).
struct AffineRational {
  long c0 = 0;
  long c1 = 0;
  long den = 1;

  Rat at(long n) const { return Rat(Int(c0) + Int(c1) * n, Int(den)); }
};

enum class PochhammerIndex { K, TwoK };

/// (base)_k or (base)_{2k}, raised to `power`, in the numerator or denominator.
struct PochhammerFactor {
  AffineRational base;
  PochhammerIndex index = PochhammerIndex::K;
  int power = 1;
  bool denominator = false;
};

/// Per-k multiplier sum_{j=1}^{k} (1/(3j)^2 - 1/(3j-2)^2)   (A)
///                 or sum_{j=1}^{k} (1/(3j)^2 - 1/(3j-4)^2)   (B).
enum class InnerWeight { None, A, B };

enum class Parameter { Prime, FreeN };

enum class SpecId {
  THM1_LHS,
  THM2_LHS,
  VANHAMME_D2_LHS,
  B7_WEIGHTED,
  B8_WEIGHTED,
  B9_LHS,
  B10_LHS,
  C3_INNER_WEIGHTED,
  D1_INNER_WEIGHTED,
};

/// Declarative form of a truncated sum
///   sum_{k=0}^{upper} (slope*k + offset) * prod factors * inner(k).
struct SumSpec {
  SpecId id;
  std::string name;
  long weight_slope = 6;
  long weight_offset = 1;
  std::vector<PochhammerFactor> factors;
  InnerWeight inner = InnerWeight::None;
  Parameter parameter = Parameter::Prime;
  AffineRational upper;
  PrimeClass admissible;  // only consulted for Parameter::Prime
};

const SumSpec& sum_spec(SpecId id);
const std::vector<SumSpec>& registered_specs();
std::optional<SpecId> parse_spec_id(std::string_view name);

/// Rising factorial (base)_k = base (base+1) ... (base+k-1), (base)_0 = 1.
template <class Field>
typename Field::value_type pochhammer(const Rat& base, long k, const Field& field) {
  auto r = field.one();
  for (long i = 0; i < k; ++i) r *= field.from_rational(base + Rat(i));
  return r;
}

PadicNum pochhammer_padic(const Rat& base, long k, const Ring& ring);

namespace detail {

template <class Field>
typename Field::value_type inner_weight_step(long j, InnerWeight variant, const Field& field) {
  const long shift = variant == InnerWeight::A ? 2 : 4;
  auto a = field.reciprocal(Int(3 * j));
  auto b = field.reciprocal(Int(3 * j - shift));
  return a * a - b * b;
}

// Rejects (p-adic) factor values that are not units; exact zero in the exact field.
PadicNum checked_denominator(const PadicNum& v, long k, const std::string& what);
Rat checked_denominator(const Rat& v, long k, const std::string& what);

long upper_bound(const SumSpec& spec, long param);
void check_parameter(const SumSpec& spec, long param);
void check_parameter(const SumSpec& spec, long param, const Ring& ring);
inline void check_parameter(const SumSpec& spec, long param, const ExactField&) { check_parameter(spec, param); }

}  // namespace detail

template <class Field>
typename Field::value_type inner_weight_sum(long k, InnerWeight variant, const Field& field) {
  auto sum = field.zero();
  if (variant == InnerWeight::None) return sum;
  for (long j = 1; j <= k; ++j) sum += detail::inner_weight_step(j, variant, field);
  return sum;
}

Rat inner_weight_sum(long k, InnerWeight variant);

/// Evaluates the spec at parameter `param` (the prime for prime-indexed sums,
/// n otherwise). Terms are built by multiplying running Pochhammer products
/// by their k-th factors, so the cost is linear in the upper bound.
/// `upper_override` truncates (or extends) the summation range.
template <class Field>
typename Field::value_type truncated_sum(const SumSpec& spec, long param, const Field& field,
                                         std::optional<long> upper_override = std::nullopt) {
  detail::check_parameter(spec, param, field);
  const long upper = upper_override.value_or(detail::upper_bound(spec, param));

  std::vector<Rat> bases;
  bases.reserve(spec.factors.size());
  for (const auto& f : spec.factors) bases.push_back(f.base.at(param));

  auto core = field.one();
  auto inner = field.zero();
  auto sum = field.zero();
  for (long k = 0; k <= upper; ++k) {
    if (k > 0) {
      auto num = field.one();
      auto den = field.one();
      for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        const auto& f = spec.factors[i];
        const long first = f.index == PochhammerIndex::K ? k - 1 : 2 * k - 2;
        const long last = f.index == PochhammerIndex::K ? k - 1 : 2 * k - 1;
        for (long s = first; s <= last; ++s) {
          auto v = field.from_rational(bases[i] + Rat(s)).pow(static_cast<unsigned>(f.power));
          if (f.denominator) {
            den *= detail::checked_denominator(v, k, "(" + bases[i].to_string() + ")+" + std::to_string(s));
          } else {
            num *= v;
          }
        }
      }
      core = core * num / den;
      if (spec.inner != InnerWeight::None) inner += detail::inner_weight_step(k, spec.inner, field);
    }
    auto term = field.from_integer(Int(spec.weight_slope) * k + spec.weight_offset) * core;
    if (spec.inner != InnerWeight::None) term *= inner;
    sum += term;
  }
  return sum;
}

PadicNum truncated_sum(const SumSpec& spec, long param, const Ring& ring,
                       std::optional<long> upper_override = std::nullopt);
Rat truncated_sum_exact(const SumSpec& spec, long param, std::optional<long> upper_override = std::nullopt);

}  // namespace scv
