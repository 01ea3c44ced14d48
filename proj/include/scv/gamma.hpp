#pragma once

#include <cstdint>

#include "scv/check.hpp"
#include "scv/padic.hpp"

namespace scv {

inline constexpr std::int64_t kDefaultGammaBudget = 100'000'000;

/// Gamma_p(a/b) mod p^precision.
struct GammaRequest {
  Int numerator;
  Int denominator = 1;
  std::int64_t prime = 0;
  int precision = 1;
  std::int64_t budget = kDefaultGammaBudget;  // longest product we are willing to form
};

/// Smallest positive integer congruent to a/b modulo p^precision. This is the
/// point at which the defining product is evaluated; Gamma_p is 1-Lipschitz,
/// so any representative of the class gives the same residue.
Int gamma_representative(const GammaRequest& req);

/// Morita's Gamma_p at a rational argument, as (-1)^m prod_{0<k<m, p∤k} k
/// mod p^N with m = gamma_representative(req). Throws DenominatorNotUnit
/// when p | b and BudgetExceeded when m exceeds the budget.
Int gamma_p(const GammaRequest& req);
Int gamma_p(const Int& a, const Int& b, std::int64_t p, int precision, std::int64_t budget = kDefaultGammaBudget);

/// Gamma_p(x) Gamma_p(1-x) == (-1)^{x0} (mod p^N), x0 in {1..p} with x0 == x
/// (mod p). Integer arguments are outside the check's domain (DomainError).
CheckReport gamma_reflection_check(const Int& a, const Int& b, std::int64_t p, int precision,
                                   std::int64_t budget = kDefaultGammaBudget);

}  // namespace scv
