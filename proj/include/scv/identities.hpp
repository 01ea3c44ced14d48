#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "scv/check.hpp"
#include "scv/rational.hpp"

namespace scv {

/// Finite-n identities, valid for every positive integer n:
///   B7/B8   weighted hypergeometric sums equal to 3n+1 / 3n-1,
///   B9/B10  the same sums with inner-weight multipliers, against
///           harmonic-sum closed forms,
///   C10/C11 alternating binomial-harmonic sums over C(3n, .),
///   D1/D2   the same over C(3n-2, .).
enum class IdentityId { B7, B8, B9, B10, C10, C11, D1, D2 };

enum class Side { Lhs, Rhs };

std::string_view to_string(IdentityId id);
std::optional<IdentityId> parse_identity_id(std::string_view name);
const std::vector<IdentityId>& all_identity_ids();
CheckId check_id(IdentityId id);

/// Exact value of one side at n >= 1 (DomainError otherwise).
Rat identity_eval(IdentityId id, long n, Side side);

/// Exact equality for every n in [n_first, n_last]. The report carries the
/// first counterexample, or the values at n_last when all agree; prime and
/// exponent are 0 and diff_valuation is `cap` for exact equality.
CheckReport identity_verify(IdentityId id, long n_first, long n_last, int cap = 8);

}  // namespace scv
