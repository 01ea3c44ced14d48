#pragma once

#include <cstdint>
#include <vector>

namespace scv {

/// Primes in [lo, hi] by a sieve of Eratosthenes. Empty when hi < lo.
std::vector<std::int64_t> primes_in(std::int64_t lo, std::int64_t hi);

}  // namespace scv
