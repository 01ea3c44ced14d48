#include "scv/primes.hpp"

#include <algorithm>

namespace scv {

std::vector<std::int64_t> primes_in(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  if (hi < 2 || hi < lo) return out;
  std::vector<bool> composite(static_cast<std::size_t>(hi) + 1, false);
  for (std::int64_t i = 2; i * i <= hi; ++i)
    if (!composite[static_cast<std::size_t>(i)])
      for (std::int64_t j = i * i; j <= hi; j += i) composite[static_cast<std::size_t>(j)] = true;
  for (std::int64_t i = std::max<std::int64_t>(lo, 2); i <= hi; ++i)
    if (!composite[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

}  // namespace scv
