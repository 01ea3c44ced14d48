#include "scv/bernoulli.hpp"

#include <string>

#include "scv/errors.hpp"
#include "scv/padic.hpp"

namespace scv {

namespace modp {

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1U) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1U;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw NotInvertible(std::to_string(a) + " modulo " + std::to_string(p));
  return pow(a, p - 2, p);
}

std::vector<std::uint64_t> inverse_table(std::uint64_t n, std::uint64_t p) {
  std::vector<std::uint64_t> inv(n, 0);
  if (n > 1) inv[1] = 1;
  for (std::uint64_t i = 2; i < n; ++i) inv[i] = (p - (p / i) * inv[p % i] % p) % p;
  return inv;
}

}  // namespace modp

namespace {

void require_bernoulli_prime(std::uint64_t p) {
  if (p < 5) throw InapplicablePrime("p = " + std::to_string(p) + " (need p >= 5)");
  if (p >= (1ULL << 32) || !is_prime(static_cast<std::int64_t>(p)))
    throw DomainError(std::to_string(p) + " is not a supported prime");
}

}  // namespace

BernoulliTable::BernoulliTable(std::uint64_t p) : p_(p) {
  require_bernoulli_prime(p);
  const std::uint64_t n = p - 1;  // indices 0..p-2
  const auto inv = modp::inverse_table(p, p);
  residues_.assign(n, 0);
  residues_[0] = 1;
  // binom walks C(m+1, j) row-incrementally; j + 1 <= m < p keeps every divisor a unit.
  for (std::uint64_t m = 1; m < n; ++m) {
    const std::uint64_t top = m + 1;
    std::uint64_t binom = 1;
    std::uint64_t acc = 0;
    for (std::uint64_t j = 0; j < m; ++j) {
      acc = (acc + modp::mul(binom, residues_[j], p)) % p;
      binom = modp::mul(modp::mul(binom, top - j, p), inv[j + 1], p);
    }
    residues_[m] = modp::mul(p - acc % p, inv[top], p) % p;
  }
}

BernoulliTable bernoulli_numbers_mod_p(std::uint64_t p) { return BernoulliTable(p); }

std::uint64_t bernoulli_poly_at(const BernoulliTable& table, std::uint64_t m, std::int64_t a, std::int64_t b) {
  const std::uint64_t p = table.prime();
  if (m + 2 > p) throw DomainError("B_m mod p needs m <= p-2, got m = " + std::to_string(m));
  const std::uint64_t bb = modp::reduce(b, p);
  if (bb == 0) throw DenominatorNotUnit(std::to_string(b) + " is divisible by " + std::to_string(p));
  const std::uint64_t x = modp::mul(modp::reduce(a, p), modp::inv(bb, p), p);
  const auto inv = modp::inverse_table(m + 1, p);
  std::vector<std::uint64_t> xpow(m + 1, 1);
  for (std::uint64_t i = 1; i <= m; ++i) xpow[i] = modp::mul(xpow[i - 1], x, p);
  std::uint64_t binom = 1;
  std::uint64_t acc = 0;
  for (std::uint64_t k = 0; k <= m; ++k) {
    acc = (acc + modp::mul(modp::mul(binom, table[k], p), xpow[m - k], p)) % p;
    if (k < m) binom = modp::mul(modp::mul(binom, m - k, p), inv[k + 1], p);
  }
  return acc;
}

std::uint64_t b13_via_lehmer(std::uint64_t p) {
  require_bernoulli_prime(p);
  const auto inv = modp::inverse_table(p / 3 + 1, p);
  std::uint64_t h2 = 0;
  for (std::uint64_t k = 1; k <= p / 3; ++k) h2 = (h2 + modp::mul(inv[k], inv[k], p)) % p;
  const int chi = legendre_symbol(Int(-3), static_cast<std::int64_t>(p));
  const std::uint64_t twice = modp::mul(2, h2, p);
  return chi == 1 ? twice : (p - twice) % p;
}

std::uint64_t b13_via_recurrence(std::uint64_t p, std::uint64_t cap) {
  require_bernoulli_prime(p);
  if (p > cap)
    throw BudgetExceeded("recurrence route capped at p <= " + std::to_string(cap) + ", got " +
                         std::to_string(p));
  return bernoulli_poly_at(BernoulliTable(p), p - 2, 1, 3);
}

}  // namespace scv
