#pragma once

#include <cstdint>
#include <vector>

namespace scv {

/// Word-size arithmetic modulo a prime below 2^32.
namespace modp {

inline std::uint64_t reduce(std::int64_t a, std::uint64_t p) {
  const auto m = static_cast<std::int64_t>(p);
  const std::int64_t r = a % m;
  return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);

/// inverse[i] = 1/i mod p for 1 <= i < n (entry 0 unused).
std::vector<std::uint64_t> inverse_table(std::uint64_t n, std::uint64_t p);

}  // namespace modp

/// B_0..B_{p-2} reduced mod p. Every index in that range has a p-integral
/// Bernoulli number (von Staudt-Clausen), so the table is well defined.
class BernoulliTable {
 public:
  explicit BernoulliTable(std::uint64_t p);

  std::uint64_t prime() const { return p_; }
  std::uint64_t operator[](std::size_t m) const { return residues_.at(m); }
  const std::vector<std::uint64_t>& residues() const { return residues_; }

 private:
  std::uint64_t p_;
  std::vector<std::uint64_t> residues_;
};

/// O(p^2) recurrence sum_{j<=m} C(m+1, j) B_j = 0. Throws InapplicablePrime for p < 5.
BernoulliTable bernoulli_numbers_mod_p(std::uint64_t p);

/// B_m(a/b) mod p from B_m(x) = sum_k C(m,k) B_k x^(m-k). Throws
/// DenominatorNotUnit when p | b, DomainError when m > p - 2.
std::uint64_t bernoulli_poly_at(const BernoulliTable& table, std::uint64_t m, std::int64_t a, std::int64_t b);

/// B_{p-2}(1/3) mod p in O(p), from Lehmer's evaluation of
/// H_{floor(p/3)}^(2) mod p: B_{p-2}(1/3) == 2 (-3/p) H_{floor(p/3)}^(2).
std::uint64_t b13_via_lehmer(std::uint64_t p);

/// B_{p-2}(1/3) mod p through the full table. Refuses p above `cap` with
/// BudgetExceeded, since the table costs O(p^2).
std::uint64_t b13_via_recurrence(std::uint64_t p, std::uint64_t cap = 2000);

}  // namespace scv
