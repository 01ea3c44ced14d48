#pragma once

// Naive exact-rational reference values for the tests. Nothing here calls
// into the library: every quantity is rebuilt from its definition with plain
// GMP rationals, term by term, without the running products or tables the
// library uses.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;

inline Q frac(long a, long b) {
  Q q(a, b);
  q.canonicalize();
  return q;
}

inline Z ipow(const Z& b, unsigned e) {
  Z r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline Q qpow(const Q& b, unsigned e) {
  Q r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

inline Q poch(const Q& x, long k) {
  Q r = 1;
  for (long i = 0; i < k; ++i) r *= x + i;
  return r;
}

inline Z choose(long n, long k) {
  if (k < 0 || k > n) return 0;
  Z r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline int val(Z n, long p) {
  if (n == 0) return 1 << 30;
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline int val(const Q& x, long p) {
  if (x == 0) return 1 << 30;
  return val(x.get_num(), p) - val(x.get_den(), p);
}

// x mod p^e for x with a denominator prime to p.
inline Z residue(const Q& x, long p, unsigned e) {
  const Z m = ipow(Z(p), e);
  Z inv;
  const Z den = x.get_den();
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  Z r = x.get_num() * inv % m;
  if (r < 0) r += m;
  return r;
}

// sum_{k=1}^{n} 1/d(k)^r, d(k) = slope*k - offset.
inline Q harmonic(long n, unsigned r, long slope = 1, long offset = 0) {
  Q s = 0;
  for (long k = 1; k <= n; ++k) s += Q(1) / qpow(Q(slope * k - offset), r);
  return s;
}

inline Q H(long n, unsigned r = 1) { return harmonic(n, r); }
inline Q S(long n, unsigned r = 1) { return harmonic(n, r, 3, 1); }
inline Q T(long n, unsigned r = 1) { return harmonic(n, r, 3, 2); }

// sum_{j=1}^{k} (1/(3j)^2 - 1/(3j - shift)^2)
inline Q inner_weight(long k, long shift) {
  Q s = 0;
  for (long j = 1; j <= k; ++j) s += Q(1) / qpow(Q(3 * j), 2) - Q(1) / qpow(Q(3 * j - shift), 2);
  return s;
}

// The theorem sum for p's residue class mod 3, optionally carrying the inner weight.
inline Q theorem_sum(long p, bool weighted = false) {
  const bool first = p % 3 == 1;
  const Q a = first ? frac(1, 3) : frac(-1, 3);
  const Q b = first ? frac(2, 3) : frac(-2, 3);
  const long upper = first ? (p - 1) / 3 : (p + 1) / 3;
  Q s = 0;
  for (long k = 0; k <= upper; ++k) {
    Q term = Q(6 * k + (first ? 1 : -1)) * qpow(poch(a, k), 4) * poch(Q(1), 2 * k) /
             (qpow(poch(Q(1), k), 4) * poch(b, 2 * k));
    if (weighted) term *= inner_weight(k, first ? 2 : 4);
    s += term;
  }
  return s;
}

// sum_{k=0}^{upper} (6k+1) (1/3)_k^6 / k!^6
inline Q sixth_power_sum(long upper) {
  Q s = 0;
  for (long k = 0; k <= upper; ++k) s += Q(6 * k + 1) * qpow(poch(frac(1, 3), k) / poch(Q(1), k), 6);
  return s;
}

// Weighted terminating sums with the free parameter n; plus == true is the
// (6k+1) family, otherwise the (6k-1) family.
inline Q terminating_sum(long n, bool plus, bool weighted) {
  Q s = 0;
  for (long k = 0; k <= n; ++k) {
    Q term;
    if (plus) {
      term = Q(6 * k + 1) * qpow(poch(frac(1, 3), k), 2) * poch(Q(1), 2 * k) * poch(Q(-n), k) *
             poch(Q(n) + frac(2, 3), k) /
             (qpow(poch(Q(1), k), 2) * poch(frac(2, 3), 2 * k) * poch(Q(n) + frac(4, 3), k) *
              poch(Q(-n) + frac(2, 3), k));
    } else {
      term = Q(6 * k - 1) * qpow(poch(frac(-1, 3), k), 2) * poch(Q(1), 2 * k) * poch(Q(-n), k) *
             poch(Q(n) - frac(2, 3), k) /
             (qpow(poch(Q(1), k), 2) * poch(frac(-2, 3), 2 * k) * poch(Q(-n) + frac(4, 3), k) *
              poch(Q(n) + frac(2, 3), k));
    }
    if (weighted) term *= inner_weight(k, plus ? 2 : 4);
    s += term;
  }
  return s;
}

// sum_{k=1}^{count} (-1)^k / k * C(top, base + k)
inline Q alternating_binomial(long top, long base, long count) {
  Q s = 0;
  for (long k = 1; k <= count; ++k) s += Q(k % 2 == 0 ? 1 : -1, k) * choose(top, base + k);
  return s;
}

// Exact Bernoulli numbers B_0..B_m (B_1 = -1/2).
inline std::vector<Q> bernoulli_numbers(long m) {
  std::vector<Q> b(static_cast<std::size_t>(m + 1));
  b[0] = 1;
  for (long n = 1; n <= m; ++n) {
    Q acc = 0;
    for (long j = 0; j < n; ++j) acc += Q(choose(n + 1, j)) * b[static_cast<std::size_t>(j)];
    b[static_cast<std::size_t>(n)] = -acc / (n + 1);
  }
  return b;
}

inline Q bernoulli_poly(long m, const Q& x) {
  const auto b = bernoulli_numbers(m);
  Q s = 0;
  for (long k = 0; k <= m; ++k) s += Q(choose(m, k)) * b[static_cast<std::size_t>(k)] * qpow(x, static_cast<unsigned>(m - k));
  return s;
}

// (-1)^m prod_{0<k<m, p does not divide k} k, mod p^e.
inline Z gamma_at_integer(long m, long p, unsigned e) {
  const Z mod = ipow(Z(p), e);
  Z r = 1;
  for (long k = 1; k < m; ++k)
    if (k % p != 0) r = r * k % mod;
  if (m % 2 != 0) r = (mod - r) % mod;
  return r;
}

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<long> primes(long lo, long hi, long modulus = 1, long res = 0) {
  std::vector<long> out;
  for (long n = lo; n <= hi; ++n)
    if (is_prime(n) && n % modulus == res) out.push_back(n);
  return out;
}

}  // namespace oracle
