#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "scv/rational.hpp"

namespace scv {

/// Inverse of a modulo m, in [1, m). Throws NotInvertible when gcd(a, m) > 1.
Int mod_inverse(const Int& a, const Int& m);

/// Euler's criterion mapped to {-1, 0, 1}.
int legendre_symbol(const Int& a, std::int64_t p);

bool is_prime(std::int64_t n);

/// p^e for small e; cached per thread.
const Int& prime_power(std::int64_t p, int e);

/// A p-adic number u * p^v whose value is known modulo p^A, A being the
/// absolute precision. The unit u is stored reduced modulo p^(A - v), so
/// the number of known unit digits (the relative precision) shrinks when
/// an addition cancels leading digits. Zero is represented as v = +inf and
/// still carries the absolute precision at which it is known.
class PadicNum {
 public:
  static constexpr int kInfinity = std::numeric_limits<int>::max();

  static PadicNum zero(std::int64_t p, int absolute_precision);

  /// x * p^v known modulo p^absolute_precision; x need not be a unit.
  static PadicNum normalized(std::int64_t p, int v, Int x, int absolute_precision);

  std::int64_t prime() const { return p_; }
  bool is_zero() const { return val_ == kInfinity; }
  int valuation() const { return val_; }
  int absolute_precision() const { return abs_; }
  int relative_precision() const { return is_zero() ? 0 : abs_ - val_; }
  const Int& unit() const { return unit_; }

  PadicNum operator-() const;
  PadicNum inverse() const;
  PadicNum pow(unsigned e) const;

  friend PadicNum operator+(const PadicNum& x, const PadicNum& y);
  friend PadicNum operator-(const PadicNum& x, const PadicNum& y) { return x + (-y); }
  friend PadicNum operator*(const PadicNum& x, const PadicNum& y);
  friend PadicNum operator/(const PadicNum& x, const PadicNum& y) { return x * y.inverse(); }

  PadicNum& operator+=(const PadicNum& y) { return *this = *this + y; }
  PadicNum& operator-=(const PadicNum& y) { return *this = *this - y; }
  PadicNum& operator*=(const PadicNum& y) { return *this = *this * y; }

  /// Same prime, and either both zero or equal valuations with units
  /// congruent to the smaller relative precision.
  friend bool operator==(const PadicNum& x, const PadicNum& y);

  /// Canonical residue in [0, p^e). Requires a p-integral value known to at
  /// least p^e; throws DomainError / PrecisionExhausted otherwise.
  Int residue(int e) const;

  /// Valuation, or the absolute precision when the value is zero at the
  /// working precision (a lower bound for the true valuation).
  int valuation_lower_bound() const { return is_zero() ? abs_ : val_; }

  std::string to_string() const;

 private:
  PadicNum(std::int64_t p, int val, int abs, Int unit)
      : p_(p), val_(val), abs_(abs), unit_(std::move(unit)) {}

  std::int64_t p_ = 0;
  int val_ = kInfinity;
  int abs_ = 0;
  Int unit_;
};

PadicNum padic_of_rational(const Int& num, const Int& den, std::int64_t p, int precision);

inline PadicNum padic_add(const PadicNum& x, const PadicNum& y) { return x + y; }
inline PadicNum padic_mul(const PadicNum& x, const PadicNum& y) { return x * y; }
inline PadicNum padic_inv(const PadicNum& x) { return x.inverse(); }

/// Truncated ring Z_p / p^K: the embedding used by every p-adic evaluation.
/// Only primes p >= 5 are accepted; 1/3 and 1/2 appear throughout.
class Ring {
 public:
  using value_type = PadicNum;

  Ring(std::int64_t p, int precision);

  std::int64_t prime() const { return p_; }
  int precision() const { return k_; }

  PadicNum zero() const { return PadicNum::zero(p_, k_); }
  PadicNum one() const { return from_integer(1); }
  PadicNum from_integer(const Int& n) const;
  PadicNum from_rational(const Rat& x) const;
  /// 1/d; d must be a p-adic unit (DenominatorNotUnit otherwise).
  PadicNum reciprocal(const Int& d) const;
  /// p^e as an element.
  PadicNum prime_power_element(int e) const;

 private:
  std::int64_t p_;
  int k_;
};

/// The exact counterpart of Ring: same interface over Rat.
struct ExactField {
  using value_type = Rat;

  Rat zero() const { return Rat(0); }
  Rat one() const { return Rat(1); }
  Rat from_integer(const Int& n) const { return Rat(n); }
  Rat from_rational(const Rat& x) const { return x; }
  Rat reciprocal(const Int& d) const { return Rat(Int(1), d); }
};

}  // namespace scv
