#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace scv {

using Int = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
/// Thin value wrapper over GMP's mpq; zero is always 0/1.
class Rat {
 public:
  Rat() = default;
  Rat(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(const Int& n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(const Int& num, const Int& den);
  Rat(long num, long den) : Rat(Int(num), Int(den)) {}

  static Rat parse(const std::string& text);

  Int numerator() const { return q_.get_num(); }
  Int denominator() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const { Rat r; r.q_ = -q_; return r; }

  Rat inverse() const { return Rat(1) / *this; }
  Rat pow(unsigned e) const;

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "a/b", or "a" for integers.
  std::string to_string() const;

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

/// Exponent of p in a nonzero integer.
int valuation(const Int& n, std::int64_t p);

/// v_p(num) - v_p(den). Zero has no valuation; callers check is_zero first.
int valuation(const Rat& x, std::int64_t p);

/// C(n, k) as an exact integer; zero outside 0 <= k <= n.
Int binomial(long n, long k);

}  // namespace scv
