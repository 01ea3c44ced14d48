#include "scv/padic.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "scv/errors.hpp"

namespace scv {

Int mod_inverse(const Int& a, const Int& m) {
  if (m < 2) throw DomainError("modulus must be at least 2, got " + m.get_str());
  Int x;
  if (mpz_invert(x.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw NotInvertible(a.get_str() + " modulo " + m.get_str());
  return x;
}

int legendre_symbol(const Int& a, std::int64_t p) {
  const Int prime(static_cast<long>(p));
  Int r = a % prime;
  if (r < 0) r += prime;
  if (r == 0) return 0;
  Int e = (prime - 1) / 2;
  Int out;
  mpz_powm(out.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), prime.get_mpz_t());
  return out == 1 ? 1 : -1;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

const Int& prime_power(std::int64_t p, int e) {
  // Node-based containers: returned references stay valid as the cache grows.
  thread_local std::unordered_map<std::int64_t, std::deque<Int>> cache;
  if (e < 0) throw DomainError("negative exponent");
  auto& powers = cache[p];
  if (powers.empty()) powers.emplace_back(1);
  while (static_cast<int>(powers.size()) <= e)
    powers.push_back(powers.back() * static_cast<long>(p));
  return powers[static_cast<std::size_t>(e)];
}

namespace {

// Strips the factors of p from x (nonzero) and returns how many there were.
int remove_prime(Int& x, std::int64_t p) {
  const Int prime(static_cast<long>(p));
  return static_cast<int>(mpz_remove(x.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

void reduce(Int& x, const Int& modulus) {
  mpz_mod(x.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
}

}  // namespace

PadicNum PadicNum::zero(std::int64_t p, int absolute_precision) {
  return PadicNum(p, kInfinity, absolute_precision, Int(0));
}

PadicNum PadicNum::normalized(std::int64_t p, int v, Int x, int absolute_precision) {
  if (x == 0 || absolute_precision <= v) return zero(p, absolute_precision);
  reduce(x, prime_power(p, absolute_precision - v));
  if (x == 0) return zero(p, absolute_precision);
  v += remove_prime(x, p);
  // x was reduced before stripping, so it is already below p^(abs - v).
  return PadicNum(p, v, absolute_precision, std::move(x));
}

PadicNum PadicNum::operator-() const {
  if (is_zero()) return *this;
  Int u = prime_power(p_, relative_precision()) - unit_;
  return PadicNum(p_, val_, abs_, std::move(u));
}

PadicNum PadicNum::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of p-adic zero");
  const int rel = relative_precision();
  Int u = mod_inverse(unit_, prime_power(p_, rel));
  return PadicNum(p_, -val_, rel - val_, std::move(u));
}

PadicNum PadicNum::pow(unsigned e) const {
  if (e == 0) {
    // 1, known to this number's relative precision (absolute one for zero).
    const int prec = std::max(is_zero() ? abs_ : relative_precision(), 1);
    return PadicNum(p_, 0, prec, Int(1));
  }
  PadicNum result = *this;
  PadicNum base = *this;
  --e;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

PadicNum operator+(const PadicNum& x, const PadicNum& y) {
  if (x.p_ != y.p_)
    throw PrimeMismatch(std::to_string(x.p_) + " vs " + std::to_string(y.p_));
  const int abs = std::min(x.abs_, y.abs_);
  if (x.is_zero() && y.is_zero()) return PadicNum::zero(x.p_, abs);
  const int m = std::min(x.val_, y.val_);
  if (abs <= m) return PadicNum::zero(x.p_, abs);
  Int s = 0;
  if (!x.is_zero()) s += x.unit_ * prime_power(x.p_, x.val_ - m);
  if (!y.is_zero()) s += y.unit_ * prime_power(y.p_, y.val_ - m);
  return PadicNum::normalized(x.p_, m, std::move(s), abs);
}

PadicNum operator*(const PadicNum& x, const PadicNum& y) {
  if (x.p_ != y.p_)
    throw PrimeMismatch(std::to_string(x.p_) + " vs " + std::to_string(y.p_));
  if (x.is_zero() && y.is_zero()) return PadicNum::zero(x.p_, x.abs_ + y.abs_);
  if (x.is_zero()) return PadicNum::zero(x.p_, x.abs_ + y.val_);
  if (y.is_zero()) return PadicNum::zero(x.p_, y.abs_ + x.val_);
  const int rel = std::min(x.relative_precision(), y.relative_precision());
  const int v = x.val_ + y.val_;
  Int u = x.unit_ * y.unit_;
  reduce(u, prime_power(x.p_, rel));
  return PadicNum(x.p_, v, v + rel, std::move(u));
}

bool operator==(const PadicNum& x, const PadicNum& y) {
  if (x.p_ != y.p_) return false;
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  if (x.val_ != y.val_) return false;
  const Int& mod = prime_power(x.p_, std::min(x.relative_precision(), y.relative_precision()));
  Int d = x.unit_ - y.unit_;
  reduce(d, mod);
  return d == 0;
}

Int PadicNum::residue(int e) const {
  if (e < 0) throw DomainError("negative residue exponent");
  if (abs_ < e)
    throw PrecisionExhausted("value known mod p^" + std::to_string(abs_) +
                             ", residue requested mod p^" + std::to_string(e));
  if (is_zero() || val_ >= e) return 0;
  if (val_ < 0) throw DomainError("residue of a non-integral p-adic number " + to_string());
  Int r = unit_ * prime_power(p_, val_);
  reduce(r, prime_power(p_, e));
  return r;
}

std::string PadicNum::to_string() const {
  const std::string p = std::to_string(p_);
  if (is_zero()) return "O(" + p + "^" + std::to_string(abs_) + ")";
  std::string s = unit_.get_str();
  if (val_ != 0) s += "*" + p + "^" + std::to_string(val_);
  return s + " + O(" + p + "^" + std::to_string(abs_) + ")";
}

PadicNum padic_of_rational(const Int& num, const Int& den, std::int64_t p, int precision) {
  return Ring(p, precision).from_rational(Rat(num, den));
}

Ring::Ring(std::int64_t p, int precision) : p_(p), k_(precision) {
  if (p == 2 || p == 3)
    throw InapplicablePrime("p = " + std::to_string(p) + " is excluded (1/3 and 1/2 must be units)");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not an odd prime");
  if (precision < 1) throw DomainError("precision must be positive");
}

PadicNum Ring::from_integer(const Int& n) const {
  return PadicNum::normalized(p_, 0, n, k_ + (n == 0 ? 0 : valuation(n, p_)));
}

PadicNum Ring::from_rational(const Rat& x) const {
  if (x.is_zero()) return zero();
  Int num = x.numerator();
  Int den = x.denominator();
  const int v = remove_prime(num, p_) - remove_prime(den, p_);
  const Int& mod = prime_power(p_, k_);
  Int u = num * mod_inverse(den, mod);
  return PadicNum::normalized(p_, v, std::move(u), v + k_);
}

PadicNum Ring::reciprocal(const Int& d) const {
  if (d == 0) throw DivisionByZero("reciprocal of zero");
  Int r = d % p_;
  if (r == 0)
    throw DenominatorNotUnit(d.get_str() + " is divisible by " + std::to_string(p_));
  return from_rational(Rat(Int(1), d));
}

PadicNum Ring::prime_power_element(int e) const { return PadicNum::normalized(p_, e, Int(1), e + k_); }

}  // namespace scv
