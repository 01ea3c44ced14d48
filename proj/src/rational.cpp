#include "scv/rational.hpp"

#include "scv/errors.hpp"

namespace scv {

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rat Rat::pow(unsigned e) const {
  Rat r;
  mpz_pow_ui(r.q_.get_num_mpz_t(), q_.get_num_mpz_t(), e);
  mpz_pow_ui(r.q_.get_den_mpz_t(), q_.get_den_mpz_t(), e);
  return r;
}

Rat Rat::parse(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw DomainError("not a rational number: '" + text + "'");
  q.canonicalize();
  Rat r;
  r.q_ = q;
  return r;
}

std::string Rat::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

int valuation(const Int& n, std::int64_t p) {
  if (n == 0) throw DomainError("valuation of zero");
  Int m = n;
  const Int prime(static_cast<long>(p));
  return static_cast<int>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), prime.get_mpz_t()));
}

int valuation(const Rat& x, std::int64_t p) {
  return valuation(x.numerator(), p) - valuation(x.denominator(), p);
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace scv
