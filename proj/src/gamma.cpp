#include "scv/gamma.hpp"

#include <string>

#include "scv/errors.hpp"

namespace scv {

namespace {

void validate(const GammaRequest& req) {
  if (req.prime < 3 || !is_prime(req.prime))
    throw DomainError(std::to_string(req.prime) + " is not an odd prime");
  if (req.precision < 1) throw DomainError("precision must be positive");
  if (req.denominator % req.prime == 0)
    throw DenominatorNotUnit(req.denominator.get_str() + " is divisible by " + std::to_string(req.prime));
}

// prod_{0<k<m, p∤k} k mod `modulus`, for modulus < 2^63.
std::uint64_t unit_product_word(std::uint64_t m, std::uint64_t p, std::uint64_t modulus) {
  using u128 = unsigned __int128;
  std::uint64_t acc = 1 % modulus;
  std::uint64_t until_multiple = p;  // countdown to the next multiple of p
  for (std::uint64_t k = 1; k < m; ++k) {
    if (--until_multiple == 0) {
      until_multiple = p;
      continue;
    }
    acc = static_cast<std::uint64_t>(static_cast<u128>(acc) * k % modulus);
  }
  return acc;
}

Int unit_product_big(const Int& m, std::int64_t p, const Int& modulus) {
  Int acc = 1;
  for (Int k = 1; k < m; ++k) {
    if (k % p == 0) continue;
    acc = acc * k % modulus;
  }
  return acc;
}

}  // namespace

Int gamma_representative(const GammaRequest& req) {
  validate(req);
  const Int& modulus = prime_power(req.prime, req.precision);
  Int x = req.numerator * mod_inverse(req.denominator, modulus);
  mpz_mod(x.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
  return x == 0 ? modulus : x;
}

Int gamma_p(const GammaRequest& req) {
  const Int m = gamma_representative(req);
  if (m > req.budget)
    throw BudgetExceeded("Gamma_" + std::to_string(req.prime) + " needs a product of length " + m.get_str() +
                         " (budget " + std::to_string(req.budget) + ")");
  const Int modulus = prime_power(req.prime, req.precision);
  Int product;
  if (modulus < Int(1) << 62) {
    product = Int(static_cast<unsigned long>(unit_product_word(
        m.get_ui(), static_cast<std::uint64_t>(req.prime), modulus.get_ui())));
  } else {
    product = unit_product_big(m, req.prime, modulus);
  }
  if (mpz_odd_p(m.get_mpz_t())) product = (modulus - product) % modulus;
  return product;
}

Int gamma_p(const Int& a, const Int& b, std::int64_t p, int precision, std::int64_t budget) {
  return gamma_p(GammaRequest{a, b, p, precision, budget});
}

CheckReport gamma_reflection_check(const Int& a, const Int& b, std::int64_t p, int precision,
                                   std::int64_t budget) {
  if (b == 0) throw DivisionByZero("argument with zero denominator");
  if (a % b == 0) throw DomainError("reflection is checked at non-integer arguments only");
  return timed_check([&] {
    const Int gx = gamma_p(GammaRequest{a, b, p, precision, budget});
    const Int g1x = gamma_p(GammaRequest{b - a, b, p, precision, budget});
    const Int x0 = gamma_representative(GammaRequest{a, b, p, 1, budget});  // in 1..p
    const Int& modulus = prime_power(p, precision);
    const Int sign = mpz_odd_p(x0.get_mpz_t()) ? modulus - 1 : Int(1);
    const Congruence c{"x=" + a.get_str() + "/" + b.get_str(),
                       PadicNum::normalized(p, 0, gx * g1x, precision),
                       PadicNum::normalized(p, 0, sign, precision), precision};
    return compare(CheckId::GAMMA_REFLECTION, c, precision);
  });
}

}  // namespace scv
