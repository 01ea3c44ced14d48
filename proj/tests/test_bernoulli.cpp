#include <doctest.h>

#include <vector>

#include "oracle.hpp"
#include "scv/bernoulli.hpp"
#include "scv/errors.hpp"

using namespace scv;

TEST_CASE("bernoulli_numbers_mod_p") {
  const BernoulliTable t7 = bernoulli_numbers_mod_p(7);
  CHECK(t7.residues() == std::vector<std::uint64_t>{1, 3, 6, 0, 3, 0});
  for (long p : oracle::primes(5, 200)) {
    const BernoulliTable t = bernoulli_numbers_mod_p(static_cast<std::uint64_t>(p));
    CHECK(t.residues().size() == static_cast<std::size_t>(p - 1));
    CHECK(t[0] == 1);
    CHECK(t[3] == 0);
    CHECK(t[1] == static_cast<std::uint64_t>((p - 1) / 2));  // -1/2
  }
  CHECK_THROWS_AS(bernoulli_numbers_mod_p(3), InapplicablePrime);
}

TEST_CASE("table matches exact Bernoulli numbers") {
  const auto exact = oracle::bernoulli_numbers(70);
  for (long p : oracle::primes(5, 71)) {
    const BernoulliTable t(static_cast<std::uint64_t>(p));
    for (long m = 0; m <= p - 2; ++m)
      CHECK(t[static_cast<std::size_t>(m)] == oracle::residue(exact[static_cast<std::size_t>(m)], p, 1).get_ui());
  }
}

TEST_CASE("recurrence residual and odd indices") {
  for (long p : oracle::primes(5, 400)) {
    const BernoulliTable t(static_cast<std::uint64_t>(p));
    for (long m = 1; m <= p - 2; ++m) {
      oracle::Z acc = 0;
      for (long j = 0; j <= m; ++j) acc += oracle::choose(m + 1, j) * t[static_cast<std::size_t>(j)];
      CHECK_MESSAGE(acc % p == 0, "p = " << p << ", m = " << m);
      if (m >= 3 && m % 2 == 1) CHECK(t[static_cast<std::size_t>(m)] == 0);
    }
  }
}

TEST_CASE("bernoulli_poly_at") {
  CHECK(bernoulli_poly_at(bernoulli_numbers_mod_p(7), 5, 1, 3) == 6);
  CHECK(bernoulli_poly_at(bernoulli_numbers_mod_p(5), 3, 1, 3) == 3);
  const BernoulliTable t13(13);
  for (std::uint64_t m = 0; m <= 11; ++m) CHECK(bernoulli_poly_at(t13, m, 0, 1) == t13[m]);
  CHECK_THROWS_AS(bernoulli_poly_at(t13, 3, 1, 13), DenominatorNotUnit);
  CHECK_THROWS_AS(bernoulli_poly_at(t13, 12, 1, 3), DomainError);

  // Exact polynomial values: B_5(1/3) = -5/243, B_3(1/3) = 1/27.
  CHECK(oracle::bernoulli_poly(5, oracle::frac(1, 3)) == oracle::frac(-5, 243));
  CHECK(oracle::bernoulli_poly(3, oracle::frac(1, 3)) == oracle::frac(1, 27));
  for (long p : oracle::primes(5, 53))
    for (long b : {2L, 3L, 5L})
      if (b % p != 0) {
        const auto exact = oracle::bernoulli_poly(p - 2, oracle::frac(1, b));
        CHECK(bernoulli_poly_at(BernoulliTable(static_cast<std::uint64_t>(p)), static_cast<std::uint64_t>(p - 2), 1, b) ==
              oracle::residue(exact, p, 1).get_ui());
      }
}

TEST_CASE("b13_via_lehmer") {
  CHECK(b13_via_lehmer(7) == 6);
  CHECK(b13_via_lehmer(5) == 3);
  CHECK(b13_via_lehmer(13) == bernoulli_poly_at(BernoulliTable(13), 11, 1, 3));
  CHECK_THROWS_AS(b13_via_lehmer(3), InapplicablePrime);
}

TEST_CASE("route equivalence 5 <= p <= 500") {
  for (long p : oracle::primes(5, 500)) {
    const auto up = static_cast<std::uint64_t>(p);
    CHECK_MESSAGE(b13_via_lehmer(up) == b13_via_recurrence(up), "p = " << p);
  }
  CHECK_THROWS_AS(b13_via_recurrence(2003), BudgetExceeded);
  CHECK_NOTHROW(b13_via_recurrence(2003, 2003));
}
