#include "scv/registry.hpp"

#include <algorithm>

#include "scv/errors.hpp"
#include "scv/hyperseries.hpp"

namespace scv {

// ---------------------------------------------------------------------------
// PrimeContext

PrimeContext::PrimeContext(std::int64_t p, const VerifyParams& params)
    : params_(params), ring_(p, params.precision), n_(p % 3 == 1 ? (p - 1) / 3 : (p + 1) / 3) {}

PadicNum PrimeContext::binomial(long top, long k) const { return ring_.from_integer(scv::binomial(top, k)); }

const HarmonicTable<Ring>& PrimeContext::table(HarmonicFamily f, int r) {
  auto& slot = tables_[{f, r}];
  if (!slot) {
    long n_max = p() - 1;
    if (f == HarmonicFamily::S) n_max = p() % 3 == 1 ? n_ : n_ - 1;
    if (f == HarmonicFamily::T) n_max = n_;
    slot = std::make_unique<HarmonicTable<Ring>>(f, r, n_max, ring_);
  }
  return *slot;
}

const PadicNum& PrimeContext::H(long m, int r) { return table(HarmonicFamily::H, r)[m]; }
const PadicNum& PrimeContext::S(long m, int r) { return table(HarmonicFamily::S, r)[m]; }
const PadicNum& PrimeContext::T(long m, int r) { return table(HarmonicFamily::T, r)[m]; }

PadicNum PrimeContext::shifted_harmonic_sum(long lo, long hi, long offset) {
  PadicNum sum = ring_.zero();
  for (long k = lo; k <= hi; ++k) sum += H(offset + k) * ring_.reciprocal(Int(k));
  return sum;
}

namespace {

PadicNum known_mod_p(std::int64_t p, std::uint64_t residue) {
  return PadicNum::normalized(p, 0, Int(static_cast<unsigned long>(residue)), 1);
}

}  // namespace

const PadicNum& PrimeContext::bernoulli13() {
  if (!b13_) b13_ = known_mod_p(p(), b13_via_lehmer(static_cast<std::uint64_t>(p())));
  return *b13_;
}

const PadicNum& PrimeContext::bernoulli13_recurrence() {
  if (!b13_rec_)
    b13_rec_ = known_mod_p(p(), b13_via_recurrence(static_cast<std::uint64_t>(p()), params_.bernoulli_oracle_cap));
  return *b13_rec_;
}

const PadicNum& PrimeContext::theorem_lhs() {
  if (!thm_lhs_) {
    const SpecId id = p() % 3 == 1 ? SpecId::THM1_LHS : SpecId::THM2_LHS;
    thm_lhs_ = truncated_sum(sum_spec(id), p(), ring_);
  }
  return *thm_lhs_;
}

const PadicNum& PrimeContext::inner_weighted() {
  if (!inner_) {
    const SpecId id = p() % 3 == 1 ? SpecId::C3_INNER_WEIGHTED : SpecId::D1_INNER_WEIGHTED;
    inner_ = truncated_sum(sum_spec(id), p(), ring_);
  }
  return *inner_;
}

const PadicNum& PrimeContext::vanhamme_lhs() {
  if (!vanhamme_) vanhamme_ = truncated_sum(sum_spec(SpecId::VANHAMME_D2_LHS), p(), ring_);
  return *vanhamme_;
}

PadicNum PrimeContext::gamma_third(int precision) const {
  const Int g = gamma_p(GammaRequest{1, 3, p(), precision, params_.gamma_budget});
  return PadicNum::normalized(p(), 0, g, precision);
}

// ---------------------------------------------------------------------------
// Congruence inventory

namespace {

using Cs = std::vector<Congruence>;

PadicNum sign(PrimeContext& c, long k) { return c.integer(k % 2 == 0 ? 1 : -1); }

Cs thm1(PrimeContext& c) {
  const long p = c.p();
  const PadicNum rhs = c.integer(p) + c.ring().from_rational(Rat(Int(p) * p * p, Int(9))) * c.bernoulli13();
  return {{"mod p^4", c.theorem_lhs(), rhs, 4}};
}

PadicNum thm2_correction(PrimeContext& c) { return c.rational(1, 9) * c.bernoulli13() - c.integer(2); }

Cs thm2(PrimeContext& c) {
  const PadicNum rhs = c.integer(c.p()) - c.p_power(3) * thm2_correction(c);
  return {{"mod p^4", c.theorem_lhs(), rhs, 4}};
}

Cs conjecture(PrimeContext& c) { return {{"mod p^3", c.theorem_lhs(), c.integer(c.p()), 3}}; }

// Exponent 4 needs Gamma_p(1/3) mod p^3, exponent 6 mod p^5.
Cs vanhamme(PrimeContext& c) {
  const PadicNum g = c.gamma_third(3);
  return {{"p = 1 mod 6", c.vanhamme_lhs(), -(c.p_power(1) * g.pow(9)), 4}};
}

Cs long_ramakrishna(PrimeContext& c) {
  if (c.p() % 6 == 1) {
    const PadicNum g = c.gamma_third(5);
    return {{"p = 1 mod 6", c.vanhamme_lhs(), -(c.p_power(1) * g.pow(9)), 6}};
  }
  const PadicNum coeff = -(c.rational(10, 27) * c.p_power(4));
  const PadicNum g = c.gamma_third(std::max(1, 6 - coeff.valuation()));
  return {{"p = 5 mod 6", c.vanhamme_lhs(), coeff * g.pow(9), 6}};
}

Cs wolstenholme(PrimeContext& c) { return wolstenholme_instances(c.ring()); }
Cs b1(PrimeContext& c) { return reflection_first(c.ring()); }
Cs b2(PrimeContext& c) { return reflection_second(c.ring()); }

Cs reflection(PrimeContext& c) {
  Cs all = reflection_first(c.ring());
  Cs second = reflection_second(c.ring());
  all.insert(all.end(), second.begin(), second.end());
  return all;
}

Cs b3(PrimeContext& c) { return {{"S_n", c.S(c.n()), c.ring().zero(), 1}}; }
Cs b4(PrimeContext& c) { return {{"S_n^(2)", c.S(c.n(), 2), -(c.rational(1, 9) * c.bernoulli13()), 1}}; }
Cs b5(PrimeContext& c) { return {{"T_n", c.T(c.n()), c.ring().zero(), 1}}; }
Cs b6(PrimeContext& c) { return {{"T_n^(2)", c.T(c.n(), 2), c.rational(1, 9) * c.bernoulli13(), 1}}; }

// Lehmer's congruence, with the Bernoulli value taken from the table route.
Cs new1(PrimeContext& c) {
  const PadicNum chi = c.integer(legendre_symbol(Int(-3), c.p()));
  return {{"H_{floor(p/3)}^(2)", c.H(c.p() / 3, 2), c.rational(1, 2) * chi * c.bernoulli13_recurrence(), 1}};
}

// Pochhammer ratio with p-shifted arguments against its second-order expansion.
Cs c2(PrimeContext& c) {
  const long p = c.p();
  const Rat third(1, 3);
  const Rat shift(p, 3);
  const Ring& ring = c.ring();
  Cs out;
  PadicNum ratio = ring.one();
  PadicNum expansion = ring.one();  // prod_j ((3j-2)/(3j))^2 - 4(3j-1)/(3j)^4 p^2
  PadicNum base = ring.one();       // (1/3)_k^2 / (1)_k^2
  PadicNum inner = ring.zero();
  const PadicNum p2 = c.p_power(2);
  for (long k = 0; k <= c.n(); ++k) {
    if (k > 0) {
      const Rat i(k - 1);
      ratio = ratio * ring.from_rational(third - shift + i) * ring.from_rational(third + shift + i) /
              (ring.from_rational(Rat(1) - shift + i) * ring.from_rational(Rat(1) + shift + i));
      const Rat lead(3 * k - 2, 3 * k);
      expansion *= ring.from_rational(lead * lead) -
                   ring.from_rational(Rat(Int(4) * (3 * k - 1), Int(3 * k) * (3 * k) * (3 * k) * (3 * k))) * p2;
      base *= ring.from_rational((third + i) * (third + i) / Rat(k * k));
      inner += detail::inner_weight_step(k, InnerWeight::A, ring);
    }
    const PadicNum rhs = base * (ring.one() + p2 * inner);
    out.push_back({"k=" + std::to_string(k) + " ratio", ratio, rhs, 4});
    out.push_back({"k=" + std::to_string(k) + " expansion", expansion, rhs, 4});
  }
  return out;
}

Cs c3(PrimeContext& c) {
  return {{"mod p^4", c.theorem_lhs(), c.integer(c.p()) - c.p_power(2) * c.inner_weighted(), 4}};
}

// sum_{k=1}^{n} H_k/(3k-1), sum T_k/k, sum T_k/(3k-1) for the first family.
struct FirstFamilySums {
  PadicNum h_over_s, t_over_k, t_over_s;
};

FirstFamilySums first_family_sums(PrimeContext& c) {
  const Ring& ring = c.ring();
  FirstFamilySums s{ring.zero(), ring.zero(), ring.zero()};
  for (long k = 1; k <= c.n(); ++k) {
    s.h_over_s += c.H(k) * ring.reciprocal(Int(3 * k - 1));
    s.t_over_k += c.T(k) * ring.reciprocal(Int(k));
    s.t_over_s += c.T(k) * ring.reciprocal(Int(3 * k - 1));
  }
  return s;
}

Cs c4(PrimeContext& c) {
  const long n = c.n();
  const auto s = first_family_sums(c);
  const PadicNum bracket = c.integer(2) * s.h_over_s + c.integer(2) * s.t_over_k - c.integer(6) * s.t_over_s +
                           c.integer(2) * c.H(n) - c.integer(3) * c.S(n, 2);
  return {{"mod p^2", c.inner_weighted(), c.rational(c.p(), 3) * bracket, 2}};
}

Cs c5(PrimeContext& c) {
  const long n = c.n();
  const PadicNum& hn = c.H(n);
  const PadicNum rhs = c.rational(1, 3) * hn * hn - hn - c.rational(1, 3) * c.shifted_harmonic_sum(1, n, n);
  return {{"mod p", first_family_sums(c).h_over_s, rhs, 1}};
}

Cs c6(PrimeContext& c) {
  const long n = c.n();
  Cs out;
  for (long k = 1; k <= n; ++k)
    out.push_back({"k=" + std::to_string(k), c.T(k), c.rational(1, 3) * (c.H(2 * n + k) - c.H(2 * n)), 1});
  return out;
}

Cs c7(PrimeContext& c) {
  const long n = c.n();
  const PadicNum& hn = c.H(n);
  const PadicNum rhs = c.rational(1, 3) * c.shifted_harmonic_sum(1, n, 2 * n) - c.rational(1, 3) * hn * hn;
  return {{"mod p", first_family_sums(c).t_over_k, rhs, 1}};
}

Cs c8(PrimeContext& c) {
  const long n = c.n();
  return {{"mod p", first_family_sums(c).t_over_s, c.rational(1, 9) * c.shifted_harmonic_sum(n + 1, 2 * n, n), 1}};
}

Cs c9(PrimeContext& c) {
  const long n = c.n();
  const PadicNum bracket = c.shifted_harmonic_sum(1, n, 2 * n) - c.shifted_harmonic_sum(1, 2 * n, n) -
                           c.rational(9, 2) * c.S(n, 2);
  return {{"mod p^2", c.inner_weighted(), c.rational(2 * c.p(), 9) * bracket, 2}};
}

// C(3n, offset + k) == (-1)^k (1 - p H_{offset+k}) (mod p^2). Holds because n is even.
Cs binomial_expansion(PrimeContext& c, long offset, long k_max) {
  const long n = c.n();
  Cs out;
  for (long k = 0; k <= k_max; ++k) {
    const PadicNum rhs = sign(c, k) * (c.integer(1) - c.p_power(1) * c.H(offset + k));
    out.push_back({"k=" + std::to_string(k), c.binomial(3 * n, offset + k), rhs, 2});
  }
  return out;
}

Cs c12(PrimeContext& c) { return binomial_expansion(c, c.n(), 2 * c.n()); }
Cs c13(PrimeContext& c) { return binomial_expansion(c, 2 * c.n(), c.n()); }

Cs c14(PrimeContext& c) {
  const long n = c.n();
  const PadicNum lhs = c.shifted_harmonic_sum(1, 2 * n, n) - c.shifted_harmonic_sum(1, n, 2 * n);
  return {{"harmonic", lhs, c.integer(2) * c.H(n, 2), 1},
          {"C(3n,n)", c.binomial(3 * n, n), c.integer(1), 1}};
}

Cs c15(PrimeContext& c) {
  const long n = c.n();
  const PadicNum& w = c.inner_weighted();
  // Substituting C14 into C9 gives -2 H_n^(2) in the bracket.
  const PadicNum middle = -(c.rational(2 * c.p(), 9) * (c.integer(2) * c.H(n, 2) + c.rational(9, 2) * c.S(n, 2)));
  return {{"harmonic form", w, middle, 2},
          {"Bernoulli form", w, -(c.rational(c.p(), 9) * c.bernoulli13()), 2}};
}

Cs d1(PrimeContext& c) {
  return {{"mod p^4", c.theorem_lhs(), c.integer(c.p()) - c.p_power(2) * c.inner_weighted(), 4}};
}

// sum_{k=1}^{n} H_k/(3k-2), sum_{k=1}^{n-1} S_k/k, sum_{k=1}^{n-1} S_k/(3k-2).
struct SecondFamilySums {
  PadicNum h_over_t, s_over_k, s_over_t;
};

SecondFamilySums second_family_sums(PrimeContext& c) {
  const Ring& ring = c.ring();
  const long n = c.n();
  SecondFamilySums s{ring.zero(), ring.zero(), ring.zero()};
  for (long k = 1; k <= n; ++k) s.h_over_t += c.H(k) * ring.reciprocal(Int(3 * k - 2));
  for (long k = 1; k <= n - 1; ++k) {
    s.s_over_k += c.S(k) * ring.reciprocal(Int(k));
    s.s_over_t += c.S(k) * ring.reciprocal(Int(3 * k - 2));
  }
  return s;
}

Cs d2(PrimeContext& c) {
  const long n = c.n();
  const auto s = second_family_sums(c);
  const PadicNum bracket = c.H(n) - c.integer(3) * c.T(n, 2) + c.integer(2) * s.h_over_t +
                           c.integer(2) * s.s_over_k - c.integer(6) * s.s_over_t;
  return {{"mod p^2", c.inner_weighted(), c.rational(c.p(), 3) * bracket, 2}};
}

Cs d3(PrimeContext& c) {
  const long n = c.n();
  const PadicNum rhs = -(c.rational(1, 3) * c.shifted_harmonic_sum(n, 2 * n - 1, n - 1)) - c.rational(1, 2) * c.H(n);
  return {{"mod p", second_family_sums(c).h_over_t, rhs, 1}};
}

Cs d4(PrimeContext& c) {
  const long n = c.n();
  const PadicNum& h = c.H(n - 1);
  const PadicNum rhs = -(c.rational(1, 3) * h * h) + c.rational(1, 3) * c.shifted_harmonic_sum(1, n - 1, 2 * n - 1);
  return {{"mod p", second_family_sums(c).s_over_k, rhs, 1}};
}

Cs d5(PrimeContext& c) {
  const long n = c.n();
  const PadicNum rhs = c.rational(1, 9) * c.shifted_harmonic_sum(1, n - 1, n - 1) -
                       c.rational(1, 9) * c.H(n) * c.H(n - 1) + c.rational(1, 3) * c.H(n);
  return {{"mod p", second_family_sums(c).s_over_t, rhs, 1}};
}

PadicNum d7_lhs(PrimeContext& c) {
  const long n = c.n();
  return c.shifted_harmonic_sum(1, n - 1, 2 * n - 1) - c.shifted_harmonic_sum(1, 2 * n - 1, n - 1);
}

Cs d6(PrimeContext& c) {
  const long n = c.n();
  const PadicNum& hn = c.H(n);
  const PadicNum& hm = c.H(n - 1);
  const PadicNum bracket = d7_lhs(c) + hn * hm - c.integer(3) * hn - hm * hm - c.rational(9, 2) * c.T(n, 2);
  return {{"mod p^2", c.inner_weighted(), c.rational(2 * c.p(), 9) * bracket, 2}};
}

Cs d7(PrimeContext& c) {
  const long n = c.n();
  return {{"harmonic", d7_lhs(c), -(c.integer(2) * c.H(n - 1, 2)), 1},
          {"C(3n-2,n-1)", c.binomial(3 * n - 2, n - 1), c.integer(-1), 1}};
}

Cs d8(PrimeContext& c) {
  const long n = c.n();
  const PadicNum& hn = c.H(n);
  const PadicNum& hm = c.H(n - 1);
  const PadicNum bracket = -(c.integer(3) * c.T(n, 2)) - c.rational(4, 3) * c.H(n - 1, 2) +
                           c.rational(2, 3) * hn * hm - c.integer(2) * hn - c.rational(2, 3) * hm * hm;
  return {{"mod p^2", c.inner_weighted(), c.rational(c.p(), 3) * bracket, 2}};
}

Cs d9(PrimeContext& c) {
  const long n = c.n();
  return {{"Bernoulli form", c.inner_weighted(), c.p_power(1) * thm2_correction(c), 2},
          {"H_n - H_{n-1}", c.H(n), c.H(n - 1) + c.integer(3), 1}};
}

const PrimeClass kAny{1, 0, 5};
const PrimeClass kFirst{3, 1, 7};
const PrimeClass kSecond{3, 2, 5};

std::vector<CheckDef> build_registry() {
  using C = CheckId;
  return {
      {C::THM1, kFirst, 4, false, "theorem sum (6k+1) == p + p^3/9 B_{p-2}(1/3) mod p^4", thm1},
      {C::THM2, kSecond, 4, false, "theorem sum (6k-1) == p - p^3 (B_{p-2}(1/3)/9 - 2) mod p^4", thm2},
      {C::CONJ1, kFirst, 3, false, "theorem sum (6k+1) == p mod p^3", conjecture},
      {C::CONJ2, kSecond, 3, false, "theorem sum (6k-1) == p mod p^3", conjecture},
      {C::VANHAMME_D2, {6, 1, 7}, 4, false, "sum (6k+1)(1/3)_k^6/k!^6 == -p Gamma_p(1/3)^9 mod p^4", vanhamme},
      {C::LONG_RAMA, kAny, 6, false, "sum (6k+1)(1/3)_k^6/k!^6 mod p^6, both branches p mod 6", long_ramakrishna},
      {C::WOLSTENHOLME, kAny, 2, false, "H_{p-1} == 0 mod p^2, H_{p-1}^(2) == 0 mod p", wolstenholme},
      {C::REFLECTION, kAny, 2, true, "B1 and B2 together, 1 <= k <= p-1", reflection},
      {C::B1, kAny, 2, true, "H_{p-1-k} - H_k == p H_k^(2) mod p^2, 1 <= k <= p-1", b1},
      {C::B2, kAny, 1, true, "H_{p-1-k}^(2) + H_k^(2) == 0 mod p, 1 <= k <= p-1", b2},
      {C::B3, kFirst, 1, false, "S_n == 0 mod p, n = (p-1)/3", b3},
      {C::B4, kFirst, 1, false, "S_n^(2) == -B_{p-2}(1/3)/9 mod p", b4},
      {C::B5, kSecond, 1, false, "T_n == 0 mod p, n = (p+1)/3", b5},
      {C::B6, kSecond, 1, false, "T_n^(2) == B_{p-2}(1/3)/9 mod p", b6},
      {C::NEW1, kAny, 1, false, "H_{floor(p/3)}^(2) == (-3/p) B_{p-2}(1/3)/2 mod p (table route)", new1},
      {C::C2, kFirst, 4, true, "p-shifted Pochhammer ratio expansion mod p^4, 0 <= k <= n", c2},
      {C::C3, kFirst, 4, false, "theorem sum == p - p^2 (inner-weighted sum) mod p^4", c3},
      {C::C4, kFirst, 2, false, "inner-weighted sum in harmonic sums mod p^2", c4},
      {C::C5, kFirst, 1, false, "sum H_k/(3k-1) mod p", c5},
      {C::C6, kFirst, 1, true, "T_k == (H_{2n+k} - H_{2n})/3 mod p, 1 <= k <= n", c6},
      {C::C7, kFirst, 1, false, "sum T_k/k mod p", c7},
      {C::C8, kFirst, 1, false, "sum T_k/(3k-1) mod p", c8},
      {C::C9, kFirst, 2, false, "inner-weighted sum via shifted harmonic sums mod p^2", c9},
      {C::C12, kFirst, 2, true, "C(3n, n+k) == (-1)^k (1 - p H_{n+k}) mod p^2, 0 <= k <= 2n", c12},
      {C::C13, kFirst, 2, true, "C(3n, 2n+k) == (-1)^k (1 - p H_{2n+k}) mod p^2, 0 <= k <= n", c13},
      {C::C14, kFirst, 1, false, "shifted harmonic difference == 2 H_n^(2) mod p; C(3n,n) == 1 mod p", c14},
      {C::C15, kFirst, 2, false, "inner-weighted sum == -p B_{p-2}(1/3)/9 mod p^2", c15},
      {C::D1c, kSecond, 4, false, "theorem sum == p - p^2 (inner-weighted sum) mod p^4", d1},
      {C::D2c, kSecond, 2, false, "inner-weighted sum in harmonic sums mod p^2", d2},
      {C::D3c, kSecond, 1, false, "sum H_k/(3k-2) mod p", d3},
      {C::D4c, kSecond, 1, false, "sum S_k/k mod p", d4},
      {C::D5c, kSecond, 1, false, "sum S_k/(3k-2) mod p", d5},
      {C::D6c, kSecond, 2, false, "inner-weighted sum via shifted harmonic sums mod p^2", d6},
      {C::D7c, kSecond, 1, false, "shifted harmonic difference == -2 H_{n-1}^(2) mod p; C(3n-2,n-1) == -1", d7},
      {C::D8c, kSecond, 2, false, "inner-weighted sum in H_n, H_{n-1}, T_n^(2) mod p^2", d8},
      {C::D9c, kSecond, 2, false, "inner-weighted sum == p (B_{p-2}(1/3)/9 - 2) mod p^2; H_n == H_{n-1} + 3", d9},
  };
}

void require_class(const CheckDef& def, std::int64_t p) {
  if (p == 2 || p == 3) throw InapplicablePrime(std::string(to_string(def.id)) + " at p = " + std::to_string(p));
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (p < def.cls.min_prime && p % def.cls.modulus == def.cls.residue)
    throw InapplicablePrime(std::string(to_string(def.id)) + " requires " + def.cls.to_string());
  if (!def.cls.admits(p))
    throw WrongResidueClass(std::string(to_string(def.id)) + " requires " + def.cls.to_string() + ", got p = " +
                            std::to_string(p));
}

bool is_gamma_check(CheckId id) { return id == CheckId::VANHAMME_D2 || id == CheckId::LONG_RAMA; }

}  // namespace

const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> registry = build_registry();
  return registry;
}

const CheckDef* find_check(CheckId id) {
  const auto& reg = check_registry();
  const auto it = std::find_if(reg.begin(), reg.end(), [id](const CheckDef& d) { return d.id == id; });
  return it == reg.end() ? nullptr : &*it;
}

bool applicable(const CheckDef& def, std::int64_t p, const VerifyParams& params) {
  if (!def.cls.admits(p)) return false;
  if (def.id == CheckId::NEW1) return static_cast<std::uint64_t>(p) <= params.bernoulli_oracle_cap;
  if (is_gamma_check(def.id)) {
    const int needed = def.id == CheckId::VANHAMME_D2 ? 3 : (p % 6 == 1 ? 5 : (p == 5 ? 1 : 2));
    return gamma_representative(GammaRequest{1, 3, p, needed, params.gamma_budget}) <= params.gamma_budget;
  }
  return true;
}

CheckReport run_check(const CheckDef& def, PrimeContext& ctx) {
  require_class(def, ctx.p());
  return timed_check([&] {
    const auto instances = def.instances(ctx);
    return summarize(def.id, ctx.p(), instances, ctx.params().precision);
  });
}

CheckReport run_check(CheckId id, std::int64_t p, const VerifyParams& params) {
  const CheckDef* def = find_check(id);
  if (def == nullptr) throw ConfigInvalid(std::string(to_string(id)) + " is not a prime-indexed check");
  require_class(*def, p);
  PrimeContext ctx(p, params);
  return run_check(*def, ctx);
}

CheckReport check_theorem(CheckId id, std::int64_t p, const VerifyParams& params, int exponent) {
  if (id != CheckId::THM1 && id != CheckId::THM2) throw ConfigInvalid("not a theorem check");
  if (exponent > 4)
    throw ConfigInvalid("the Bernoulli term is known mod p only; theorem checks stop at exponent 4");
  if (exponent < 1) throw ConfigInvalid("exponent must be positive");
  if (params.precision < exponent + 2) throw ConfigInvalid("precision must exceed the exponent by 2");
  const CheckDef& def = *find_check(id);
  require_class(def, p);
  PrimeContext ctx(p, params);
  return timed_check([&] {
    auto instances = def.instances(ctx);
    for (auto& c : instances) c.exponent = exponent;
    return summarize(id, p, instances, params.precision);
  });
}

CheckReport check_lemma(CheckId id, std::int64_t p, const VerifyParams& params) {
  if (id == CheckId::THM1 || id == CheckId::THM2) return check_theorem(id, p, params);
  return run_check(id, p, params);
}

Sharpness theorem_sharpness(CheckId id, std::int64_t p, const VerifyParams& params) {
  if (id != CheckId::THM1 && id != CheckId::THM2) throw ConfigInvalid("not a theorem check");
  require_class(*find_check(id), p);
  PrimeContext ctx(p, params);
  const PadicNum diff = ctx.theorem_lhs() - ctx.integer(p);
  const PadicNum correction = id == CheckId::THM1 ? ctx.bernoulli13() : thm2_correction(ctx);
  return {std::min(diff.valuation_lower_bound(), params.precision), correction.is_zero()};
}

}  // namespace scv
