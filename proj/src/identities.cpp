#include "scv/identities.hpp"

#include <array>
#include <string>
#include <utility>

#include "scv/errors.hpp"
#include "scv/harmonic.hpp"
#include "scv/hyperseries.hpp"

namespace scv {

namespace {

constexpr std::array<std::pair<IdentityId, std::string_view>, 8> kNames{{
    {IdentityId::B7, "B7"},
    {IdentityId::B8, "B8"},
    {IdentityId::B9, "B9"},
    {IdentityId::B10, "B10"},
    {IdentityId::C10, "C10"},
    {IdentityId::C11, "C11"},
    {IdentityId::D1, "D1"},
    {IdentityId::D2, "D2"},
}};

using Table = HarmonicTable<ExactField>;

Table table(HarmonicFamily f, int r, long n_max) { return Table(f, r, n_max, ExactField{}); }

// sum_{k=1}^{upper} (-1)^k / k * C(top, offset + k)
Rat alternating_binomial_sum(long top, long offset, long upper) {
  Rat sum;
  for (long k = 1; k <= upper; ++k) {
    const Rat term(binomial(top, offset + k), Int(k));
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

Rat b9_rhs(long n) {
  const auto h = table(HarmonicFamily::H, 1, n);
  const auto s = table(HarmonicFamily::S, 1, n);
  const auto t = table(HarmonicFamily::T, 1, n);
  const Rat s2 = harmonic_value(HarmonicFamily::S, n, 2);
  const Rat& hn = h[n];
  const Rat& sn = s[n];
  Rat h_over_s, t_over_k, t_over_s;
  for (long k = 1; k <= n; ++k) {
    h_over_s += h[k] / Rat(3 * k - 1);
    t_over_k += t[k] / Rat(k);
    t_over_s += t[k] / Rat(3 * k - 1);
  }
  const Rat scale(3 * n + 1, 3);
  return -scale * (Rat(-2) * hn + Rat(3) * s2 + Rat(6) * sn + Rat(2) * hn * sn - Rat(3) * sn * sn) +
         scale * (Rat(2) * h_over_s + Rat(2) * t_over_k - Rat(6) * t_over_s);
}

Rat b10_rhs(long n) {
  const auto h = table(HarmonicFamily::H, 1, n);
  const auto s = table(HarmonicFamily::S, 1, n);
  const auto t = table(HarmonicFamily::T, 1, n);
  const Rat t2 = harmonic_value(HarmonicFamily::T, n, 2);
  const Rat& hn = h[n];
  const Rat& tn = t[n];
  Rat h_over_t;
  for (long k = 1; k <= n; ++k) h_over_t += h[k] / Rat(3 * k - 2);
  Rat s_over_k, s_over_t;  // empty for n = 1
  for (long k = 1; k <= n - 1; ++k) {
    s_over_k += s[k] / Rat(k);
    s_over_t += s[k] / Rat(3 * k - 2);
  }
  const Rat rational_part(Int(-(3 * n - 1)) * (9 * n * n - 8), Int(n) * (3 * n - 2) * (3 * n - 2));
  const Rat first = rational_part + hn - Rat(3) * t2 + Rat(3) * tn * tn - Rat(2) * hn * tn +
                    Rat(3 * (3 * n - 4), 3 * n - 2) * tn;
  const Rat second = -Rat(2 * (3 * n - 1), n) * s[n - 1] + Rat(2) * h_over_t + Rat(2) * s_over_k -
                     Rat(6) * s_over_t;
  return Rat(3 * n - 1, 3) * (first + second);
}

}  // namespace

std::string_view to_string(IdentityId id) {
  for (const auto& [k, name] : kNames)
    if (k == id) return name;
  return "?";
}

std::optional<IdentityId> parse_identity_id(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  return std::nullopt;
}

const std::vector<IdentityId>& all_identity_ids() {
  static const std::vector<IdentityId> ids{IdentityId::B7,  IdentityId::B8,  IdentityId::B9, IdentityId::B10,
                                           IdentityId::C10, IdentityId::C11, IdentityId::D1, IdentityId::D2};
  return ids;
}

CheckId check_id(IdentityId id) {
  switch (id) {
    case IdentityId::B7: return CheckId::B7;
    case IdentityId::B8: return CheckId::B8;
    case IdentityId::B9: return CheckId::B9;
    case IdentityId::B10: return CheckId::B10;
    case IdentityId::C10: return CheckId::C10;
    case IdentityId::C11: return CheckId::C11;
    case IdentityId::D1: return CheckId::D1;
    case IdentityId::D2: return CheckId::D2;
  }
  return CheckId::B7;
}

Rat identity_eval(IdentityId id, long n, Side side) {
  if (n < 1) throw DomainError("identities are stated for n >= 1, got " + std::to_string(n));
  const bool lhs = side == Side::Lhs;
  switch (id) {
    case IdentityId::B7:
      return lhs ? truncated_sum_exact(sum_spec(SpecId::B7_WEIGHTED), n) : Rat(3 * n + 1);
    case IdentityId::B8:
      return lhs ? truncated_sum_exact(sum_spec(SpecId::B8_WEIGHTED), n) : Rat(3 * n - 1);
    case IdentityId::B9:
      return lhs ? truncated_sum_exact(sum_spec(SpecId::B9_LHS), n) : b9_rhs(n);
    case IdentityId::B10:
      return lhs ? truncated_sum_exact(sum_spec(SpecId::B10_LHS), n) : b10_rhs(n);
    case IdentityId::C10: {
      if (lhs) return alternating_binomial_sum(3 * n, n, 2 * n);
      const auto h = table(HarmonicFamily::H, 1, 3 * n);
      return Rat(binomial(3 * n, n)) * (h[n] - h[3 * n]);
    }
    case IdentityId::C11: {
      if (lhs) return alternating_binomial_sum(3 * n, 2 * n, n);
      const auto h = table(HarmonicFamily::H, 1, 3 * n);
      return Rat(binomial(3 * n, n)) * (h[2 * n] - h[3 * n]);
    }
    case IdentityId::D1: {
      if (lhs) return alternating_binomial_sum(3 * n - 2, n - 1, 2 * n - 1);
      const auto h = table(HarmonicFamily::H, 1, 3 * n - 2);
      return Rat(binomial(3 * n - 2, n - 1)) * (h[n - 1] - h[3 * n - 2]);
    }
    case IdentityId::D2: {
      if (lhs) return alternating_binomial_sum(3 * n - 2, 2 * n - 1, n - 1);
      const auto h = table(HarmonicFamily::H, 1, 3 * n - 2);
      return Rat(binomial(3 * n - 2, n - 1)) * (h[2 * n - 1] - h[3 * n - 2]);
    }
  }
  throw DomainError("unknown identity");
}

CheckReport identity_verify(IdentityId id, long n_first, long n_last, int cap) {
  if (n_first < 1) throw DomainError("identity range must start at n >= 1");
  return timed_check([&] {
    CheckReport r;
    r.check = check_id(id);
    r.pass = true;
    r.diff_valuation = cap;
    for (long n = n_first; n <= n_last; ++n) {
      const Rat lhs = identity_eval(id, n, Side::Lhs);
      const Rat rhs = identity_eval(id, n, Side::Rhs);
      r.lhs = lhs.to_string();
      r.rhs = rhs.to_string();
      r.detail = "n=" + std::to_string(n);
      if (lhs != rhs) {
        r.pass = false;
        r.diff_valuation = 0;
        break;
      }
    }
    if (n_last < n_first) r.detail = "empty range";
    return r;
  });
}

}  // namespace scv
