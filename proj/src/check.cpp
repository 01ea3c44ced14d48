#include "scv/check.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "scv/errors.hpp"

namespace scv {

namespace {

constexpr std::array<std::pair<CheckId, std::string_view>, 45> kNames{{
    {CheckId::THM1, "THM1"},
    {CheckId::THM2, "THM2"},
    {CheckId::CONJ1, "CONJ1"},
    {CheckId::CONJ2, "CONJ2"},
    {CheckId::VANHAMME_D2, "VANHAMME_D2"},
    {CheckId::LONG_RAMA, "LONG_RAMA"},
    {CheckId::WOLSTENHOLME, "WOLSTENHOLME"},
    {CheckId::REFLECTION, "REFLECTION"},
    {CheckId::B1, "B1"},
    {CheckId::B2, "B2"},
    {CheckId::B3, "B3"},
    {CheckId::B4, "B4"},
    {CheckId::B5, "B5"},
    {CheckId::B6, "B6"},
    {CheckId::NEW1, "NEW1"},
    {CheckId::C2, "C2"},
    {CheckId::C3, "C3"},
    {CheckId::C4, "C4"},
    {CheckId::C5, "C5"},
    {CheckId::C6, "C6"},
    {CheckId::C7, "C7"},
    {CheckId::C8, "C8"},
    {CheckId::C9, "C9"},
    {CheckId::C12, "C12"},
    {CheckId::C13, "C13"},
    {CheckId::C14, "C14"},
    {CheckId::C15, "C15"},
    {CheckId::D1c, "D1c"},
    {CheckId::D2c, "D2c"},
    {CheckId::D3c, "D3c"},
    {CheckId::D4c, "D4c"},
    {CheckId::D5c, "D5c"},
    {CheckId::D6c, "D6c"},
    {CheckId::D7c, "D7c"},
    {CheckId::D8c, "D8c"},
    {CheckId::D9c, "D9c"},
    {CheckId::B7, "B7"},
    {CheckId::B8, "B8"},
    {CheckId::B9, "B9"},
    {CheckId::B10, "B10"},
    {CheckId::C10, "C10"},
    {CheckId::C11, "C11"},
    {CheckId::D1, "D1"},
    {CheckId::D2, "D2"},
    {CheckId::GAMMA_REFLECTION, "GAMMA_REFLECTION"},
}};

}  // namespace

std::string PrimeClass::to_string() const {
  std::string s = "p >= " + std::to_string(min_prime);
  if (modulus > 1) s += ", p = " + std::to_string(residue) + " mod " + std::to_string(modulus);
  return s;
}

std::string_view to_string(CheckId id) {
  for (const auto& [k, name] : kNames)
    if (k == id) return name;
  return "?";
}

std::optional<CheckId> parse_check_id(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  return std::nullopt;
}

const std::vector<CheckId>& all_check_ids() {
  static const std::vector<CheckId> ids = [] {
    std::vector<CheckId> v;
    for (const auto& [k, name] : kNames) v.push_back(k);
    return v;
  }();
  return ids;
}

CheckReport compare(CheckId id, const Congruence& c, int cap) {
  const PadicNum diff = c.lhs - c.rhs;
  if (diff.is_zero() && diff.absolute_precision() < c.exponent)
    throw PrecisionExhausted(std::string(to_string(id)) + " " + c.label + ": difference known only mod p^" +
                             std::to_string(diff.absolute_precision()) + ", need p^" +
                             std::to_string(c.exponent));
  CheckReport r;
  r.prime = c.lhs.prime();
  r.check = id;
  r.exponent = c.exponent;
  r.lhs = c.lhs.residue(c.exponent).get_str();
  r.rhs = c.rhs.residue(c.exponent).get_str();
  r.diff_valuation = std::min(diff.valuation_lower_bound(), cap);
  r.pass = r.diff_valuation >= c.exponent;
  r.detail = c.label;
  return r;
}

CheckReport summarize(CheckId id, std::int64_t p, std::span<const Congruence> instances, int cap) {
  if (instances.empty()) {
    CheckReport r;
    r.prime = p;
    r.check = id;
    r.pass = true;
    r.detail = "no instances";
    return r;
  }
  std::optional<CheckReport> best;
  for (const auto& c : instances) {
    CheckReport r = compare(id, c, cap);
    if (!r.pass) return r;
    if (!best || r.diff_valuation - r.exponent < best->diff_valuation - best->exponent)
      best = std::move(r);
  }
  return *best;
}

}  // namespace scv
