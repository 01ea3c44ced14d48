#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "scv/check.hpp"
#include "scv/errors.hpp"
#include "scv/padic.hpp"

namespace scv {

/// H sums over 1/k^r, S over 1/(3k-1)^r, T over 1/(3k-2)^r.
enum class HarmonicFamily { H, S, T };

std::string_view to_string(HarmonicFamily f);

inline Int harmonic_denominator(HarmonicFamily f, long k) {
  switch (f) {
    case HarmonicFamily::H: return Int(k);
    case HarmonicFamily::S: return Int(3 * k - 1);
    case HarmonicFamily::T: return Int(3 * k - 2);
  }
  return Int(k);
}

/// Sum over k = 1..n of 1/d(k)^r, summed directly. n = 0 gives 0.
template <class Field>
typename Field::value_type harmonic_sum(HarmonicFamily f, long n, int r, const Field& field) {
  if (r < 1) throw DomainError("harmonic order must be positive");
  auto sum = field.zero();
  for (long k = 1; k <= n; ++k) sum += field.reciprocal(harmonic_denominator(f, k)).pow(static_cast<unsigned>(r));
  return sum;
}

Rat harmonic_value(HarmonicFamily f, long n, int r);
PadicNum harmonic_value(HarmonicFamily f, long n, int r, const Ring& ring);

/// Prefix sums 0..n_max of one family and order, built in a single pass.
template <class Field>
class HarmonicTable {
 public:
  using value_type = typename Field::value_type;

  HarmonicTable(HarmonicFamily f, int r, long n_max, const Field& field) {
    if (r < 1) throw DomainError("harmonic order must be positive");
    values_.reserve(static_cast<std::size_t>(n_max + 1));
    values_.push_back(field.zero());
    for (long k = 1; k <= n_max; ++k)
      values_.push_back(values_.back() +
                        field.reciprocal(harmonic_denominator(f, k)).pow(static_cast<unsigned>(r)));
  }

  const value_type& operator[](long n) const { return values_.at(static_cast<std::size_t>(n)); }
  long max_index() const { return static_cast<long>(values_.size()) - 1; }

 private:
  std::vector<value_type> values_;
};

/// Reflection congruences for every 1 <= k <= p-1:
///   H_{p-1-k} - H_k == p H_k^(2)   (mod p^2)
///   H_{p-1-k}^(2) + H_k^(2) == 0   (mod p)
std::vector<Congruence> reflection_first(const Ring& ring);
std::vector<Congruence> reflection_second(const Ring& ring);

CheckReport reflection_check(std::int64_t p, int precision = 8);

/// v_p(H_{p-1}) >= 2 and v_p(H_{p-1}^(2)) >= 1.
std::vector<Congruence> wolstenholme_instances(const Ring& ring);
CheckReport wolstenholme_check(std::int64_t p, int precision = 8);

}  // namespace scv
