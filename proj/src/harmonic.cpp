#include "scv/harmonic.hpp"

namespace scv {

std::string_view to_string(HarmonicFamily f) {
  switch (f) {
    case HarmonicFamily::H: return "H";
    case HarmonicFamily::S: return "S";
    case HarmonicFamily::T: return "T";
  }
  return "?";
}

Rat harmonic_value(HarmonicFamily f, long n, int r) { return harmonic_sum(f, n, r, ExactField{}); }

PadicNum harmonic_value(HarmonicFamily f, long n, int r, const Ring& ring) {
  return harmonic_sum(f, n, r, ring);
}

namespace {

void require_at_least_five(std::int64_t p) {
  if (p < 5) throw InapplicablePrime("p = " + std::to_string(p) + " (need p >= 5)");
}

}  // namespace

std::vector<Congruence> reflection_first(const Ring& ring) {
  const long p = ring.prime();
  require_at_least_five(p);
  HarmonicTable h1(HarmonicFamily::H, 1, p - 1, ring);
  HarmonicTable h2(HarmonicFamily::H, 2, p - 1, ring);
  const PadicNum pp = ring.prime_power_element(1);
  std::vector<Congruence> out;
  for (long k = 1; k <= p - 1; ++k)
    out.push_back({"k=" + std::to_string(k), h1[p - 1 - k] - h1[k], pp * h2[k], 2});
  return out;
}

std::vector<Congruence> reflection_second(const Ring& ring) {
  const long p = ring.prime();
  require_at_least_five(p);
  HarmonicTable h2(HarmonicFamily::H, 2, p - 1, ring);
  std::vector<Congruence> out;
  for (long k = 1; k <= p - 1; ++k)
    out.push_back({"k=" + std::to_string(k), h2[p - 1 - k] + h2[k], ring.zero(), 1});
  return out;
}

CheckReport reflection_check(std::int64_t p, int precision) {
  require_at_least_five(p);
  return timed_check([&] {
    const Ring ring(p, precision);
    auto all = reflection_first(ring);
    auto second = reflection_second(ring);
    all.insert(all.end(), second.begin(), second.end());
    return summarize(CheckId::REFLECTION, p, all, precision);
  });
}

std::vector<Congruence> wolstenholme_instances(const Ring& ring) {
  const long p = ring.prime();
  require_at_least_five(p);
  return {
      {"H_{p-1}", harmonic_value(HarmonicFamily::H, p - 1, 1, ring), ring.zero(), 2},
      {"H_{p-1}^(2)", harmonic_value(HarmonicFamily::H, p - 1, 2, ring), ring.zero(), 1},
  };
}

CheckReport wolstenholme_check(std::int64_t p, int precision) {
  require_at_least_five(p);
  return timed_check([&] {
    const Ring ring(p, precision);
    return summarize(CheckId::WOLSTENHOLME, p, wolstenholme_instances(ring), precision);
  });
}

}  // namespace scv
