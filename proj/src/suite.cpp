#include "scv/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <fstream>
#include <mutex>
#include <thread>
#include <tuple>

#include "scv/errors.hpp"
#include "scv/primes.hpp"

namespace scv {

namespace {

void add_unique(std::vector<CheckId>& v, CheckId id) {
  if (std::find(v.begin(), v.end(), id) == v.end()) v.push_back(id);
}

void add_unique(std::vector<IdentityId>& v, IdentityId id) {
  if (std::find(v.begin(), v.end(), id) == v.end()) v.push_back(id);
}

std::vector<CheckId> lemma_group() {
  std::vector<CheckId> out;
  for (const auto& def : check_registry()) {
    switch (def.id) {
      case CheckId::THM1:
      case CheckId::THM2:
      case CheckId::CONJ1:
      case CheckId::CONJ2:
      case CheckId::VANHAMME_D2:
      case CheckId::LONG_RAMA:
        break;
      default:
        out.push_back(def.id);
    }
  }
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

long parse_long(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw ConfigInvalid("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw ConfigInvalid("not an integer: '" + s + "'");
  return v;
}

CheckReport error_report(CheckId id, std::int64_t p, const Error& e) {
  CheckReport r;
  r.prime = p;
  r.check = id;
  r.pass = false;
  r.error = e.what();
  r.detail = e.what();
  return r;
}

}  // namespace

void select_checks(std::string_view list, SuiteConfig& config) {
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto comma = list.find(',', start);
    const std::string token = trim(list.substr(start, comma == std::string_view::npos ? list.npos : comma - start));
    start = comma == std::string_view::npos ? list.size() + 1 : comma + 1;
    if (token.empty()) continue;
    if (token == "ALL") {
      for (const auto& def : check_registry()) add_unique(config.checks, def.id);
      for (auto id : all_identity_ids()) add_unique(config.identities, id);
    } else if (token == "THEOREMS") {
      add_unique(config.checks, CheckId::THM1);
      add_unique(config.checks, CheckId::THM2);
    } else if (token == "CONJECTURES") {
      add_unique(config.checks, CheckId::CONJ1);
      add_unique(config.checks, CheckId::CONJ2);
    } else if (token == "GAMMA") {
      add_unique(config.checks, CheckId::VANHAMME_D2);
      add_unique(config.checks, CheckId::LONG_RAMA);
    } else if (token == "LEMMAS") {
      for (auto id : lemma_group()) add_unique(config.checks, id);
    } else if (token == "IDENTITIES") {
      for (auto id : all_identity_ids()) add_unique(config.identities, id);
    } else if (auto ident = parse_identity_id(token)) {
      add_unique(config.identities, *ident);
    } else if (auto id = parse_check_id(token); id && find_check(*id) != nullptr) {
      add_unique(config.checks, *id);
    } else {
      throw ConfigInvalid("unknown check '" + token + "'");
    }
  }
}

std::pair<long, long> parse_range(std::string_view text) {
  const std::string s = trim(text);
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    const long v = parse_long(s);
    return {v, v};
  }
  return {parse_long(trim(s.substr(0, colon))), parse_long(trim(s.substr(colon + 1)))};
}

unsigned parse_jobs(std::string_view text) {
  const std::string s = trim(text);
  if (s == "auto") return 0;
  const long v = parse_long(s);
  if (v < 1) throw ConfigInvalid("jobs must be 'auto' or positive");
  return static_cast<unsigned>(v);
}

void apply_setting(std::string_view key, std::string_view value, SuiteConfig& config) {
  const std::string k = trim(key);
  const std::string v = trim(value);
  if (k == "primes") {
    std::tie(config.prime_lo, config.prime_hi) = parse_range(v);
  } else if (k == "checks") {
    config.checks.clear();
    config.identities.clear();
    select_checks(v, config);
  } else if (k == "precision") {
    config.params.precision = static_cast<int>(parse_long(v));
  } else if (k == "n") {
    std::tie(config.n_lo, config.n_hi) = parse_range(v);
  } else if (k == "gamma_budget") {
    config.params.gamma_budget = parse_long(v);
  } else if (k == "format") {
    config.format = parse_report_format(v);
  } else if (k == "out") {
    config.out = v;
  } else if (k == "jobs") {
    config.jobs = parse_jobs(v);
  } else {
    throw ConfigInvalid("unknown config key '" + k + "'");
  }
}

void apply_config_file(const std::string& path, SuiteConfig& config) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigInvalid(path + ":" + std::to_string(lineno) + ": expected key=value");
    apply_setting(t.substr(0, eq), t.substr(eq + 1), config);
  }
}

void validate(const SuiteConfig& config) {
  if (config.prime_lo < 0 || config.prime_hi < 0) throw ConfigInvalid("prime bounds must be non-negative");
  if (config.prime_hi > 100'000'000) throw ConfigInvalid("prime interval too large");
  if (config.n_lo < 1) throw ConfigInvalid("identity range must start at n >= 1");
  int max_exponent = 0;
  for (auto id : config.checks) {
    const CheckDef* def = find_check(id);
    if (def == nullptr) throw ConfigInvalid(std::string(to_string(id)) + " is not a prime-indexed check");
    max_exponent = std::max(max_exponent, def->exponent);
  }
  if (!config.checks.empty() && config.params.precision < max_exponent + 2)
    throw ConfigInvalid("precision " + std::to_string(config.params.precision) + " is below " +
                        std::to_string(max_exponent + 2) + " (largest exponent + 2)");
  if (config.params.gamma_budget < 1) throw ConfigInvalid("gamma budget must be positive");
}

SuiteSummary run_suite(const SuiteConfig& config, const std::function<void(const CheckReport&)>& sink) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  SuiteSummary summary;

  std::vector<std::int64_t> primes;
  if (!config.checks.empty())
    for (auto p : primes_in(std::max<std::int64_t>(config.prime_lo, 5), config.prime_hi)) primes.push_back(p);

  const std::size_t tasks = primes.size() + config.identities.size();
  std::vector<std::vector<CheckReport>> results(tasks);
  std::vector<std::size_t> skipped(tasks, 0);
  std::vector<char> done(tasks, 0);
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto run_task = [&](std::size_t t) {
    std::vector<CheckReport> out;
    std::size_t skip = 0;
    if (t < primes.size()) {
      const std::int64_t p = primes[t];
      PrimeContext ctx(p, config.params);
      for (auto id : config.checks) {
        const CheckDef& def = *find_check(id);
        if (!applicable(def, p, config.params)) {
          ++skip;
          continue;
        }
        try {
          out.push_back(run_check(def, ctx));
        } catch (const Error& e) {
          out.push_back(error_report(id, p, e));
        }
      }
    } else {
      const IdentityId id = config.identities[t - primes.size()];
      try {
        out.push_back(identity_verify(id, config.n_lo, config.n_hi, config.params.precision));
      } catch (const Error& e) {
        out.push_back(error_report(check_id(id), 0, e));
      }
    }
    std::lock_guard lock(mutex);
    results[t] = std::move(out);
    skipped[t] = skip;
    done[t] = 1;
    ready.notify_all();
  };

  unsigned jobs = config.jobs != 0 ? config.jobs : std::max(1U, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(tasks, 1)));
  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < jobs; ++w)
    workers.emplace_back([&] {
      for (std::size_t t = next++; t < tasks; t = next++) run_task(t);
    });

  // Single collector: emits each task's reports as soon as every earlier task is in.
  for (std::size_t t = 0; t < tasks; ++t) {
    std::vector<CheckReport> batch;
    {
      std::unique_lock lock(mutex);
      ready.wait(lock, [&] { return done[t] != 0; });
      batch = std::move(results[t]);
      summary.skipped += skipped[t];
    }
    for (const auto& r : batch) {
      ++summary.reports;
      if (!r.error.empty()) {
        ++summary.errors;
        summary.problems.push_back(std::string(to_string(r.check)) + " p=" + std::to_string(r.prime) + ": " + r.error);
      } else if (r.pass) {
        ++summary.passed;
      } else {
        ++summary.failed;
        summary.problems.push_back(std::string(to_string(r.check)) + " p=" + std::to_string(r.prime) + " failed at " +
                                   r.detail + " (diff valuation " + std::to_string(r.diff_valuation) + " < " +
                                   std::to_string(r.exponent) + ")");
      }
      sink(r);
    }
  }
  workers.clear();
  summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace scv
