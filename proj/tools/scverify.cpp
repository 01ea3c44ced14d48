#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "scv/errors.hpp"
#include "scv/gamma.hpp"
#include "scv/identities.hpp"
#include "scv/registry.hpp"
#include "scv/report.hpp"
#include "scv/suite.hpp"

namespace {

struct RunOptions {
  std::string config;
  std::string checks = "THEOREMS,LEMMAS,IDENTITIES";
  std::string primes = "5:1000";
  std::string n = "1:200";
  std::string format = "jsonl";
  std::string out = "-";
  std::string jobs = "auto";
  int precision = 8;
  std::int64_t gamma_budget = scv::kDefaultGammaBudget;
};

void print_summary(const scv::SuiteSummary& s) {
  for (const auto& line : s.problems) std::cerr << "  " << line << '\n';
  std::cerr << s.reports << " reports: " << s.passed << " passed, " << s.failed << " failed, " << s.errors
            << " errors, " << s.skipped << " skipped (" << std::fixed << std::setprecision(2) << s.seconds
            << " s)\n";
}

int run_configured(const scv::SuiteConfig& config) {
  scv::ReportWriter writer(config.format, config.out);
  const auto summary = scv::run_suite(config, [&](const scv::CheckReport& r) { writer.write(r); });
  writer.flush();
  print_summary(summary);
  return summary.ok() ? 0 : 1;
}

int run_command(const RunOptions& o, const CLI::App& cmd) {
  scv::SuiteConfig config;
  const bool from_file = !o.config.empty();
  if (from_file) scv::apply_config_file(o.config, config);
  // Without a file every option applies; with one, only flags given explicitly.
  auto apply = [&](const char* flag, const char* key, const std::string& value) {
    if (!from_file || cmd.get_option(flag)->count() > 0) scv::apply_setting(key, value, config);
  };
  if (from_file && config.checks.empty() && config.identities.empty()) scv::apply_setting("checks", o.checks, config);
  apply("--checks", "checks", o.checks);
  apply("--primes", "primes", o.primes);
  apply("--n", "n", o.n);
  apply("--format", "format", o.format);
  apply("--out", "out", o.out);
  apply("--jobs", "jobs", o.jobs);
  apply("--precision", "precision", std::to_string(o.precision));
  apply("--gamma-budget", "gamma_budget", std::to_string(o.gamma_budget));
  return run_configured(config);
}

int identities_command(const std::string& ids, const std::string& n, const std::string& format,
                       const std::string& out) {
  scv::SuiteConfig config;
  scv::select_checks(ids, config);
  if (!config.checks.empty()) throw scv::ConfigInvalid("only identity ids are accepted here");
  scv::apply_setting("n", n, config);
  config.format = scv::parse_report_format(format);
  config.out = out;
  return run_configured(config);
}

int gamma_command(std::int64_t p, const std::string& arg, int precision, std::int64_t budget) {
  const scv::Rat x = scv::Rat::parse(arg);
  const scv::Int value = scv::gamma_p(x.numerator(), x.denominator(), p, precision, budget);
  std::cout << "Gamma_" << p << "(" << x.to_string() << ") = " << value.get_str() << " mod " << p << "^"
            << precision << '\n';
  if (!x.is_integer()) {
    const auto r = scv::gamma_reflection_check(x.numerator(), x.denominator(), p, precision, budget);
    std::cout << "reflection Gamma(x) Gamma(1-x) = " << r.lhs << ", expected " << r.rhs << ": "
              << (r.pass ? "ok" : "FAILED") << '\n';
    return r.pass ? 0 : 1;
  }
  return 0;
}

void list_checks() {
  std::cout << std::left;
  for (const auto& def : scv::check_registry())
    std::cout << std::setw(14) << scv::to_string(def.id) << std::setw(24) << def.cls.to_string() << "mod p^"
              << def.exponent << "   " << def.statement << '\n';
  for (auto id : scv::all_identity_ids())
    std::cout << std::setw(14) << scv::to_string(id) << std::setw(24) << "all n >= 1"
              << "exact    finite-n identity\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verifier for truncated hypergeometric supercongruences"};
  app.require_subcommand(1);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "verify selected checks over a prime interval");
  run_cmd->add_option("--config", run.config, "flat key=value file; flags override its values");
  run_cmd->add_option("--checks", run.checks, "comma-separated ids or groups (THEOREMS, CONJECTURES, LEMMAS, GAMMA, IDENTITIES, ALL)");
  run_cmd->add_option("--primes", run.primes, "prime interval lo:hi");
  run_cmd->add_option("--n", run.n, "identity range lo:hi");
  run_cmd->add_option("--precision", run.precision, "working p-adic precision K");
  run_cmd->add_option("--gamma-budget", run.gamma_budget, "longest Gamma_p product to form");
  run_cmd->add_option("--format", run.format, "jsonl or csv");
  run_cmd->add_option("--out", run.out, "output file, - for stdout");
  run_cmd->add_option("--jobs", run.jobs, "worker threads, or auto");

  std::string ids = "IDENTITIES", id_n = "1:200", id_format = "jsonl", id_out = "-";
  auto* id_cmd = app.add_subcommand("identities", "verify finite-n identities exactly");
  id_cmd->add_option("--ids", ids, "comma-separated identity ids");
  id_cmd->add_option("--n", id_n, "range lo:hi");
  id_cmd->add_option("--format", id_format, "jsonl or csv");
  id_cmd->add_option("--out", id_out, "output file, - for stdout");

  std::int64_t g_prime = 0;
  std::string g_arg;
  int g_precision = 1;
  std::int64_t g_budget = scv::kDefaultGammaBudget;
  auto* gamma_cmd = app.add_subcommand("gamma", "evaluate Morita's p-adic Gamma at a rational");
  gamma_cmd->add_option("--prime", g_prime, "odd prime")->required();
  gamma_cmd->add_option("--arg", g_arg, "argument a/b")->required();
  gamma_cmd->add_option("--precision", g_precision, "result modulo p^precision");
  gamma_cmd->add_option("--budget", g_budget, "longest product to form");

  auto* list_cmd = app.add_subcommand("list-checks", "print the check registry");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) return run_command(run, *run_cmd);
    if (*id_cmd) return identities_command(ids, id_n, id_format, id_out);
    if (*gamma_cmd) return gamma_command(g_prime, g_arg, g_precision, g_budget);
    if (*list_cmd) {
      list_checks();
      return 0;
    }
  } catch (const scv::Error& e) {
    std::cerr << "error [" << scv::to_string(e.kind()) << "]: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
