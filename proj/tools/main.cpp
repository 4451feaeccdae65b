#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "sweep.hpp"

namespace {

using namespace strata;
using namespace strata::tools;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCost = 3;

std::vector<int> int_list(const std::string& text) {
  try {
    return parse_int_list(text);
  } catch (const PreconditionError& e) {
    throw ConfigError(e.what());
  }
}

std::vector<std::uint32_t> prime_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  for (int x : int_list(text)) {
    if (x < 0) throw ConfigError("primes must be positive");
    out.push_back(static_cast<std::uint32_t>(x));
  }
  return out;
}

void emit(const std::string& body, const std::string& path) {
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path);
  f << body;
}

// Range flags: a single value wins over the corresponding maximum.
template <class T>
std::vector<T> range(std::optional<int> single, int lo, int max) {
  std::vector<T> out;
  if (single) {
    out.push_back(static_cast<T>(*single));
    return out;
  }
  for (int v = lo; v <= max; ++v) out.push_back(static_cast<T>(v));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of lattice point-count and character-sum identities."};
  app.require_subcommand(1);

  std::string format_name = "json";
  std::string out_path;
  std::uint64_t ceiling = SweepConfig{}.cost_ceiling;

  // verify
  auto* verify = app.add_subcommand("verify", "Run identity checks over a parameter sweep");
  std::optional<int> n_single, d_single;
  int max_n = 3, max_d = 4;
  std::string primes_text = "2,3";
  std::vector<std::string> identities;
  unsigned jobs = 1;
  bool timing = false;
  std::string corrupt_stalk;
  std::optional<int> negate_psi;
  verify->add_option("--n", n_single, "Single rank n")->envname("STRATA_N");
  verify->add_option("--d", d_single, "Single colength d")->envname("STRATA_D");
  verify->add_option("--max-n", max_n, "Ranks 2..max-n when --n is absent")->envname("STRATA_MAX_N");
  verify->add_option("--max-d", max_d, "Colengths 0..max-d when --d is absent")->envname("STRATA_MAX_D");
  verify->add_option("--primes", primes_text, "Comma-separated primes")->envname("STRATA_PRIMES");
  verify->add_option("--identity", identities, "Restrict to an identity (repeatable)")
      ->envname("STRATA_IDENTITY")
      ->delimiter(',');
  verify->add_option("--jobs", jobs, "Worker threads per enumeration")->envname("STRATA_JOBS");
  verify->add_option("--format", format_name, "json, csv or text")->envname("STRATA_FORMAT");
  verify->add_option("--out", out_path, "Write the report here instead of stdout")->envname("STRATA_OUT");
  verify->add_option("--cost-ceiling", ceiling, "Largest permitted work estimate")->envname("STRATA_COST_CEILING");
  verify->add_flag("--timing", timing, "Include elapsed time in the summary");
  verify->add_option("--corrupt-stalk", corrupt_stalk, "lambda;mu entry to perturb")->group("");
  verify->add_option("--negate-psi", negate_psi, "character value to negate")->group("");

  // table
  auto* table = app.add_subcommand("table", "Print a census or polynomial table");
  std::string kind;
  int t_n = 2, t_d = 2, t_p = 2;
  table->add_option("kind", kind, "strata, orbits, fibers, kostka or stalk")->required();
  table->add_option("--n", t_n, "Rank")->envname("STRATA_N");
  table->add_option("--d", t_d, "Colength")->envname("STRATA_D");
  table->add_option("--p", t_p, "Prime")->envname("STRATA_P");
  table->add_option("--format", format_name, "json, csv or text")->envname("STRATA_FORMAT");
  table->add_option("--out", out_path, "Output file")->envname("STRATA_OUT");
  table->add_option("--cost-ceiling", ceiling, "Largest permitted work estimate")->envname("STRATA_COST_CEILING");

  // chains
  auto* chains = app.add_subcommand("chains", "List chain types of a partition and their tableaux");
  std::string c_lambda;
  chains->add_option("--lambda", c_lambda, "Partition, e.g. 2,1")->required();
  chains->add_option("--format", format_name, "json, csv or text")->envname("STRATA_FORMAT");
  chains->add_option("--out", out_path, "Output file")->envname("STRATA_OUT");

  // sum
  auto* sum = app.add_subcommand("sum", "Evaluate a single identity");
  std::string s_identity, s_alpha, s_lambda, s_mu, s_tau;
  std::optional<int> s_n;
  int s_p = 0;
  sum->add_option("identity", s_identity, "thm1, thm1-cells, thm2-cell, thm2-total, fiber or decomposition")
      ->required();
  sum->add_option("--alpha", s_alpha, "Iwasawa type");
  sum->add_option("--lambda", s_lambda, "Orbit type");
  sum->add_option("--mu", s_mu, "Fiber point type");
  sum->add_option("--tau", s_tau, "Chain type as 1-based rows");
  sum->add_option("--n", s_n, "Rank (defaults to the longest argument)");
  sum->add_option("--p", s_p, "Prime")->required()->envname("STRATA_P");
  sum->add_option("--format", format_name, "json, csv or text")->envname("STRATA_FORMAT");
  sum->add_option("--out", out_path, "Output file")->envname("STRATA_OUT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const Format format = parse_format(format_name);
    if (*verify) {
      SweepConfig config;
      config.ranks = range<std::size_t>(n_single, 2, max_n);
      config.sizes = range<int>(d_single, 0, max_d);
      config.primes = prime_list(primes_text);
      config.identities = identities;
      config.jobs = jobs;
      config.cost_ceiling = ceiling;
      if (n_single && *n_single < 1) throw ConfigError("n must be at least 1");
      if (!corrupt_stalk.empty()) {
        const auto semi = corrupt_stalk.find(';');
        if (semi == std::string::npos) throw ConfigError("--corrupt-stalk expects lambda;mu");
        config.control.stalk_entry = {int_list(corrupt_stalk.substr(0, semi)), int_list(corrupt_stalk.substr(semi + 1))};
      }
      if (negate_psi) {
        if (*negate_psi < 0) throw ConfigError("--negate-psi expects a residue");
        config.control.negated_psi = static_cast<std::uint32_t>(*negate_psi);
      }
      Report report = run_verify(config);
      if (!timing) report.elapsed_seconds.reset();
      emit(render(report, format), out_path);
      return report.ok() ? 0 : kExitFailure;
    }
    if (*table) {
      if (t_n < 1 || t_d < 0 || t_p < 2) throw ConfigError("table needs n >= 1, d >= 0 and a prime p");
      emit(render(make_table(kind, static_cast<std::size_t>(t_n), t_d, static_cast<std::uint32_t>(t_p), ceiling), format),
           out_path);
      return 0;
    }
    if (*chains) {
      emit(render(chains_table(int_list(c_lambda)), format), out_path);
      return 0;
    }
    if (*sum) {
      SumQuery q;
      q.identity = s_identity;
      if (!s_alpha.empty()) q.alpha = int_list(s_alpha);
      if (!s_lambda.empty()) q.lambda = int_list(s_lambda);
      if (!s_mu.empty()) q.mu = int_list(s_mu);
      if (!s_tau.empty()) q.tau = int_list(s_tau);
      if (s_n) {
        if (*s_n < 1) throw ConfigError("n must be at least 1");
        q.n = static_cast<std::size_t>(*s_n);
      }
      if (s_p < 2) throw ConfigError(std::to_string(s_p) + " is not prime");
      q.p = static_cast<std::uint32_t>(s_p);
      Report single;
      single.verdicts.push_back(run_sum(q));
      emit(render(single, format), out_path);
      return single.ok() ? 0 : kExitFailure;
    }
  } catch (const CostGuardError& e) {
    std::cerr << "strata: " << e.what() << '\n';
    return kExitCost;
  } catch (const ConfigError& e) {
    std::cerr << "strata: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "strata: precondition violated: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
