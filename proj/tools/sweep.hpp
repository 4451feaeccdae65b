#pragma once

// Driver layer behind the strata executable: sweep configuration, the cost
// guard, report assembly and rendering. Kept out of main.cpp so it can be
// tested without spawning processes.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "strata/identities.hpp"

namespace strata::tools {

enum class Format { json, csv, text };

Format parse_format(const std::string& name);

/// Bad flags or parameters; maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Estimated work above the ceiling; maps to exit status 3.
class CostGuardError : public std::runtime_error {
 public:
  CostGuardError(std::uint64_t estimate, std::uint64_t ceiling);
  std::uint64_t estimate() const { return estimate_; }

 private:
  std::uint64_t estimate_;
};

/// Deliberate corruption used to show the checks can fail.
struct NegativeControl {
  /// Adds 1 to the stalk polynomial at (lambda, mu) wherever the shapes fit.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> stalk_entry;
  /// Replaces psi(x) by -psi(x) for every prime p > x.
  std::optional<std::uint32_t> negated_psi;
};

struct SweepConfig {
  std::vector<std::size_t> ranks{2, 3};
  std::vector<int> sizes{0, 1, 2, 3, 4};
  std::vector<std::uint32_t> primes{2, 3};
  /// Empty selects every identity, with the cell integral held to its default range.
  std::vector<std::string> identities;
  unsigned jobs = 1;
  std::uint64_t cost_ceiling = 200'000'000;
  NegativeControl control;
};

/// Identity names accepted by --identity, in report order.
const std::vector<std::string>& identity_catalogue();

/// Throws ConfigError on out-of-range values, composite moduli or unknown identities.
void validate(const SweepConfig& config);

/// The cell-integral range run by an unrestricted sweep.
bool in_default_cell_range(std::size_t n, int d, std::uint32_t p);

/// Upper estimate of enumerated objects (lattices, cells, search nodes),
/// from closed-form counts only. Saturates at UINT64_MAX.
std::uint64_t estimate_cost(const SweepConfig& config);

struct Report {
  std::vector<IdentityVerdict> verdicts;
  std::optional<double> elapsed_seconds;

  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
};

/// Validates, applies the cost guard, and evaluates every selected check.
/// Verdicts are ordered by (n, d, p), then identity, then parameters.
Report run_verify(const SweepConfig& config);

std::string render(const Report& report, Format format);

/// A small named table: column headers plus JSON-typed cells.
struct Table {
  std::string kind;
  std::size_t n = 0;
  int d = 0;
  std::uint32_t p = 0;
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;
  /// Trailing key/value lines, e.g. totals.
  std::vector<std::pair<std::string, nlohmann::json>> summary;
};

/// kind is one of strata, orbits, fibers, kostka, stalk.
Table make_table(const std::string& kind, std::size_t n, int d, std::uint32_t p, std::uint64_t cost_ceiling);
std::string render(const Table& table, Format format);

Table chains_table(const std::vector<int>& lambda);

struct SumQuery {
  std::string identity;
  std::optional<std::vector<int>> alpha, lambda, mu, tau;
  std::optional<std::size_t> n;
  std::uint32_t p = 0;
};

/// A single verdict; precondition failures propagate as PreconditionError.
IdentityVerdict run_sum(const SumQuery& query);

}  // namespace strata::tools
