#include "sweep.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>

#include "strata/serialize.hpp"

namespace strata::tools {

using nlohmann::json;

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
constexpr int kMaxSize = 20;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::int64_t exp) {
  std::uint64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

bool selected(const SweepConfig& c, const std::string& name) {
  return c.identities.empty() || std::find(c.identities.begin(), c.identities.end(), name) != c.identities.end();
}

bool cells_wanted(const SweepConfig& c, std::size_t n, int d, std::uint32_t p) {
  if (c.identities.empty()) return in_default_cell_range(n, d, p);
  return selected(c, identity_names::kTheorem1Cells);
}

// Objects touched by one pass over the strata of the given shapes.
std::uint64_t strata_cost(const std::vector<Composition>& shapes, std::uint32_t p) {
  std::uint64_t total = 0;
  for (const auto& a : shapes) total = sat_add(total, sat_pow(p, weight_top(a)));
  return total;
}

std::vector<Composition> as_compositions(const std::vector<Partition>& ps) {
  std::vector<Composition> out;
  for (const auto& l : ps) out.push_back(l.as_composition());
  return out;
}

// Search nodes of a depth-d descent, each expanding (p^n - 1)/(p - 1) candidates.
std::uint64_t descent_cost(std::size_t n, int d, std::uint32_t p) {
  const std::uint64_t branch = projective_count(n, p);
  std::uint64_t total = 0, level = 1;
  for (int k = 0; k < d; ++k) {
    level = sat_mul(level, branch);
    total = sat_add(total, level);
  }
  return total;
}

std::uint64_t flags_cost(const std::vector<Partition>& ps, std::uint32_t p, std::size_t n, int d) {
  std::uint64_t total = 0;
  const std::uint64_t per_flag = sat_mul(static_cast<std::uint64_t>(std::max(d, 1)), projective_count(n, p));
  for (const auto& l : ps)
    total = sat_add(total, sat_mul(sat_mul(multinomial(l), sat_pow(p, weight_top(l))), per_flag));
  return total;
}

std::uint64_t census_cost(std::size_t n, int d, std::uint32_t p) {
  std::uint64_t total = strata_cost(compositions_of(d, n), p);
  for (int k = 0; k < d; ++k)
    total = sat_add(total, sat_mul(strata_cost(compositions_of(k, n), p), projective_count(n, p)));
  return total;
}

std::string list_string(const std::vector<int>& v) { return Composition(v).to_string(); }

std::string value_string(const std::variant<CycInt, ScaledCyc>& value) {
  return std::visit([](const auto& x) { return x.to_string(); }, value);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + cell_text(v[i]);
    return s + ")";
  }
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  return v.dump();
}

void guard(std::uint64_t estimate, std::uint64_t ceiling) {
  if (estimate > ceiling) throw CostGuardError(estimate, ceiling);
}

}  // namespace

CostGuardError::CostGuardError(std::uint64_t estimate, std::uint64_t ceiling)
    : std::runtime_error("estimated work " + std::to_string(estimate) + " exceeds the cost ceiling " +
                         std::to_string(ceiling)),
      estimate_(estimate) {}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw ConfigError("unknown format '" + name + "' (expected json, csv or text)");
}

const std::vector<std::string>& identity_catalogue() {
  static const std::vector<std::string> names{
      identity_names::kTheorem1Stratum, identity_names::kTheorem1Cells, identity_names::kTheorem2Cell,
      identity_names::kTheorem2Total,   identity_names::kFiber,         identity_names::kDecomposition,
      identity_names::kStratumOrbits,   identity_names::kCensus};
  return names;
}

void validate(const SweepConfig& c) {
  if (c.ranks.empty() || c.sizes.empty() || c.primes.empty()) throw ConfigError("empty sweep range");
  for (auto n : c.ranks)
    if (n < 1) throw ConfigError("n must be at least 1");
  for (int d : c.sizes)
    if (d < 0 || d > kMaxSize) throw ConfigError("d must lie in [0, " + std::to_string(kMaxSize) + "]");
  for (auto p : c.primes) {
    if (!is_prime(p)) throw ConfigError(std::to_string(p) + " is not prime");
    if (p > (1u << 16)) throw ConfigError("prime " + std::to_string(p) + " is too large");
  }
  for (const auto& id : c.identities) {
    const auto& cat = identity_catalogue();
    if (std::find(cat.begin(), cat.end(), id) == cat.end()) throw ConfigError("unknown identity '" + id + "'");
  }
  if (c.jobs < 1) throw ConfigError("jobs must be at least 1");
}

bool in_default_cell_range(std::size_t n, int d, std::uint32_t p) {
  if (n == 2) return d <= 4;
  if (n == 3) return (p == 3 && d <= 2) || (p == 2 && d <= 4);
  return false;
}

std::uint64_t estimate_cost(const SweepConfig& c) {
  std::uint64_t total = 0;
  for (auto n : c.ranks)
    for (int d : c.sizes)
      for (auto p : c.primes) {
        const auto parts = partitions_of(d, n);
        const std::uint64_t strata = strata_cost(as_compositions(parts), p);
        const std::uint64_t flags = flags_cost(parts, p, n, d);
        if (selected(c, identity_names::kTheorem1Stratum)) total = sat_add(total, strata);
        if (cells_wanted(c, n, d, p)) {
          const auto cells = sat_pow(p, static_cast<std::int64_t>(d) * static_cast<std::int64_t>(n * (n - 1) / 2));
          total = sat_add(total, sat_mul(compositions_of(d, n).size(), cells));
        }
        if (selected(c, identity_names::kTheorem2Cell)) total = sat_add(total, flags);
        if (selected(c, identity_names::kTheorem2Total)) total = sat_add(total, flags);
        if (selected(c, identity_names::kFiber))
          total = sat_add(total, sat_mul(parts.size(), descent_cost(n, d, p)));
        if (selected(c, identity_names::kDecomposition)) total = sat_add(total, sat_add(flags, strata));
        if (selected(c, identity_names::kStratumOrbits)) total = sat_add(total, strata);
        if (selected(c, identity_names::kCensus)) total = sat_add(total, census_cost(n, d, p));
      }
  return total;
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(verdicts.begin(), verdicts.end(), [](const auto& v) { return !v.ok; }));
}

namespace {

void apply_control(IdentityEngine& engine, const NegativeControl& control) {
  if (control.stalk_entry) {
    const auto& [l, m] = *control.stalk_entry;
    const auto n = engine.rank();
    auto sum = [](const std::vector<int>& v) {
      int s = 0;
      for (int x : v) s += x;
      return s;
    };
    if (l.size() <= n && m.size() <= n && sum(l) == engine.size() && sum(m) == engine.size()) {
      const Partition lambda(l, n), mu(m, n);
      engine.stalk_table().set(lambda, mu, engine.stalk_table().at(lambda, mu) + QPoly{1});
    }
  }
  if (control.negated_psi && *control.negated_psi < engine.prime()) engine.character().negate(*control.negated_psi);
}

template <class V>
void append(std::vector<IdentityVerdict>& out, V&& more) {
  for (auto& v : more) out.push_back(std::move(v));
}

}  // namespace

Report run_verify(const SweepConfig& c) {
  validate(c);
  guard(estimate_cost(c), c.cost_ceiling);
  const auto start = std::chrono::steady_clock::now();
  Report report;
  auto& out = report.verdicts;
  for (auto n : c.ranks)
    for (int d : c.sizes)
      for (auto p : c.primes) {
        IdentityEngine engine(n, d, p, c.jobs);
        apply_control(engine, c.control);
        const auto parts = partitions_of(d, n);
        if (selected(c, identity_names::kTheorem1Stratum))
          for (const auto& a : parts) append(out, engine.check_theorem1_stratum(a));
        if (cells_wanted(c, n, d, p))
          for (const auto& a : compositions_of(d, n)) append(out, engine.check_theorem1_cells(a));
        if (selected(c, identity_names::kTheorem2Cell))
          for (const auto& l : parts) append(out, engine.check_theorem2_cells(l));
        if (selected(c, identity_names::kTheorem2Total))
          for (const auto& l : parts) out.push_back(engine.check_theorem2_total(l));
        if (selected(c, identity_names::kFiber))
          for (const auto& m : parts) out.push_back(engine.fiber_identity_check(m));
        if (selected(c, identity_names::kDecomposition))
          for (const auto& a : parts) out.push_back(engine.decomposition_consistency(a));
        if (selected(c, identity_names::kStratumOrbits))
          for (const auto& l : parts) out.push_back(engine.check_stratum_orbits(l));
        if (selected(c, identity_names::kCensus)) out.push_back(engine.check_census());
      }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string render(const Report& report, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      json verdicts = json::array();
      for (const auto& v : report.verdicts) verdicts.push_back(to_json(v));
      json summary{{"checks", report.verdicts.size()}, {"failures", report.failures()}};
      if (report.elapsed_seconds) summary["elapsed"] = *report.elapsed_seconds;
      os << json{{"verdicts", verdicts}, {"summary", summary}}.dump(2) << '\n';
      break;
    }
    case Format::csv: {
      os << "identity,n,d,p,alpha,lambda,mu,tau,value,expected,ok\n";
      for (const auto& v : report.verdicts) {
        auto opt = [](const std::optional<std::vector<int>>& x) { return x ? csv_field(list_string(*x)) : std::string(); };
        os << v.identity << ',' << v.n << ',' << v.d << ',' << v.p << ',' << opt(v.alpha) << ',' << opt(v.lambda) << ','
           << opt(v.mu) << ',' << opt(v.tau) << ',' << csv_field(value_string(v.value)) << ','
           << csv_field(v.expected) << ',' << (v.ok ? "true" : "false") << '\n';
      }
      break;
    }
    case Format::text: {
      for (const auto& v : report.verdicts) {
        os << (v.ok ? "ok   " : "FAIL ") << v.identity << " n=" << v.n << " d=" << v.d << " p=" << v.p;
        if (v.alpha) os << " alpha=" << list_string(*v.alpha);
        if (v.lambda) os << " lambda=" << list_string(*v.lambda);
        if (v.mu) os << " mu=" << list_string(*v.mu);
        if (v.tau) os << " tau=" << list_string(*v.tau);
        os << " value=" << value_string(v.value) << " expected=" << v.expected << '\n';
      }
      os << "checks " << report.verdicts.size() << ", failures " << report.failures();
      if (report.elapsed_seconds) os << ", elapsed " << std::fixed << std::setprecision(3) << *report.elapsed_seconds << "s";
      os << '\n';
      break;
    }
  }
  return os.str();
}

Table make_table(const std::string& kind, std::size_t n, int d, std::uint32_t p, std::uint64_t cost_ceiling) {
  SweepConfig shape;
  shape.ranks = {n};
  shape.sizes = {d};
  shape.primes = {p};
  validate(shape);
  Table t{kind, n, d, p, {}, {}, {}};
  if (kind == "strata") {
    guard(strata_cost(compositions_of(d, n), p), cost_ceiling);
    t.columns = {"alpha", "dimension", "count"};
    std::int64_t total = 0;
    for (const auto& a : compositions_of(d, n)) {
      const StratumEnumerator e(a, p);
      std::int64_t count = 0;
      e.for_each([&](const LatticeHNF&) { ++count; });
      total += count;
      t.rows.push_back({a.parts(), e.dimension(), count});
    }
    t.summary = {{"total", total}};
  } else if (kind == "orbits") {
    guard(census_cost(n, d, p), cost_ceiling);
    t.columns = {"mu", "count"};
    std::map<Partition, std::int64_t, std::greater<>> counts;
    for (const auto& l : partitions_of(d, n)) counts[l] = 0;
    const auto all = enumerate_all_lattices(n, d, p);
    for (const auto& l : all) ++counts[cartan_type(l)];
    for (const auto& [mu, c] : counts) t.rows.push_back({mu.parts(), c});
    t.summary = {{"total", static_cast<std::int64_t>(all.size())}};
  } else if (kind == "fibers") {
    guard(sat_mul(partitions_of(d, n).size(), descent_cost(n, d, p)), cost_ceiling);
    t.columns = {"mu", "flags"};
    for (const auto& mu : partitions_of(d, n))
      t.rows.push_back({mu.parts(), count_fiber_flags(LatticeHNF::diagonal(mu.as_composition(), p))});
  } else if (kind == "kostka" || kind == "stalk") {
    t.columns = {"lambda", "mu", kind == "kostka" ? "K(q)" : "stalk(q)"};
    const auto parts = partitions_of(d, n);
    for (const auto& l : parts)
      for (const auto& m : parts) {
        const QPoly f = kind == "kostka" ? kostka_foulkes(l, m) : stalk_poly(l, m);
        t.rows.push_back({l.parts(), m.parts(), f.to_string()});
      }
  } else {
    throw ConfigError("unknown table kind '" + kind + "' (expected strata, orbits, fibers, kostka or stalk)");
  }
  return t;
}

std::string render(const Table& t, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      json rows = json::array();
      for (const auto& r : t.rows) {
        json row = json::object();
        for (std::size_t i = 0; i < t.columns.size(); ++i) row[t.columns[i]] = r[i];
        rows.push_back(row);
      }
      json j{{"kind", t.kind}, {"n", t.n}, {"d", t.d}, {"rows", rows}};
      if (t.p != 0) j["p"] = t.p;
      json summary = json::object();
      for (const auto& [k, v] : t.summary) summary[k] = v;
      if (!t.summary.empty()) j["summary"] = summary;
      os << j.dump(2) << '\n';
      break;
    }
    case Format::csv: {
      for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_field(t.columns[i]);
      os << '\n';
      for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(cell_text(r[i]));
        os << '\n';
      }
      break;
    }
    case Format::text: {
      std::vector<std::size_t> width(t.columns.size());
      for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
      for (const auto& r : t.rows)
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], cell_text(r[i]).size());
      auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          s += cells[i];
          if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size() + 2, ' ');
        }
        os << s << '\n';
      };
      line(t.columns);
      for (const auto& r : t.rows) {
        std::vector<std::string> cells;
        for (const auto& v : r) cells.push_back(cell_text(v));
        line(cells);
      }
      for (const auto& [k, v] : t.summary) os << k << ' ' << cell_text(v) << '\n';
      break;
    }
  }
  return os.str();
}

Table chains_table(const std::vector<int>& lambda_parts) {
  const Partition lambda(lambda_parts);
  if (lambda.total() > kMaxSize) throw ConfigError("partition too large");
  Table t{"chains", lambda.length(), lambda.total(), 0, {"tau", "decreasing", "tableau"}, {}, {}};
  std::int64_t decreasing = 0, count = 0;
  for (const auto& tau : enumerate_chain_types(lambda)) {
    const bool dec = chain_is_decreasing(tau);
    decreasing += dec ? 1 : 0;
    ++count;
    std::string filling;
    for (const auto& row : chain_to_tableau(tau).rows) {
      if (!filling.empty()) filling += " / ";
      for (std::size_t i = 0; i < row.size(); ++i) filling += (i ? " " : "") + std::to_string(row[i]);
    }
    t.rows.push_back({tau.rows(), dec, filling});
  }
  t.summary = {{"chains", count},
               {"decreasing", decreasing},
               {"hook_count", static_cast<std::int64_t>(hook_count(lambda))}};
  return t;
}

namespace {

std::size_t rank_of(const SumQuery& q, std::initializer_list<const std::optional<std::vector<int>>*> parts) {
  if (q.n) return *q.n;
  std::size_t n = 0;
  for (const auto* x : parts)
    if (*x) n = std::max(n, (*x)->size());
  return n;
}

const std::vector<int>& need(const std::optional<std::vector<int>>& x, const char* what) {
  if (!x) throw ConfigError(std::string("missing --") + what);
  return *x;
}

IdentityVerdict pick(std::vector<IdentityVerdict> vs, const char* identity, const std::optional<std::vector<int>>& lambda,
                     const std::optional<std::vector<int>>& tau) {
  for (auto& v : vs)
    if (v.identity == identity && (!lambda || v.lambda == lambda) && (!tau || v.tau == tau)) return v;
  throw PreconditionError("no matching check for the given parameters");
}

}  // namespace

IdentityVerdict run_sum(const SumQuery& q) {
  if (!is_prime(q.p)) throw ConfigError(std::to_string(q.p) + " is not prime");
  const std::string& id = q.identity;
  if (id == "thm1" || id == identity_names::kTheorem1Stratum) {
    const std::size_t n = rank_of(q, {&q.alpha, &q.lambda});
    const Partition alpha(need(q.alpha, "alpha"), n), lambda(need(q.lambda, "lambda"), n);
    if (alpha.total() != lambda.total()) throw PreconditionError("size mismatch: |alpha| differs from |lambda|");
    IdentityEngine e(n, lambda.total(), q.p);
    return pick(e.check_theorem1_stratum(alpha), identity_names::kTheorem1Stratum, lambda.parts(), std::nullopt);
  }
  if (id == identity_names::kTheorem1Cells) {
    const Composition alpha(need(q.alpha, "alpha"));
    const Partition lambda(need(q.lambda, "lambda"), alpha.length());
    if (alpha.total() != lambda.total()) throw PreconditionError("size mismatch: |alpha| differs from |lambda|");
    IdentityEngine e(alpha.length(), alpha.total(), q.p);
    return pick(e.check_theorem1_cells(alpha), identity_names::kTheorem1Cells, lambda.parts(), std::nullopt);
  }
  if (id == identity_names::kTheorem2Cell) {
    const auto& rows = need(q.tau, "tau");
    std::size_t n = q.n.value_or(0);
    for (int r : rows) n = std::max(n, static_cast<std::size_t>(std::max(r, 0)));
    const ChainType tau(rows, n);
    const Composition content = tau.content();
    if (!content.is_weakly_decreasing())
      throw PreconditionError("chain type " + tau.to_string() + " does not end in a partition");
    IdentityEngine e(n, tau.length(), q.p);
    return pick(e.check_theorem2_cells(Partition(content)), identity_names::kTheorem2Cell, std::nullopt, rows);
  }
  if (id == identity_names::kTheorem2Total || id == identity_names::kDecomposition) {
    const std::size_t n = rank_of(q, {&q.alpha});
    const Partition alpha(need(q.alpha, "alpha"), n);
    IdentityEngine e(n, alpha.total(), q.p);
    return id == identity_names::kDecomposition ? e.decomposition_consistency(alpha) : e.check_theorem2_total(alpha);
  }
  if (id == identity_names::kFiber) {
    const std::size_t n = rank_of(q, {&q.mu});
    const Partition mu(need(q.mu, "mu"), n);
    return IdentityEngine(n, mu.total(), q.p).fiber_identity_check(mu);
  }
  throw ConfigError("unknown identity '" + id + "' for sum");
}

}  // namespace strata::tools
