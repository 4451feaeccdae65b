#include "strata/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "strata/field.hpp"

namespace strata {

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

void require_nonnegative(const std::vector<int>& v) {
  for (int x : v)
    if (x < 0) throw PreconditionError("negative part in " + join(v));
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) { require_nonnegative(parts_); }

int Composition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Composition::is_weakly_decreasing() const { return std::is_sorted(parts_.rbegin(), parts_.rend()); }

std::string Composition::to_string() const { return join(parts_); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  require_nonnegative(parts_);
  if (!std::is_sorted(parts_.rbegin(), parts_.rend()))
    throw PreconditionError(join(parts_) + " is not weakly decreasing");
}

Partition::Partition(std::vector<int> parts, std::size_t n) : Partition(std::move(parts)) {
  while (parts_.size() > n && parts_.back() == 0) parts_.pop_back();
  if (parts_.size() > n)
    throw PreconditionError(join(parts_) + " has more than " + std::to_string(n) + " nonzero parts");
  parts_.resize(n, 0);
}

Partition::Partition(const Composition& alpha) : Partition(alpha.parts()) {}

int Partition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::size_t Partition::rows() const {
  return static_cast<std::size_t>(std::count_if(parts_.begin(), parts_.end(), [](int x) { return x > 0; }));
}

std::string Partition::to_string() const { return join(parts_); }

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.total() != lambda.total())
    throw PreconditionError("dominance order needs equal sizes: " + mu.to_string() + " vs " + lambda.to_string());
  const std::size_t len = std::max(mu.length(), lambda.length());
  int smu = 0, slambda = 0;
  for (std::size_t i = 0; i < len; ++i) {
    smu += i < mu.length() ? mu[i] : 0;
    slambda += i < lambda.length() ? lambda[i] : 0;
    if (smu > slambda) return false;
  }
  return true;
}

std::int64_t pairing_2delta(std::span<const int> lambda) {
  const auto n = static_cast<std::int64_t>(lambda.size());
  std::int64_t s = 0;
  for (std::int64_t i = 1; i <= n; ++i) s += lambda[static_cast<std::size_t>(i - 1)] * (n + 1 - 2 * i);
  return s;
}

std::int64_t n_stat(std::span<const int> lambda) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) s += static_cast<std::int64_t>(i) * lambda[i];
  return s;
}

std::int64_t weight_top(std::span<const int> lambda) {
  const auto n = static_cast<std::int64_t>(lambda.size());
  std::int64_t s = 0;
  for (std::int64_t i = 1; i <= n; ++i) s += lambda[static_cast<std::size_t>(i - 1)] * (n - i);
  return s;
}

namespace {

void partitions_rec(int remaining, int max_part, std::size_t n, std::vector<int>& cur, std::vector<Partition>& out) {
  if (cur.size() == n) {
    if (remaining == 0) out.emplace_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 0; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, n, cur, out);
    cur.pop_back();
  }
}

void compositions_rec(int remaining, std::size_t n, std::vector<int>& cur, std::vector<Composition>& out) {
  if (cur.size() + 1 == n) {
    cur.push_back(remaining);
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (int part = remaining; part >= 0; --part) {
    cur.push_back(part);
    compositions_rec(remaining - part, n, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int d, std::size_t n) {
  if (d < 0) throw PreconditionError("negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  if (n == 0) {
    if (d == 0) out.emplace_back(std::vector<int>{});
    return out;
  }
  partitions_rec(d, d, n, cur, out);
  return out;
}

std::vector<Composition> compositions_of(int d, std::size_t n) {
  if (d < 0) throw PreconditionError("negative size");
  std::vector<Composition> out;
  if (n == 0) {
    if (d == 0) out.emplace_back(std::vector<int>{});
    return out;
  }
  std::vector<int> cur;
  compositions_rec(d, n, cur, out);
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string cleaned;
  for (char c : text) {
    if (c == '(' || c == ')' || c == '[' || c == ']' || c == ' ') continue;
    cleaned.push_back(c);
  }
  if (cleaned.empty()) return out;
  std::stringstream ss(cleaned);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw PreconditionError("cannot parse integer list '" + text + "'");
    }
  }
  return out;
}

}  // namespace strata
