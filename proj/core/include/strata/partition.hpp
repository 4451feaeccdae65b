#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace strata {

/// A sequence alpha of n nonnegative integers (an Iwasawa type).
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  std::size_t length() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  const std::vector<int>& parts() const { return parts_; }
  std::span<const int> view() const { return parts_; }
  int total() const;
  bool is_weakly_decreasing() const;

  auto operator<=>(const Composition&) const = default;

  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

/// A weakly decreasing composition lambda_1 >= ... >= lambda_n >= 0, padded to length n.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  /// Pads with zeros to length n; throws if parts has more nonzero entries than n.
  Partition(std::vector<int> parts, std::size_t n);
  /// Throws unless alpha is weakly decreasing.
  explicit Partition(const Composition& alpha);

  std::size_t length() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  const std::vector<int>& parts() const { return parts_; }
  std::span<const int> view() const { return parts_; }
  int total() const;
  /// Number of nonzero parts.
  std::size_t rows() const;
  Composition as_composition() const { return Composition(parts_); }

  auto operator<=>(const Partition&) const = default;

  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

/// mu <= lambda in dominance order: all prefix sums of mu bounded by those of lambda.
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// 2<lambda, delta> = sum_i lambda_i (n + 1 - 2i).
std::int64_t pairing_2delta(std::span<const int> lambda);
/// <lambda, (0, 1, ..., n-1)>.
std::int64_t n_stat(std::span<const int> lambda);
/// <lambda, (n-1, ..., 1, 0)>: dimension of the Iwasawa stratum.
std::int64_t weight_top(std::span<const int> lambda);

inline std::int64_t pairing_2delta(const Partition& l) { return pairing_2delta(l.view()); }
inline std::int64_t n_stat(const Partition& l) { return n_stat(l.view()); }
inline std::int64_t weight_top(const Partition& l) { return weight_top(l.view()); }
inline std::int64_t pairing_2delta(const Composition& a) { return pairing_2delta(a.view()); }
inline std::int64_t weight_top(const Composition& a) { return weight_top(a.view()); }

/// Partitions of d with at most n parts, padded to n, lexicographically decreasing.
std::vector<Partition> partitions_of(int d, std::size_t n);
/// Compositions of d into n parts, lexicographically decreasing.
std::vector<Composition> compositions_of(int d, std::size_t n);

/// Parses "2,1,0" (spaces allowed); throws PreconditionError on bad input.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace strata
