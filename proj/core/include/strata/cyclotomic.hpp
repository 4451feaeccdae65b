#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strata/field.hpp"

namespace strata {

/// Exact element of Z[zeta_p] in the power basis 1, zeta, ..., zeta^{p-2}.
///
/// The relation 1 + zeta + ... + zeta^{p-1} = 0 is applied on construction,
/// so coordinate-wise equality is equality in the ring.
class CycInt {
 public:
  /// Zero of Z[zeta_p].
  explicit CycInt(std::uint32_t p);
  /// Builds from canonical coordinates (length p-1).
  CycInt(std::uint32_t p, std::vector<std::int64_t> coords);

  static CycInt integer(std::uint32_t p, std::int64_t m);
  /// zeta^k, exponent taken modulo p.
  static CycInt zeta_power(std::uint32_t p, std::int64_t k);

  std::uint32_t prime() const { return p_; }
  const std::vector<std::int64_t>& coords() const { return coords_; }

  bool is_zero() const;
  /// m if this equals m * 1, otherwise empty.
  std::optional<std::int64_t> as_integer() const;

  CycInt operator+(const CycInt& other) const;
  CycInt operator-(const CycInt& other) const;
  CycInt operator*(const CycInt& other) const;
  CycInt operator-() const;
  CycInt& operator+=(const CycInt& other);
  CycInt scaled(std::int64_t m) const;

  bool operator==(const CycInt&) const = default;

  /// Human-readable form, e.g. "3", "-1 + 2z^2".
  std::string to_string() const;

 private:
  void check_same_ring(const CycInt& other) const;

  std::uint32_t p_;
  std::vector<std::int64_t> coords_;
};

CycInt cyc_add(const CycInt& a, const CycInt& b);
CycInt cyc_mul(const CycInt& a, const CycInt& b);
std::optional<std::int64_t> cyc_is_integer(const CycInt& a);

/// psi(x) = zeta^x, the standard nontrivial additive character of F_p.
CycInt psi(FpElt x);

/// A value numerator / p^denom_exp with numerator in Z[zeta_p].
class ScaledCyc {
 public:
  ScaledCyc(CycInt numerator, unsigned denom_exp);

  const CycInt& numerator() const { return numerator_; }
  unsigned denom_exp() const { return denom_exp_; }

  /// Divides numerator by p while every coordinate allows it.
  ScaledCyc reduced() const;

  /// Exact equality of the represented values.
  bool same_value(const ScaledCyc& other) const;
  bool operator==(const ScaledCyc&) const = default;

  std::string to_string() const;

 private:
  CycInt numerator_;
  unsigned denom_exp_;
};

/// The additive character used by the identity engines.
///
/// Defaults to psi. Individual values can be negated, which is how the
/// verification harness is mutation-tested.
class AdditiveCharacter {
 public:
  explicit AdditiveCharacter(std::uint32_t p);

  std::uint32_t prime() const { return p_; }
  const CycInt& operator()(std::uint32_t x) const { return table_[x % p_]; }
  const CycInt& operator()(FpElt x) const { return table_[x.value()]; }

  /// Replaces psi(x) by -psi(x).
  void negate(std::uint32_t x);

 private:
  std::uint32_t p_;
  std::vector<CycInt> table_;
};

/// Accumulates sum_x count[x] * chi(x) without materialising each term.
class CharacterHistogram {
 public:
  explicit CharacterHistogram(std::uint32_t p) : counts_(p, 0) {}

  void add(std::uint32_t x, std::int64_t weight = 1) { counts_[x] += weight; }
  void merge(const CharacterHistogram& other);
  std::int64_t total() const;
  const std::vector<std::int64_t>& counts() const { return counts_; }

  CycInt evaluate(const AdditiveCharacter& chi) const;

 private:
  std::vector<std::int64_t> counts_;
};

}  // namespace strata
