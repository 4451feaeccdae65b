#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "strata/field.hpp"
#include "strata/partition.hpp"
#include "strata/series.hpp"

namespace strata {

/// A lattice R in O^n of finite colength, stored in its canonical upper-triangular
/// form x with diagonal varpi^{alpha_1}, ..., varpi^{alpha_n}, off-diagonal
/// polynomials x_{i,j} of degree < alpha_i, and R = x O^n.
///
/// Two values compare equal iff they denote the same lattice. Indices are 0-based.
class LatticeHNF {
 public:
  /// Validates shape and degree bounds; entries[i][j] is only read for i < j.
  LatticeHNF(std::uint32_t p, Composition alpha, std::vector<std::vector<std::vector<std::uint32_t>>> entries);

  /// O^n itself.
  static LatticeHNF unit_lattice(std::size_t n, std::uint32_t p);
  /// varpi^alpha O^n.
  static LatticeHNF diagonal(const Composition& alpha, std::uint32_t p);

  std::size_t rank() const { return alpha_.length(); }
  int colength() const { return alpha_.total(); }
  std::uint32_t prime() const { return p_; }
  const Composition& alpha() const { return alpha_; }

  /// Coefficients of x_{i,j} (i < j), exactly alpha_i of them.
  const std::vector<std::uint32_t>& entry(std::size_t i, std::size_t j) const { return entries_[i][j]; }

  /// The matrix x over O / varpi^trunc.
  SeriesMatrix matrix(unsigned trunc) const;

  /// True iff v (a column over O / varpi^N, N > colength()) lies in this lattice.
  bool contains_vector(const SeriesMatrix& m, std::size_t column) const;
  /// other is a sublattice of this.
  bool contains(const LatticeHNF& other) const;

  std::strong_ordering operator<=>(const LatticeHNF& other) const;
  bool operator==(const LatticeHNF& other) const;

  std::string to_string() const;

 private:
  std::uint32_t p_;
  Composition alpha_;
  std::vector<std::vector<std::vector<std::uint32_t>>> entries_;
};

/// Canonical form of the lattice spanned by the columns of gens (plus varpi^N O^n,
/// where N = gens.trunc()). Throws PreconditionError when the colength reaches N.
LatticeHNF hnf_from_generators(const SeriesMatrix& gens);

/// alpha with L in S_alpha.
const Composition& iwasawa_type(const LatticeHNF& lattice);

/// Elementary-divisor exponents (mu_1 >= ... >= mu_n), via Smith normal form over the DVR.
Partition cartan_type(const LatticeHNF& lattice);

/// Elementary-divisor exponents of an arbitrary square matrix over O / varpi^N,
/// sorted decreasingly; zero columns report N.
std::vector<int> smith_exponents(SeriesMatrix m);

/// Residue character sum_i res(n_{i,i+1} dvarpi) with n = x varpi^{-alpha}.
/// Requires alpha weakly decreasing.
FpElt residue_h(const LatticeHNF& lattice);

}  // namespace strata
