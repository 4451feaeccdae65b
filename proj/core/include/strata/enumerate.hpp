#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "strata/lattice.hpp"

namespace strata {

/// A complete chain O^n = R_0 > R_1 > ... > R_d with one-dimensional steps.
struct Flag {
  std::vector<LatticeHNF> chain;

  const LatticeHNF& bottom() const { return chain.back(); }
  int length() const { return static_cast<int>(chain.size()) - 1; }
};

/// The row (1-based) whose Iwasawa exponent grows at each step of the flag.
/// Throws std::logic_error if a step is not a unit increment of one coordinate.
std::vector<int> flag_step_rows(const Flag& flag);

/// All lattices of the Iwasawa stratum S_alpha, indexed 0 .. size()-1.
///
/// Coefficients are iterated lexicographically: pairs (i,j) in row-major order,
/// low-degree coefficient first, the first coefficient being the most significant
/// digit. Index ranges can be handed to independent workers.
class StratumEnumerator {
 public:
  StratumEnumerator(Composition alpha, std::uint32_t p);

  const Composition& alpha() const { return alpha_; }
  std::uint64_t size() const { return size_; }
  /// Number of free coefficients, i.e. <alpha, (n-1, ..., 1, 0)>.
  unsigned dimension() const { return dimension_; }

  LatticeHNF at(std::uint64_t index) const;

  void for_each(const std::function<void(const LatticeHNF&)>& visit) const { for_range(0, size_, visit); }
  void for_range(std::uint64_t begin, std::uint64_t end, const std::function<void(const LatticeHNF&)>& visit) const;

 private:
  Composition alpha_;
  std::uint32_t p_;
  unsigned dimension_;
  std::uint64_t size_;
};

std::vector<LatticeHNF> enumerate_stratum(const Composition& alpha, std::uint32_t p);

/// Sublattices R' of L with dim(L / R') = 1, ordered by the normalised
/// (first nonzero coordinate 1) functional on L / varpi L, lexicographically.
std::vector<LatticeHNF> sublattices_colength1(const LatticeHNF& lattice);

/// Every flag from O^n down to bottom, in depth-first order of sublattices_colength1.
void for_each_fiber_flag(const LatticeHNF& bottom, const std::function<void(const Flag&)>& visit);
std::vector<Flag> fiber_flags(const LatticeHNF& bottom);
std::uint64_t count_fiber_flags(const LatticeHNF& bottom);

/// Every colength-d lattice of O^n exactly once, by d-fold descent through
/// colength-one sublattices with deduplication; sorted by canonical form.
std::vector<LatticeHNF> enumerate_all_lattices(std::size_t n, int d, std::uint32_t p);

/// (p^n - 1) / (p - 1).
std::uint64_t projective_count(std::size_t n, std::uint32_t p);

}  // namespace strata
