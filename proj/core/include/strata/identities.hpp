#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "strata/cyclotomic.hpp"
#include "strata/enumerate.hpp"
#include "strata/lattice.hpp"
#include "strata/partition.hpp"
#include "strata/tableaux.hpp"

namespace strata {

namespace identity_names {
inline constexpr const char* kTheorem1Stratum = "thm1-stratum";
inline constexpr const char* kTheorem1Cells = "thm1-cells";
inline constexpr const char* kTheorem2Cell = "thm2-cell";
inline constexpr const char* kTheorem2CellCount = "thm2-cell-count";
inline constexpr const char* kTheorem2Total = "thm2-total";
inline constexpr const char* kFiber = "fiber";
inline constexpr const char* kDecomposition = "decomposition";
inline constexpr const char* kStratumOrbits = "stratum-orbits";
inline constexpr const char* kCensus = "census";
}  // namespace identity_names

/// Outcome of one exact identity check. ok iff value equals the expected value.
struct IdentityVerdict {
  std::string identity;
  std::size_t n = 0;
  int d = 0;
  std::uint32_t p = 0;
  std::optional<std::vector<int>> alpha;
  std::optional<std::vector<int>> lambda;
  std::optional<std::vector<int>> mu;
  std::optional<std::vector<int>> tau;
  std::variant<CycInt, ScaledCyc> value;
  std::string expected;
  bool ok = false;
};

/// Residue-value histograms keyed by Cartan type; the common shape of a
/// stratum sum and of the unipotent cell integral before the kernel is applied.
class OrbitResidueProfile {
 public:
  explicit OrbitResidueProfile(std::uint32_t p) : p_(p) {}

  void add(const Partition& mu, std::uint32_t h, std::int64_t weight = 1);
  void merge(const OrbitResidueProfile& other);

  const std::map<Partition, CharacterHistogram>& by_orbit() const { return by_orbit_; }
  std::int64_t count(const Partition& mu) const;

 private:
  std::uint32_t p_;
  std::map<Partition, CharacterHistogram> by_orbit_;
};

/// Residue histograms of flag bottoms keyed by chain type (1-based step rows).
class ChainResidueProfile {
 public:
  explicit ChainResidueProfile(std::uint32_t p) : p_(p) {}

  void add(const std::vector<int>& rows, std::uint32_t h);
  void merge(const ChainResidueProfile& other);

  const std::map<std::vector<int>, CharacterHistogram>& by_chain() const { return by_chain_; }

 private:
  std::uint32_t p_;
  std::map<std::vector<int>, CharacterHistogram> by_chain_;
};

/// Evaluates the exact identities for fixed (n, d, p).
///
/// The stalk table and the additive character are owned by the engine and can
/// be altered, so the harness itself can be mutation-tested. Enumerations are
/// folded over index ranges by `jobs` workers; results do not depend on it.
class IdentityEngine {
 public:
  IdentityEngine(std::size_t n, int d, std::uint32_t p, unsigned jobs = 1);

  std::size_t rank() const { return n_; }
  int size() const { return d_; }
  std::uint32_t prime() const { return p_; }

  const StalkTable& stalk_table() const { return stalk_; }
  StalkTable& stalk_table() { return stalk_; }
  const AdditiveCharacter& character() const { return chi_; }
  AdditiveCharacter& character() { return chi_; }

  /// Stalk kernel of lambda at the orbit mu, evaluated at p.
  std::int64_t kernel_at_orbit(const Partition& lambda, const Partition& mu) const;
  std::int64_t ic_kernel(const Partition& lambda, const LatticeHNF& lattice) const;

  OrbitResidueProfile stratum_profile(const Partition& alpha) const;
  OrbitResidueProfile cell_profile(const Composition& alpha) const;
  ChainResidueProfile flag_profile(const Partition& lambda) const;

  /// sum_j (j - 1) max(0, d - alpha_j): the Haar weight exponent of one cell.
  unsigned cell_weight_exponent(const Composition& alpha) const;
  /// Number of cells in the discretised unipotent integral.
  std::uint64_t cell_count() const;

  CycInt apply_kernel(const OrbitResidueProfile& profile, const Partition& lambda) const;

  CycInt theorem1_stratum_sum(const Partition& alpha, const Partition& lambda) const;
  ScaledCyc theorem1_integral_cells(const Composition& alpha, const Partition& lambda) const;
  CycInt theorem2_cell_sum(const ChainType& tau) const;
  CycInt theorem2_total_sum(const Partition& alpha) const;

  /// Stratum-sum verdicts for every lambda.
  std::vector<IdentityVerdict> check_theorem1_stratum(const Partition& alpha) const;
  /// Cell-integral verdicts for every lambda.
  std::vector<IdentityVerdict> check_theorem1_cells(const Composition& alpha) const;
  /// Per-chain sums and per-chain flag counts for every chain type of lambda.
  std::vector<IdentityVerdict> check_theorem2_cells(const Partition& lambda) const;
  IdentityVerdict check_theorem2_total(const Partition& alpha) const;
  IdentityVerdict fiber_identity_check(const Partition& mu) const;
  IdentityVerdict decomposition_consistency(const Partition& alpha) const;
  /// Orbit structure of S_lambda: no smaller orbit, open part of size p^{2<lambda,delta>}, residue 0 there.
  IdentityVerdict check_stratum_orbits(const Partition& lambda) const;
  /// Strata sizes and agreement of the two enumeration paths of X_d.
  IdentityVerdict check_census() const;

 private:
  void require_shape(const Partition& lambda) const;
  void require_shape(const Composition& alpha) const;
  IdentityVerdict base_verdict(const char* name, std::variant<CycInt, ScaledCyc> value) const;

  std::size_t n_;
  int d_;
  std::uint32_t p_;
  unsigned jobs_;
  StalkTable stalk_;
  AdditiveCharacter chi_;
};

// Single-shot forms with the default kernel and character.
std::int64_t ic_kernel(const Partition& lambda, const LatticeHNF& lattice, std::uint32_t p);
CycInt theorem1_stratum_sum(const Partition& alpha, const Partition& lambda, std::uint32_t p);
ScaledCyc theorem1_integral_cells(const Composition& alpha, const Partition& lambda, std::uint32_t p);
CycInt theorem2_cell_sum(const ChainType& tau, std::uint32_t p);
CycInt theorem2_total_sum(const Partition& alpha, std::uint32_t p);
IdentityVerdict fiber_identity_check(const Partition& mu, std::uint32_t p);
IdentityVerdict decomposition_consistency(const Partition& alpha, std::uint32_t p);

}  // namespace strata
