#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "strata/partition.hpp"
#include "strata/qpoly.hpp"

namespace strata {

/// A map tau : {1..d} -> {1..n}, recording which row grows at each step of a
/// lattice flag. Equivalent to the matrix of prefix types
/// alpha^i_j = #{i' <= i : tau(i') = j}.
class ChainType {
 public:
  ChainType(std::vector<int> rows, std::size_t n);

  const std::vector<int>& rows() const { return rows_; }
  std::size_t rank() const { return n_; }
  int length() const { return static_cast<int>(rows_.size()); }

  /// alpha^d, i.e. |tau^{-1}(j)| for each j; not necessarily a partition.
  Composition content() const;
  /// alpha^0, ..., alpha^d.
  std::vector<Composition> prefix_types() const;

  auto operator<=>(const ChainType&) const = default;

  std::string to_string() const;

 private:
  std::vector<int> rows_;
  std::size_t n_;
};

/// Every tau with |tau^{-1}(j)| = lambda_j, lexicographically increasing.
std::vector<ChainType> enumerate_chain_types(const Partition& lambda);

/// True iff every prefix type alpha^i is weakly decreasing.
bool chain_is_decreasing(const ChainType& tau);

/// A filling of a Young diagram, rows top to bottom.
struct Tableau {
  std::vector<std::vector<int>> rows;
  bool standard = false;

  bool operator==(const Tableau&) const = default;
};

/// Writes i into the first empty box of row tau(i), for i = 1..d. The shape is
/// content(tau); standard is set iff the result is a standard Young tableau
/// of partition shape.
Tableau chain_to_tableau(const ChainType& tau);

/// Inverse of chain_to_tableau: the row of each entry 1..d.
ChainType tableau_to_chain(const Tableau& t, std::size_t n);

/// f^lambda by the hook-length formula.
std::uint64_t hook_count(const Partition& lambda);

/// d! / prod lambda_j!.
std::uint64_t multinomial(const Partition& lambda);

/// Semistandard tableaux of shape lambda and content mu.
std::vector<Tableau> semistandard_tableaux(const Partition& lambda, const Partition& mu);

/// Row reading word, bottom row first, each row left to right.
std::vector<int> reading_word(const Tableau& t);

/// Lascoux-Schutzenberger charge of a word whose content is a partition.
int charge(const std::vector<int>& word);

/// K_{lambda,mu}(q) = sum over SSYT(lambda, mu) of q^charge.
QPoly kostka_foulkes(const Partition& lambda, const Partition& mu);

/// Stalk kernel of the orbit closure of lambda at the orbit of mu:
/// q^{n(mu) - n(lambda)} K_{lambda,mu}(1/q), zero unless mu <= lambda.
QPoly stalk_poly(const Partition& lambda, const Partition& mu);

/// stalk_poly for every pair of n-partitions of d, with overridable entries.
class StalkTable {
 public:
  StalkTable(std::size_t n, int d);

  std::size_t rank() const { return n_; }
  int size() const { return d_; }
  const std::vector<Partition>& partitions() const { return partitions_; }

  const QPoly& at(const Partition& lambda, const Partition& mu) const;
  void set(const Partition& lambda, const Partition& mu, QPoly value);

 private:
  std::size_t n_;
  int d_;
  std::vector<Partition> partitions_;
  std::map<std::pair<Partition, Partition>, QPoly> entries_;
};

}  // namespace strata
