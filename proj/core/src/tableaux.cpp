#include "strata/tableaux.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "strata/field.hpp"

namespace strata {

ChainType::ChainType(std::vector<int> rows, std::size_t n) : rows_(std::move(rows)), n_(n) {
  for (int r : rows_) {
    if (r < 1 || static_cast<std::size_t>(r) > n_)
      throw PreconditionError("chain row " + std::to_string(r) + " outside 1.." + std::to_string(n_));
  }
}

Composition ChainType::content() const {
  std::vector<int> counts(n_, 0);
  for (int r : rows_) ++counts[static_cast<std::size_t>(r - 1)];
  return Composition(std::move(counts));
}

std::vector<Composition> ChainType::prefix_types() const {
  std::vector<Composition> out;
  std::vector<int> cur(n_, 0);
  out.emplace_back(cur);
  for (int r : rows_) {
    ++cur[static_cast<std::size_t>(r - 1)];
    out.emplace_back(cur);
  }
  return out;
}

std::string ChainType::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < rows_.size(); ++i) out << (i ? "," : "") << rows_[i];
  out << ")";
  return out.str();
}

std::vector<ChainType> enumerate_chain_types(const Partition& lambda) {
  std::vector<int> word;
  for (std::size_t j = 0; j < lambda.length(); ++j) word.insert(word.end(), static_cast<std::size_t>(lambda[j]), static_cast<int>(j + 1));
  std::vector<ChainType> out;
  do {
    out.emplace_back(word, lambda.length());
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

bool chain_is_decreasing(const ChainType& tau) {
  std::vector<int> cur(tau.rank(), 0);
  for (int r : tau.rows()) {
    const auto j = static_cast<std::size_t>(r - 1);
    ++cur[j];
    if (j > 0 && cur[j] > cur[j - 1]) return false;
  }
  return true;
}

Tableau chain_to_tableau(const ChainType& tau) {
  Tableau t;
  t.rows.assign(tau.rank(), {});
  int i = 0;
  for (int r : tau.rows()) t.rows[static_cast<std::size_t>(r - 1)].push_back(++i);
  while (!t.rows.empty() && t.rows.back().empty()) t.rows.pop_back();

  bool standard = true;
  for (std::size_t r = 1; r < t.rows.size() && standard; ++r) {
    if (t.rows[r].size() > t.rows[r - 1].size()) standard = false;
    for (std::size_t c = 0; c < t.rows[r].size() && standard; ++c) {
      if (c < t.rows[r - 1].size() && t.rows[r][c] <= t.rows[r - 1][c]) standard = false;
    }
  }
  // Interior empty rows make the shape a non-partition.
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    if (t.rows[r].empty()) standard = false;
  t.standard = standard;
  return t;
}

ChainType tableau_to_chain(const Tableau& t, std::size_t n) {
  std::size_t d = 0;
  for (const auto& row : t.rows) d += row.size();
  std::vector<int> rows(d, 0);
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (int entry : t.rows[r]) {
      if (entry < 1 || static_cast<std::size_t>(entry) > d || rows[static_cast<std::size_t>(entry - 1)] != 0)
        throw PreconditionError("tableau entries are not a permutation of 1..d");
      rows[static_cast<std::size_t>(entry - 1)] = static_cast<int>(r + 1);
    }
  return ChainType(std::move(rows), n);
}

namespace {

std::uint64_t factorial(int m) {
  if (m > 20) throw std::overflow_error("factorial beyond 20! overflows uint64");
  std::uint64_t r = 1;
  for (int k = 2; k <= m; ++k) r *= static_cast<std::uint64_t>(k);
  return r;
}

}  // namespace

std::uint64_t hook_count(const Partition& lambda) {
  const std::size_t rows = lambda.rows();
  std::uint64_t hooks = 1;
  for (std::size_t r = 0; r < rows; ++r)
    for (int c = 0; c < lambda[r]; ++c) {
      int below = 0;
      for (std::size_t r2 = r + 1; r2 < rows && lambda[r2] > c; ++r2) ++below;
      hooks *= static_cast<std::uint64_t>(lambda[r] - c + below);
    }
  return factorial(lambda.total()) / hooks;
}

std::uint64_t multinomial(const Partition& lambda) {
  std::uint64_t r = factorial(lambda.total());
  for (std::size_t j = 0; j < lambda.length(); ++j) r /= factorial(lambda[j]);
  return r;
}

namespace {

struct SsytSearch {
  const Partition& shape;
  std::vector<int> remaining;
  std::vector<std::vector<int>> rows;
  std::vector<Tableau>& out;

  void fill(std::size_t r, std::size_t c) {
    if (r == shape.rows()) {
      out.push_back(Tableau{rows, false});
      return;
    }
    if (c == static_cast<std::size_t>(shape[r])) {
      fill(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
    for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
      if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
      --remaining[static_cast<std::size_t>(v - 1)];
      rows[r].push_back(v);
      fill(r, c + 1);
      rows[r].pop_back();
      ++remaining[static_cast<std::size_t>(v - 1)];
    }
  }
};

}  // namespace

std::vector<Tableau> semistandard_tableaux(const Partition& lambda, const Partition& mu) {
  if (lambda.total() != mu.total()) throw PreconditionError("SSYT needs |lambda| = |mu|");
  std::vector<Tableau> out;
  std::vector<int> content(mu.parts().begin(), mu.parts().begin() + static_cast<std::ptrdiff_t>(mu.rows()));
  SsytSearch search{lambda, content, std::vector<std::vector<int>>(lambda.rows()), out};
  search.fill(0, 0);
  return out;
}

std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> word;
  for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it) word.insert(word.end(), it->begin(), it->end());
  return word;
}

int charge(const std::vector<int>& word) {
  const std::size_t len = word.size();
  int max_letter = 0;
  for (int w : word) {
    if (w < 1) throw PreconditionError("charge needs positive letters");
    max_letter = std::max(max_letter, w);
  }
  std::vector<int> counts(static_cast<std::size_t>(max_letter) + 1, 0);
  for (int w : word) ++counts[static_cast<std::size_t>(w)];
  for (int k = 2; k <= max_letter; ++k)
    if (counts[static_cast<std::size_t>(k)] > counts[static_cast<std::size_t>(k - 1)])
      throw PreconditionError("charge needs partition content");

  std::vector<bool> used(len, false);
  std::size_t left = len;
  int total = 0;
  while (left > 0) {
    // Letters still present form 1..top since the remaining content is a partition.
    int top = 0;
    while (top < max_letter && counts[static_cast<std::size_t>(top + 1)] > 0) ++top;
    std::size_t pos = len;
    int index = 0;
    for (int letter = 1; letter <= top; ++letter) {
      // Scan leftwards from pos, wrapping to the right end; a wrap raises the index.
      std::size_t probe = pos;
      bool wrapped = false;
      while (true) {
        if (probe == 0) {
          probe = len;
          wrapped = true;
        }
        --probe;
        if (!used[probe] && word[probe] == letter) break;
      }
      if (letter > 1 && wrapped) ++index;
      total += index;
      used[probe] = true;
      --counts[static_cast<std::size_t>(letter)];
      --left;
      pos = probe;
    }
  }
  return total;
}

QPoly kostka_foulkes(const Partition& lambda, const Partition& mu) {
  QPoly sum;
  for (const auto& t : semistandard_tableaux(lambda, mu)) {
    sum += QPoly::monomial(static_cast<unsigned>(charge(reading_word(t))));
  }
  return sum;
}

QPoly stalk_poly(const Partition& lambda, const Partition& mu) {
  if (lambda.total() != mu.total()) throw PreconditionError("stalk kernel needs |lambda| = |mu|");
  if (!dominance_leq(mu, lambda)) return {};
  const std::int64_t shift = n_stat(mu) - n_stat(lambda);
  QPoly sum;
  for (const auto& t : semistandard_tableaux(lambda, mu)) {
    const std::int64_t e = shift - charge(reading_word(t));
    if (e < 0) throw std::logic_error("negative exponent in stalk kernel");
    sum += QPoly::monomial(static_cast<unsigned>(e));
  }
  return sum;
}

StalkTable::StalkTable(std::size_t n, int d) : n_(n), d_(d), partitions_(partitions_of(d, n)) {
  for (const auto& lambda : partitions_)
    for (const auto& mu : partitions_) entries_.emplace(std::make_pair(lambda, mu), stalk_poly(lambda, mu));
}

const QPoly& StalkTable::at(const Partition& lambda, const Partition& mu) const {
  auto it = entries_.find({lambda, mu});
  if (it == entries_.end())
    throw PreconditionError("stalk table has no entry for " + lambda.to_string() + ", " + mu.to_string());
  return it->second;
}

void StalkTable::set(const Partition& lambda, const Partition& mu, QPoly value) {
  auto it = entries_.find({lambda, mu});
  if (it == entries_.end())
    throw PreconditionError("stalk table has no entry for " + lambda.to_string() + ", " + mu.to_string());
  it->second = std::move(value);
}

}  // namespace strata
