#pragma once

// Reference computations that take a different route from the library:
// determinantal divisors instead of Smith pivoting, the Hall-type recursion
// for composition series instead of lattice descent, and the principal
// specialisation formula for K_{lambda,1^d}(q) instead of charge.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "strata/qpoly.hpp"
#include "strata/series.hpp"

namespace strata::oracle {

/// Determinant of a square matrix over O / varpi^N by cofactor expansion.
inline SeriesPoly determinant(const std::vector<std::vector<SeriesPoly>>& m) {
  const std::size_t k = m.size();
  const std::uint32_t p = m[0][0].prime();
  const unsigned trunc = m[0][0].trunc();
  if (k == 1) return m[0][0];
  SeriesPoly acc(p, trunc);
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::vector<SeriesPoly>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<SeriesPoly> row;
      for (std::size_t cc = 0; cc < k; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(row);
    }
    SeriesPoly term = m[0][c] * determinant(minor);
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

/// Elementary divisors from the valuations of the gcd of i x i minors.
inline std::vector<int> cartan_by_minors(const SeriesMatrix& x) {
  const std::size_t n = x.rows();
  std::vector<int> min_val(n + 1, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    unsigned best = x.trunc();
    std::vector<bool> pick_r(n, false), pick_c(n, false);
    std::fill(pick_r.end() - static_cast<std::ptrdiff_t>(k), pick_r.end(), true);
    do {
      std::fill(pick_c.begin(), pick_c.end(), false);
      std::fill(pick_c.end() - static_cast<std::ptrdiff_t>(k), pick_c.end(), true);
      do {
        std::vector<std::vector<SeriesPoly>> sub;
        for (std::size_t r = 0; r < n; ++r) {
          if (!pick_r[r]) continue;
          std::vector<SeriesPoly> row;
          for (std::size_t c = 0; c < n; ++c)
            if (pick_c[c]) row.push_back(x.at(r, c));
          sub.push_back(row);
        }
        best = std::min(best, determinant(sub).valuation());
      } while (std::next_permutation(pick_c.begin(), pick_c.end()));
    } while (std::next_permutation(pick_r.begin(), pick_r.end()));
    min_val[k] = static_cast<int>(best);
  }
  // Sum of the k smallest exponents is min_val[k]; report decreasingly.
  std::vector<int> small_first;
  for (std::size_t k = 1; k <= n; ++k) small_first.push_back(min_val[k] - min_val[k - 1]);
  std::sort(small_first.rbegin(), small_first.rend());
  return small_first;
}

/// Number of complete flags of submodules of O/varpi^{mu_1} + ... + O/varpi^{mu_n}.
/// Maximal submodules lowering a part of size j number q^{#parts > j}(q^{m_j} - 1)/(q - 1).
inline std::int64_t composition_series_count(std::vector<int> mu, std::int64_t q) {
  std::sort(mu.rbegin(), mu.rend());
  while (!mu.empty() && mu.back() == 0) mu.pop_back();
  if (mu.empty()) return 1;
  static std::map<std::pair<std::vector<int>, std::int64_t>, std::int64_t> memo;
  auto key = std::make_pair(mu, q);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::int64_t total = 0;
  std::vector<int> sizes = mu;
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  for (int j : sizes) {
    const auto m_j = std::count(mu.begin(), mu.end(), j);
    const auto above = std::count_if(mu.begin(), mu.end(), [j](int x) { return x > j; });
    std::int64_t lines = 0, pw = 1;
    for (int t = 0; t < m_j; ++t) {
      lines += pw;
      pw *= q;
    }
    std::int64_t weight = lines;
    for (int t = 0; t < above; ++t) weight *= q;
    std::vector<int> nu = mu;
    auto pos = std::find(nu.begin(), nu.end(), j);
    pos += m_j - 1;
    --*pos;
    total += weight * composition_series_count(nu, q);
  }
  memo[key] = total;
  return total;
}

/// q^{n(lambda')} prod_{i<=d}(1 - q^i) / prod_{hooks}(1 - q^h), by exact long division.
inline QPoly kostka_foulkes_one_column(const std::vector<int>& lambda) {
  int d = 0;
  for (int x : lambda) d += x;
  std::vector<int> conj;
  for (int c = 0; !lambda.empty() && c < lambda[0]; ++c) {
    int len = 0;
    for (int x : lambda)
      if (x > c) ++len;
    conj.push_back(len);
  }
  std::int64_t n_conj = 0;
  for (std::size_t i = 0; i < conj.size(); ++i) n_conj += static_cast<std::int64_t>(i) * conj[i];

  auto one_minus = [](int e) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(e) + 1, 0);
    c[0] = 1;
    c[static_cast<std::size_t>(e)] -= 1;
    return c;
  };
  auto mul = [](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
  };
  // Divide by a monic-at-zero polynomial (constant term 1); remainder must vanish.
  auto div = [](std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> q(a.size() - b.size() + 1, 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
      q[i] = a[i];
      for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
    }
    return q;
  };
  std::vector<std::int64_t> num{1};
  for (int i = 1; i <= d; ++i) num = mul(num, one_minus(i));
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (int c = 0; c < lambda[r]; ++c) {
      int below = 0;
      for (std::size_t r2 = r + 1; r2 < lambda.size() && lambda[r2] > c; ++r2) ++below;
      num = div(num, one_minus(lambda[r] - c + below));
    }
  std::vector<std::int64_t> shifted(static_cast<std::size_t>(n_conj), 0);
  shifted.insert(shifted.end(), num.begin(), num.end());
  return QPoly(shifted);
}

/// Random invertible matrix over O / varpi^N as a product of elementary column operations.
inline SeriesMatrix random_unimodular(std::size_t n, std::uint32_t p, unsigned trunc, std::mt19937_64& rng) {
  SeriesMatrix u = SeriesMatrix::identity(n, p, trunc);
  std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  auto random_series = [&] {
    std::vector<std::uint32_t> c(trunc);
    for (auto& x : c) x = coeff(rng);
    return SeriesPoly(p, trunc, c);
  };
  for (int step = 0; step < 12; ++step) {
    const std::size_t a = idx(rng), b = idx(rng);
    switch (step % 3) {
      case 0:
        if (a != b) u.column_axpy(a, b, random_series());
        break;
      case 1:
        u.swap_columns(a, b);
        break;
      default: {
        SeriesPoly unit = random_series();
        unit[0] = 1 + coeff(rng) % (p - 1);
        u.scale_column(a, unit);
      }
    }
  }
  return u;
}

}  // namespace strata::oracle
