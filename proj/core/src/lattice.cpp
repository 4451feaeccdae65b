#include "strata/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace strata {

LatticeHNF::LatticeHNF(std::uint32_t p, Composition alpha,
                       std::vector<std::vector<std::vector<std::uint32_t>>> entries)
    : p_(p), alpha_(std::move(alpha)), entries_(std::move(entries)) {
  if (!is_prime(p)) throw PreconditionError("lattice over non-prime modulus");
  const std::size_t n = alpha_.length();
  entries_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    entries_[i].resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      auto& e = entries_[i][j];
      if (j <= i) {
        e.clear();
        continue;
      }
      const auto bound = static_cast<std::size_t>(alpha_[i]);
      for (std::size_t k = bound; k < e.size(); ++k) {
        if (e[k] % p != 0) throw PreconditionError("entry degree exceeds diagonal exponent");
      }
      e.resize(bound, 0);
      for (auto& c : e) {
        if (c >= p) throw PreconditionError("coefficient outside [0, p)");
      }
    }
  }
}

LatticeHNF LatticeHNF::unit_lattice(std::size_t n, std::uint32_t p) {
  return diagonal(Composition(std::vector<int>(n, 0)), p);
}

LatticeHNF LatticeHNF::diagonal(const Composition& alpha, std::uint32_t p) { return LatticeHNF(p, alpha, {}); }

SeriesMatrix LatticeHNF::matrix(unsigned trunc) const {
  const std::size_t n = rank();
  SeriesMatrix m(n, n, p_, trunc);
  for (std::size_t j = 0; j < n; ++j) {
    m.at(j, j) = SeriesPoly::uniformizer_power(p_, trunc, static_cast<unsigned>(alpha_[j]));
    for (std::size_t i = 0; i < j; ++i) m.at(i, j) = SeriesPoly(p_, trunc, entries_[i][j]);
  }
  return m;
}

bool LatticeHNF::contains_vector(const SeriesMatrix& m, std::size_t column) const {
  const std::size_t n = rank();
  const unsigned trunc = m.trunc();
  std::vector<SeriesPoly> v;
  v.reserve(n);
  for (std::size_t r = 0; r < n; ++r) v.push_back(m.at(r, column));
  for (std::size_t ii = n; ii-- > 0;) {
    const auto a = static_cast<unsigned>(alpha_[ii]);
    if (v[ii].valuation() < a) return false;
    const SeriesPoly factor = v[ii].high_quotient(a);
    if (factor.is_zero()) continue;
    for (std::size_t r = 0; r < ii; ++r) v[r] -= factor * SeriesPoly(p_, trunc, entries_[r][ii]);
  }
  return true;
}

bool LatticeHNF::contains(const LatticeHNF& other) const {
  if (other.rank() != rank() || other.p_ != p_) throw PreconditionError("containment of incompatible lattices");
  if (other.colength() < colength()) return false;
  const auto trunc = static_cast<unsigned>(colength() + 1);
  const SeriesMatrix m = other.matrix(trunc);
  for (std::size_t c = 0; c < rank(); ++c)
    if (!contains_vector(m, c)) return false;
  return true;
}

std::strong_ordering LatticeHNF::operator<=>(const LatticeHNF& other) const {
  if (auto c = p_ <=> other.p_; c != 0) return c;
  if (auto c = alpha_ <=> other.alpha_; c != 0) return c;
  return entries_ <=> other.entries_;
}

bool LatticeHNF::operator==(const LatticeHNF& other) const { return (*this <=> other) == 0; }

std::string LatticeHNF::to_string() const {
  std::ostringstream out;
  out << "alpha=" << alpha_.to_string();
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = i + 1; j < rank(); ++j) {
      const auto& e = entries_[i][j];
      if (std::all_of(e.begin(), e.end(), [](std::uint32_t c) { return c == 0; })) continue;
      out << " x" << i + 1 << j + 1 << "=[";
      for (std::size_t k = 0; k < e.size(); ++k) out << (k ? "," : "") << e[k];
      out << "]";
    }
  return out.str();
}

LatticeHNF hnf_from_generators(const SeriesMatrix& gens) {
  const std::size_t n = gens.rows();
  const unsigned trunc = gens.trunc();
  const std::uint32_t p = gens.prime();
  SeriesMatrix work = gens;
  std::vector<bool> active(work.cols(), true);
  std::vector<std::size_t> pivot_col(n);
  std::vector<int> alpha(n);

  int colength = 0;
  for (std::size_t ii = n; ii-- > 0;) {
    unsigned best = trunc;
    std::size_t best_col = 0;
    for (std::size_t c = 0; c < work.cols(); ++c) {
      if (!active[c]) continue;
      const unsigned v = work.at(ii, c).valuation();
      if (v < best) {
        best = v;
        best_col = c;
      }
    }
    colength += static_cast<int>(best);
    if (best == trunc || colength >= static_cast<int>(trunc)) {
      throw PreconditionError("not a finite-colength lattice at this level");
    }
    work.scale_column(best_col, work.at(ii, best_col).shifted_down(best).unit_inverse());
    for (std::size_t c = 0; c < work.cols(); ++c) {
      if (!active[c] || c == best_col) continue;
      const SeriesPoly& e = work.at(ii, c);
      if (e.is_zero()) continue;
      work.column_axpy(c, best_col, e.shifted_down(best));
    }
    active[best_col] = false;
    pivot_col[ii] = best_col;
    alpha[ii] = static_cast<int>(best);
  }

  // Reduce each column's entries above the diagonal below the pivot degree,
  // bottom-up so earlier corrections only touch rows not yet fixed.
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t cj = pivot_col[j];
    for (std::size_t ii = j; ii-- > 0;) {
      const SeriesPoly q = work.at(ii, cj).high_quotient(static_cast<unsigned>(alpha[ii]));
      work.column_axpy(cj, pivot_col[ii], q);
    }
  }

  std::vector<std::vector<std::vector<std::uint32_t>>> entries(n, std::vector<std::vector<std::uint32_t>>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t ii = 0; ii < j; ++ii) {
      const auto& coeffs = work.at(ii, pivot_col[j]).coeffs();
      entries[ii][j].assign(coeffs.begin(), coeffs.begin() + alpha[ii]);
    }
  return LatticeHNF(p, Composition(std::move(alpha)), std::move(entries));
}

const Composition& iwasawa_type(const LatticeHNF& lattice) { return lattice.alpha(); }

std::vector<int> smith_exponents(SeriesMatrix m) {
  const std::size_t n = std::min(m.rows(), m.cols());
  const unsigned trunc = m.trunc();
  std::vector<int> exps;
  exps.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    // Smallest valuation; ties broken by (row, column) lexicographically.
    unsigned best = trunc;
    std::size_t br = k, bc = k;
    for (std::size_t r = k; r < m.rows(); ++r)
      for (std::size_t c = k; c < m.cols(); ++c) {
        const unsigned v = m.at(r, c).valuation();
        if (v < best) {
          best = v;
          br = r;
          bc = c;
        }
      }
    if (best == trunc) {
      for (std::size_t rest = k; rest < n; ++rest) exps.push_back(static_cast<int>(trunc));
      break;
    }
    m.swap_rows(k, br);
    m.swap_columns(k, bc);
    m.scale_column(k, m.at(k, k).shifted_down(best).unit_inverse());
    for (std::size_t r = k + 1; r < m.rows(); ++r) {
      if (m.at(r, k).is_zero()) continue;
      m.row_axpy(r, k, m.at(r, k).shifted_down(best));
    }
    for (std::size_t c = k + 1; c < m.cols(); ++c) {
      if (m.at(k, c).is_zero()) continue;
      m.column_axpy(c, k, m.at(k, c).shifted_down(best));
    }
    exps.push_back(static_cast<int>(best));
  }
  std::sort(exps.rbegin(), exps.rend());
  return exps;
}

Partition cartan_type(const LatticeHNF& lattice) {
  const auto trunc = static_cast<unsigned>(lattice.colength() + 1);
  return Partition(smith_exponents(lattice.matrix(trunc)));
}

FpElt residue_h(const LatticeHNF& lattice) {
  const Composition& alpha = lattice.alpha();
  if (!alpha.is_weakly_decreasing()) {
    throw PreconditionError("residue character needs a weakly decreasing Iwasawa type, got " + alpha.to_string());
  }
  std::uint32_t h = 0;
  const std::uint32_t p = lattice.prime();
  for (std::size_t i = 0; i + 1 < lattice.rank(); ++i) {
    const int k = alpha[i + 1] - 1;
    if (k < 0) continue;
    h = mod_add(h, lattice.entry(i, i + 1)[static_cast<std::size_t>(k)], p);
  }
  return FpElt(h, p);
}

}  // namespace strata
