#pragma once

#include <cstdint>
#include <vector>

#include "strata/field.hpp"

namespace strata {

/// Element of O / varpi^N O with O = F_p[[varpi]]: coefficients of varpi^0..varpi^{N-1}.
class SeriesPoly {
 public:
  SeriesPoly(std::uint32_t p, unsigned trunc);
  SeriesPoly(std::uint32_t p, unsigned trunc, std::vector<std::uint32_t> coeffs);

  static SeriesPoly constant(std::uint32_t p, unsigned trunc, std::uint32_t c);
  /// varpi^k (zero when k >= trunc).
  static SeriesPoly uniformizer_power(std::uint32_t p, unsigned trunc, unsigned k);

  std::uint32_t prime() const { return p_; }
  unsigned trunc() const { return static_cast<unsigned>(coeffs_.size()); }
  std::uint32_t operator[](std::size_t i) const { return coeffs_[i]; }
  std::uint32_t& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }

  /// Smallest i with a nonzero coefficient; trunc() for zero.
  unsigned valuation() const;
  bool is_zero() const { return valuation() == trunc(); }

  SeriesPoly operator+(const SeriesPoly& other) const;
  SeriesPoly operator-(const SeriesPoly& other) const;
  SeriesPoly operator*(const SeriesPoly& other) const;
  SeriesPoly& operator-=(const SeriesPoly& other);
  SeriesPoly scaled(std::uint32_t c) const;

  /// this / varpi^v, requires valuation() >= v; the top v coefficients become 0.
  SeriesPoly shifted_down(unsigned v) const;
  /// Inverse of a unit (nonzero constant term).
  SeriesPoly unit_inverse() const;
  /// Splits this = quotient * varpi^k + remainder with deg(remainder) < k.
  SeriesPoly low_part(unsigned k) const;
  SeriesPoly high_quotient(unsigned k) const;

  bool operator==(const SeriesPoly&) const = default;

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> coeffs_;
};

/// Dense matrix over O / varpi^N, stored column-major (columns are generators).
class SeriesMatrix {
 public:
  SeriesMatrix(std::size_t rows, std::size_t cols, std::uint32_t p, unsigned trunc);

  static SeriesMatrix identity(std::size_t n, std::uint32_t p, unsigned trunc);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t prime() const { return p_; }
  unsigned trunc() const { return trunc_; }

  SeriesPoly& at(std::size_t r, std::size_t c) { return data_[c * rows_ + r]; }
  const SeriesPoly& at(std::size_t r, std::size_t c) const { return data_[c * rows_ + r]; }

  SeriesMatrix operator*(const SeriesMatrix& other) const;

  /// col[dst] -= factor * col[src].
  void column_axpy(std::size_t dst, std::size_t src, const SeriesPoly& factor);
  void scale_column(std::size_t c, const SeriesPoly& factor);
  void swap_columns(std::size_t a, std::size_t b);
  void swap_rows(std::size_t a, std::size_t b);
  /// row[dst] -= factor * row[src].
  void row_axpy(std::size_t dst, std::size_t src, const SeriesPoly& factor);

 private:
  std::size_t rows_, cols_;
  std::uint32_t p_;
  unsigned trunc_;
  std::vector<SeriesPoly> data_;
};

}  // namespace strata
