#include "strata/series.hpp"

namespace strata {

SeriesPoly::SeriesPoly(std::uint32_t p, unsigned trunc) : p_(p), coeffs_(trunc, 0) {}

SeriesPoly::SeriesPoly(std::uint32_t p, unsigned trunc, std::vector<std::uint32_t> coeffs)
    : p_(p), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= p;
  coeffs_.resize(trunc, 0);
}

SeriesPoly SeriesPoly::constant(std::uint32_t p, unsigned trunc, std::uint32_t c) {
  SeriesPoly s(p, trunc);
  if (trunc > 0) s.coeffs_[0] = c % p;
  return s;
}

SeriesPoly SeriesPoly::uniformizer_power(std::uint32_t p, unsigned trunc, unsigned k) {
  SeriesPoly s(p, trunc);
  if (k < trunc) s.coeffs_[k] = 1;
  return s;
}

unsigned SeriesPoly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<unsigned>(i);
  return trunc();
}

SeriesPoly SeriesPoly::operator+(const SeriesPoly& other) const {
  SeriesPoly r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = mod_add(coeffs_[i], other.coeffs_[i], p_);
  return r;
}

SeriesPoly SeriesPoly::operator-(const SeriesPoly& other) const {
  SeriesPoly r = *this;
  r -= other;
  return r;
}

SeriesPoly& SeriesPoly::operator-=(const SeriesPoly& other) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = mod_sub(coeffs_[i], other.coeffs_[i], p_);
  return *this;
}

SeriesPoly SeriesPoly::operator*(const SeriesPoly& other) const {
  const std::size_t n = coeffs_.size();
  SeriesPoly r(p_, static_cast<unsigned>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (other.coeffs_[j] == 0) continue;
      r.coeffs_[i + j] = mod_add(r.coeffs_[i + j], mod_mul(coeffs_[i], other.coeffs_[j], p_), p_);
    }
  }
  return r;
}

SeriesPoly SeriesPoly::scaled(std::uint32_t c) const {
  SeriesPoly r = *this;
  for (auto& x : r.coeffs_) x = mod_mul(x, c, p_);
  return r;
}

SeriesPoly SeriesPoly::shifted_down(unsigned v) const {
  if (valuation() < v) throw PreconditionError("series not divisible by the requested power of varpi");
  SeriesPoly r(p_, trunc());
  for (std::size_t i = v; i < coeffs_.size(); ++i) r.coeffs_[i - v] = coeffs_[i];
  return r;
}

SeriesPoly SeriesPoly::unit_inverse() const {
  const std::size_t n = coeffs_.size();
  if (n == 0) return *this;
  if (coeffs_[0] == 0) throw PreconditionError("inverse of a non-unit power series");
  SeriesPoly r(p_, static_cast<unsigned>(n));
  const std::uint32_t inv0 = mod_inv(coeffs_[0], p_);
  r.coeffs_[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    std::uint32_t acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc = mod_add(acc, mod_mul(coeffs_[i], r.coeffs_[k - i], p_), p_);
    r.coeffs_[k] = mod_mul(mod_sub(0, acc, p_), inv0, p_);
  }
  return r;
}

SeriesPoly SeriesPoly::low_part(unsigned k) const {
  SeriesPoly r = *this;
  for (std::size_t i = k; i < r.coeffs_.size(); ++i) r.coeffs_[i] = 0;
  return r;
}

SeriesPoly SeriesPoly::high_quotient(unsigned k) const {
  SeriesPoly r(p_, trunc());
  for (std::size_t i = k; i < coeffs_.size(); ++i) r.coeffs_[i - k] = coeffs_[i];
  return r;
}

SeriesMatrix::SeriesMatrix(std::size_t rows, std::size_t cols, std::uint32_t p, unsigned trunc)
    : rows_(rows), cols_(cols), p_(p), trunc_(trunc), data_(rows * cols, SeriesPoly(p, trunc)) {}

SeriesMatrix SeriesMatrix::identity(std::size_t n, std::uint32_t p, unsigned trunc) {
  SeriesMatrix m(n, n, p, trunc);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = SeriesPoly::constant(p, trunc, 1);
  return m;
}

SeriesMatrix SeriesMatrix::operator*(const SeriesMatrix& other) const {
  if (cols_ != other.rows_) throw PreconditionError("matrix shape mismatch");
  SeriesMatrix r(rows_, other.cols_, p_, trunc_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < other.cols_; ++j) {
      SeriesPoly acc(p_, trunc_);
      for (std::size_t k = 0; k < cols_; ++k) acc = acc + at(i, k) * other.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

void SeriesMatrix::column_axpy(std::size_t dst, std::size_t src, const SeriesPoly& factor) {
  if (factor.is_zero()) return;
  for (std::size_t r = 0; r < rows_; ++r) at(r, dst) -= factor * at(r, src);
}

void SeriesMatrix::scale_column(std::size_t c, const SeriesPoly& factor) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = at(r, c) * factor;
}

void SeriesMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
}

void SeriesMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void SeriesMatrix::row_axpy(std::size_t dst, std::size_t src, const SeriesPoly& factor) {
  if (factor.is_zero()) return;
  for (std::size_t c = 0; c < cols_; ++c) at(dst, c) -= factor * at(src, c);
}

}  // namespace strata
