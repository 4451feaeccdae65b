#include "strata/qpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace strata {

QPoly::QPoly(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs) { trim(); }

QPoly::QPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(unsigned degree, std::int64_t coeff) {
  std::vector<std::int64_t> c(degree + 1, 0);
  c[degree] = coeff;
  return QPoly(std::move(c));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::operator+(const QPoly& other) const {
  std::vector<std::int64_t> c(std::max(coeffs_.size(), other.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) c[i] += other.coeffs_[i];
  return QPoly(std::move(c));
}

QPoly QPoly::operator*(const QPoly& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<std::int64_t> c(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * other.coeffs_[j];
  return QPoly(std::move(c));
}

std::int64_t QPoly::eval(std::int64_t q) const {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (__builtin_mul_overflow(acc, q, &acc) || __builtin_add_overflow(acc, *it, &acc))
      throw std::overflow_error("QPoly evaluation overflows int64");
  }
  return acc;
}

std::string QPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    std::int64_t c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    std::int64_t mag = c < 0 ? -c : c;
    if (i == 0 || mag != 1) out << mag;
    if (i >= 1) out << var;
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

std::int64_t qpoly_eval(const QPoly& f, std::int64_t p) { return f.eval(p); }

std::int64_t ipow(std::int64_t base, unsigned exp) {
  std::int64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(r, base, &r)) throw std::overflow_error("integer power overflows int64");
  }
  return r;
}

}  // namespace strata
