#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace strata {

/// Integer polynomial in q; coeffs[i] multiplies q^i. Trailing zeros are trimmed.
class QPoly {
 public:
  QPoly() = default;
  QPoly(std::initializer_list<std::int64_t> coeffs);
  explicit QPoly(std::vector<std::int64_t> coeffs);

  static QPoly monomial(unsigned degree, std::int64_t coeff = 1);

  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

  QPoly operator+(const QPoly& other) const;
  QPoly operator*(const QPoly& other) const;
  QPoly& operator+=(const QPoly& other) { return *this = *this + other; }

  std::int64_t eval(std::int64_t q) const;

  bool operator==(const QPoly&) const = default;

  /// e.g. "q^2 + 2q + 1"; the variable name is configurable for reports.
  std::string to_string(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

std::int64_t qpoly_eval(const QPoly& f, std::int64_t p);

/// Exact integer power; throws std::overflow_error past int64.
std::int64_t ipow(std::int64_t base, unsigned exp);

}  // namespace strata
