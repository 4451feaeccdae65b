#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace strata {

/// Raised when an operation's documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::int64_t m);

/// An element of the prime field F_p.
class FpElt {
 public:
  FpElt(std::int64_t value, std::uint32_t p);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }

  FpElt operator+(FpElt other) const;
  FpElt operator-(FpElt other) const;
  FpElt operator*(FpElt other) const;
  FpElt operator-() const;
  FpElt& operator+=(FpElt other) { return *this = *this + other; }

  /// Multiplicative inverse; throws on zero.
  FpElt inverse() const;

  bool operator==(const FpElt&) const = default;

 private:
  void check_same_field(FpElt other) const;

  std::uint32_t value_;
  std::uint32_t p_;
};

// Raw residue helpers used by the polynomial kernels, where carrying the
// modulus in every coefficient would be wasteful.
inline std::uint32_t mod_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t mod_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p);

}  // namespace strata
