#include "strata/field.hpp"

namespace strata {

bool is_prime(std::int64_t m) {
  if (m < 2) return false;
  for (std::int64_t k = 2; k * k <= m; ++k) {
    if (m % k == 0) return false;
  }
  return true;
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw PreconditionError("inverse of zero in F_p");
  // Extended Euclid on signed 64-bit values.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

FpElt::FpElt(std::int64_t value, std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw PreconditionError("modulus " + std::to_string(p) + " is not prime");
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  value_ = static_cast<std::uint32_t>(r);
}

void FpElt::check_same_field(FpElt other) const {
  if (other.p_ != p_) throw PreconditionError("F_p elements over different primes");
}

FpElt FpElt::operator+(FpElt other) const {
  check_same_field(other);
  FpElt r = *this;
  r.value_ = mod_add(value_, other.value_, p_);
  return r;
}

FpElt FpElt::operator-(FpElt other) const {
  check_same_field(other);
  FpElt r = *this;
  r.value_ = mod_sub(value_, other.value_, p_);
  return r;
}

FpElt FpElt::operator*(FpElt other) const {
  check_same_field(other);
  FpElt r = *this;
  r.value_ = mod_mul(value_, other.value_, p_);
  return r;
}

FpElt FpElt::operator-() const {
  FpElt r = *this;
  r.value_ = value_ == 0 ? 0 : p_ - value_;
  return r;
}

FpElt FpElt::inverse() const {
  FpElt r = *this;
  r.value_ = mod_inv(value_, p_);
  return r;
}

}  // namespace strata
