#include "strata/cyclotomic.hpp"

#include <sstream>

namespace strata {

namespace {

void check_prime(std::uint32_t p) {
  if (!is_prime(p)) throw PreconditionError("Z[zeta_p] needs a prime p, got " + std::to_string(p));
}

// Folds a length-p vector over Z[x]/(x^p - 1) onto the power basis of length p-1.
std::vector<std::int64_t> fold(std::vector<std::int64_t> full) {
  const std::size_t p = full.size();
  const std::int64_t top = full[p - 1];
  full.pop_back();
  if (top != 0) {
    for (auto& c : full) c -= top;
  }
  return full;
}

}  // namespace

CycInt::CycInt(std::uint32_t p) : p_(p), coords_(p - 1, 0) { check_prime(p); }

CycInt::CycInt(std::uint32_t p, std::vector<std::int64_t> coords) : p_(p), coords_(std::move(coords)) {
  check_prime(p);
  if (coords_.size() != p - 1) throw PreconditionError("CycInt needs p-1 coordinates");
}

CycInt CycInt::integer(std::uint32_t p, std::int64_t m) {
  CycInt r(p);
  r.coords_[0] = m;
  return r;
}

CycInt CycInt::zeta_power(std::uint32_t p, std::int64_t k) {
  check_prime(p);
  std::int64_t e = k % static_cast<std::int64_t>(p);
  if (e < 0) e += p;
  std::vector<std::int64_t> full(p, 0);
  full[static_cast<std::size_t>(e)] = 1;
  CycInt r(p);
  r.coords_ = fold(std::move(full));
  return r;
}

bool CycInt::is_zero() const {
  for (auto c : coords_)
    if (c != 0) return false;
  return true;
}

std::optional<std::int64_t> CycInt::as_integer() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return std::nullopt;
  return coords_[0];
}

void CycInt::check_same_ring(const CycInt& other) const {
  if (other.p_ != p_) {
    throw PreconditionError("cyclotomic integers over different primes (" + std::to_string(p_) + " vs " +
                            std::to_string(other.p_) + ")");
  }
}

CycInt CycInt::operator+(const CycInt& other) const {
  CycInt r = *this;
  r += other;
  return r;
}

CycInt& CycInt::operator+=(const CycInt& other) {
  check_same_ring(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

CycInt CycInt::operator-(const CycInt& other) const { return *this + (-other); }

CycInt CycInt::operator-() const { return scaled(-1); }

CycInt CycInt::scaled(std::int64_t m) const {
  CycInt r = *this;
  for (auto& c : r.coords_) c *= m;
  return r;
}

CycInt CycInt::operator*(const CycInt& other) const {
  check_same_ring(other);
  const std::size_t p = p_;
  std::vector<std::int64_t> full(p, 0);
  for (std::size_t i = 0; i + 1 < p; ++i) {
    if (coords_[i] == 0) continue;
    for (std::size_t j = 0; j + 1 < p; ++j) {
      full[(i + j) % p] += coords_[i] * other.coords_[j];
    }
  }
  CycInt r(p_);
  r.coords_ = fold(std::move(full));
  return r;
}

std::string CycInt::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    std::int64_t c = coords_[i];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    std::int64_t mag = c < 0 ? -c : c;
    if (i == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag;
      out << "z";
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

CycInt cyc_add(const CycInt& a, const CycInt& b) { return a + b; }
CycInt cyc_mul(const CycInt& a, const CycInt& b) { return a * b; }
std::optional<std::int64_t> cyc_is_integer(const CycInt& a) { return a.as_integer(); }

CycInt psi(FpElt x) { return CycInt::zeta_power(x.modulus(), x.value()); }

ScaledCyc::ScaledCyc(CycInt numerator, unsigned denom_exp)
    : numerator_(std::move(numerator)), denom_exp_(denom_exp) {}

ScaledCyc ScaledCyc::reduced() const {
  ScaledCyc r = *this;
  const std::int64_t p = numerator_.prime();
  while (r.denom_exp_ > 0) {
    bool divisible = true;
    for (auto c : r.numerator_.coords()) {
      if (c % p != 0) {
        divisible = false;
        break;
      }
    }
    if (!divisible) break;
    std::vector<std::int64_t> next = r.numerator_.coords();
    for (auto& c : next) c /= p;
    r.numerator_ = CycInt(numerator_.prime(), std::move(next));
    --r.denom_exp_;
  }
  return r;
}

bool ScaledCyc::same_value(const ScaledCyc& other) const { return reduced() == other.reduced(); }

std::string ScaledCyc::to_string() const {
  if (denom_exp_ == 0) return numerator_.to_string();
  std::ostringstream out;
  out << "(" << numerator_.to_string() << ")/" << numerator_.prime() << "^" << denom_exp_;
  return out.str();
}

AdditiveCharacter::AdditiveCharacter(std::uint32_t p) : p_(p) {
  check_prime(p);
  table_.reserve(p);
  for (std::uint32_t x = 0; x < p; ++x) table_.push_back(CycInt::zeta_power(p, x));
}

void AdditiveCharacter::negate(std::uint32_t x) { table_[x % p_] = -table_[x % p_]; }

void CharacterHistogram::merge(const CharacterHistogram& other) {
  if (other.counts_.size() != counts_.size()) throw PreconditionError("histograms over different primes");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
}

std::int64_t CharacterHistogram::total() const {
  std::int64_t t = 0;
  for (auto c : counts_) t += c;
  return t;
}

CycInt CharacterHistogram::evaluate(const AdditiveCharacter& chi) const {
  CycInt sum(chi.prime());
  for (std::uint32_t x = 0; x < counts_.size(); ++x) {
    if (counts_[x] != 0) sum += chi(x).scaled(counts_[x]);
  }
  return sum;
}

}  // namespace strata
