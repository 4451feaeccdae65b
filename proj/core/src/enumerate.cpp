#include "strata/enumerate.hpp"

#include <set>
#include <stdexcept>

#include "strata/qpoly.hpp"

namespace strata {

std::vector<int> flag_step_rows(const Flag& flag) {
  std::vector<int> rows;
  for (std::size_t i = 1; i < flag.chain.size(); ++i) {
    const Composition& prev = flag.chain[i - 1].alpha();
    const Composition& next = flag.chain[i].alpha();
    int grown = -1;
    for (std::size_t j = 0; j < prev.length(); ++j) {
      const int diff = next[j] - prev[j];
      if (diff == 0) continue;
      if (diff != 1 || grown != -1) throw std::logic_error("flag step is not a unit increment of one exponent");
      grown = static_cast<int>(j);
    }
    if (grown < 0) throw std::logic_error("flag step does not change the Iwasawa type");
    rows.push_back(grown + 1);
  }
  return rows;
}

StratumEnumerator::StratumEnumerator(Composition alpha, std::uint32_t p) : alpha_(std::move(alpha)), p_(p) {
  if (!is_prime(p)) throw PreconditionError("stratum enumeration needs a prime p");
  dimension_ = static_cast<unsigned>(weight_top(alpha_));
  size_ = static_cast<std::uint64_t>(ipow(p, dimension_));
}

LatticeHNF StratumEnumerator::at(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("stratum index out of range");
  const std::size_t n = alpha_.length();
  std::vector<std::vector<std::vector<std::uint32_t>>> entries(n, std::vector<std::vector<std::uint32_t>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) entries[i][j].assign(static_cast<std::size_t>(alpha_[i]), 0);
  // Least significant digit is the last coefficient in iteration order.
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = n; j-- > i + 1;)
      for (std::size_t k = entries[i][j].size(); k-- > 0;) {
        entries[i][j][k] = static_cast<std::uint32_t>(index % p_);
        index /= p_;
      }
  return LatticeHNF(p_, alpha_, std::move(entries));
}

void StratumEnumerator::for_range(std::uint64_t begin, std::uint64_t end,
                                  const std::function<void(const LatticeHNF&)>& visit) const {
  end = std::min(end, size_);
  for (std::uint64_t idx = begin; idx < end; ++idx) visit(at(idx));
}

std::vector<LatticeHNF> enumerate_stratum(const Composition& alpha, std::uint32_t p) {
  StratumEnumerator e(alpha, p);
  std::vector<LatticeHNF> out;
  out.reserve(e.size());
  e.for_each([&](const LatticeHNF& l) { out.push_back(l); });
  return out;
}

std::uint64_t projective_count(std::size_t n, std::uint32_t p) {
  std::uint64_t total = 0, power = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total += power;
    power *= p;
  }
  return total;
}

std::vector<LatticeHNF> sublattices_colength1(const LatticeHNF& lattice) {
  const std::size_t n = lattice.rank();
  const std::uint32_t p = lattice.prime();
  const auto trunc = static_cast<unsigned>(lattice.colength() + 2);
  const SeriesMatrix basis = lattice.matrix(trunc);
  const SeriesPoly varpi = SeriesPoly::uniformizer_power(p, trunc, 1);

  std::vector<LatticeHNF> out;
  out.reserve(projective_count(n, p));
  // Functionals f with f_k = 1 at the first nonzero position k; lexicographic
  // order puts larger k first.
  for (std::size_t k = n; k-- > 0;) {
    const std::size_t free = n - 1 - k;
    const std::uint64_t combos = static_cast<std::uint64_t>(ipow(p, static_cast<unsigned>(free)));
    for (std::uint64_t code = 0; code < combos; ++code) {
      std::vector<std::uint32_t> f(n, 0);
      f[k] = 1;
      std::uint64_t rest = code;
      for (std::size_t j = n; j-- > k + 1;) {
        f[j] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      SeriesMatrix gens = basis;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (f[j] != 0) gens.column_axpy(j, k, SeriesPoly::constant(p, trunc, f[j]));
      }
      gens.scale_column(k, varpi);
      out.push_back(hnf_from_generators(gens));
    }
  }
  return out;
}

namespace {

void descend(const LatticeHNF& bottom, std::vector<LatticeHNF>& chain, const std::function<void(const Flag&)>& visit) {
  const LatticeHNF& top = chain.back();
  if (top.colength() == bottom.colength()) {
    if (top == bottom) visit(Flag{chain});
    return;
  }
  for (auto& sub : sublattices_colength1(top)) {
    if (!sub.contains(bottom)) continue;
    chain.push_back(std::move(sub));
    descend(bottom, chain, visit);
    chain.pop_back();
  }
}

}  // namespace

void for_each_fiber_flag(const LatticeHNF& bottom, const std::function<void(const Flag&)>& visit) {
  std::vector<LatticeHNF> chain{LatticeHNF::unit_lattice(bottom.rank(), bottom.prime())};
  descend(bottom, chain, visit);
}

std::vector<Flag> fiber_flags(const LatticeHNF& bottom) {
  std::vector<Flag> out;
  for_each_fiber_flag(bottom, [&](const Flag& f) { out.push_back(f); });
  return out;
}

std::uint64_t count_fiber_flags(const LatticeHNF& bottom) {
  std::uint64_t count = 0;
  for_each_fiber_flag(bottom, [&](const Flag&) { ++count; });
  return count;
}

std::vector<LatticeHNF> enumerate_all_lattices(std::size_t n, int d, std::uint32_t p) {
  if (d < 0) throw PreconditionError("negative colength");
  std::set<LatticeHNF> level{LatticeHNF::unit_lattice(n, p)};
  for (int step = 0; step < d; ++step) {
    std::set<LatticeHNF> next;
    for (const auto& l : level)
      for (auto& sub : sublattices_colength1(l)) next.insert(std::move(sub));
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

}  // namespace strata
