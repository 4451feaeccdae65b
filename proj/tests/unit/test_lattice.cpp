#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "strata/enumerate.hpp"
#include "strata/lattice.hpp"

namespace strata {
namespace {

using Entries = std::vector<std::vector<std::vector<std::uint32_t>>>;

LatticeHNF two_by_two(std::uint32_t p, std::vector<int> alpha, std::vector<std::uint32_t> x12) {
  Entries e(2, std::vector<std::vector<std::uint32_t>>(2));
  e[0][1] = std::move(x12);
  return LatticeHNF(p, Composition(std::move(alpha)), e);
}

SeriesMatrix columns(std::uint32_t p, unsigned trunc, const std::vector<std::vector<std::vector<std::uint32_t>>>& cols) {
  SeriesMatrix m(cols[0].size(), cols.size(), p, trunc);
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < cols[c].size(); ++r) m.at(r, c) = SeriesPoly(p, trunc, cols[c][r]);
  return m;
}

TEST(Series, ArithmeticAndValuation) {
  const SeriesPoly a(3, 4, {0, 1, 2});
  EXPECT_EQ(a.valuation(), 1u);
  EXPECT_EQ((a * a).coeffs(), (std::vector<std::uint32_t>{0, 0, 1, 1}));
  EXPECT_EQ(a.shifted_down(1).coeffs(), (std::vector<std::uint32_t>{1, 2, 0, 0}));
  const SeriesPoly u(3, 4, {2, 1});
  EXPECT_EQ(u * u.unit_inverse(), SeriesPoly::constant(3, 4, 1));
  EXPECT_EQ(SeriesPoly(3, 4).valuation(), 4u);
  EXPECT_THROW(a.unit_inverse(), PreconditionError);
}

TEST(Hnf, IdentityGenerators) {
  const auto l = hnf_from_generators(SeriesMatrix::identity(3, 5, 3));
  EXPECT_EQ(l, LatticeHNF::unit_lattice(3, 5));
  EXPECT_EQ(l.alpha().parts(), (std::vector<int>{0, 0, 0}));
}

TEST(Hnf, OneReductionStep) {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::uint32_t c = 0; c < p; ++c) {
      const auto l = hnf_from_generators(columns(p, 3, {{{0, 1}, {0}}, {{c}, {1}}}));
      EXPECT_EQ(l.alpha().parts(), (std::vector<int>{1, 0}));
      EXPECT_EQ(l.entry(0, 1), (std::vector<std::uint32_t>{c}));
    }
}

TEST(Hnf, CanonicalUnderUnimodularAction) {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {2u, 3u}) {
    const auto base = columns(p, 3, {{{0, 1}, {0}}, {{0}, {0, 1}}});
    for (int trial = 0; trial < 25; ++trial) {
      const auto l = hnf_from_generators(base * oracle::random_unimodular(2, p, 3, rng));
      EXPECT_EQ(l.alpha().parts(), (std::vector<int>{1, 1}));
      EXPECT_EQ(l.entry(0, 1), (std::vector<std::uint32_t>{0}));
    }
  }
}

TEST(Hnf, SingularGeneratorsRejected) {
  const auto m = columns(3, 2, {{{1}, {0}}, {{1}, {0}}});
  EXPECT_THROW(hnf_from_generators(m), PreconditionError);
}

TEST(Lattice, ConstructionValidatesDegrees) {
  EXPECT_THROW(two_by_two(3, {1, 0}, {1, 1}), PreconditionError);
  EXPECT_THROW(two_by_two(3, {1, 0}, {3}), PreconditionError);
  EXPECT_NO_THROW(two_by_two(3, {2, 0}, {1, 2}));
}

TEST(Iwasawa, Examples) {
  EXPECT_EQ(iwasawa_type(LatticeHNF::diagonal(Composition({2, 0}), 3)).parts(), (std::vector<int>{2, 0}));
  for (std::uint32_t c = 0; c < 3; ++c)
    EXPECT_EQ(iwasawa_type(two_by_two(3, {1, 0}, {c})).parts(), (std::vector<int>{1, 0}));
  EXPECT_EQ(iwasawa_type(LatticeHNF::diagonal(Composition({1, 0, 2}), 2)).parts(), (std::vector<int>{1, 0, 2}));
}

TEST(Cartan, Examples) {
  EXPECT_EQ(cartan_type(LatticeHNF::diagonal(Composition({1, 1}), 3)).parts(), (std::vector<int>{1, 1}));
  for (std::uint32_t c = 1; c < 5; ++c)
    EXPECT_EQ(cartan_type(two_by_two(5, {1, 1}, {c})).parts(), (std::vector<int>{2, 0}));
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 0; b < 3; ++b)
      EXPECT_EQ(cartan_type(two_by_two(3, {2, 0}, {a, b})).parts(), (std::vector<int>{2, 0}));
}

TEST(Cartan, AgreesWithDeterminantalDivisors) {
  for (std::uint32_t p : {2u, 3u})
    for (const auto& alpha : compositions_of(3, 3))
      StratumEnumerator(alpha, p).for_each([&](const LatticeHNF& l) {
        const auto expected = oracle::cartan_by_minors(l.matrix(4));
        ASSERT_EQ(cartan_type(l).parts(), expected) << l.to_string();
      });
}

TEST(Residue, Examples) {
  EXPECT_TRUE(residue_h(LatticeHNF::diagonal(Composition({2, 1, 0}), 3)).is_zero());
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 0; b < 3; ++b) EXPECT_EQ(residue_h(two_by_two(3, {2, 1}, {a, b})).value(), a);
  for (std::uint32_t c = 0; c < 3; ++c) EXPECT_TRUE(residue_h(two_by_two(3, {1, 0}, {c})).is_zero());
  EXPECT_THROW(residue_h(LatticeHNF::diagonal(Composition({0, 1}), 3)), PreconditionError);
}

TEST(Stratum, Sizes) {
  EXPECT_EQ(enumerate_stratum(Composition({1, 0}), 3).size(), 3u);
  for (std::uint32_t p : {2u, 3u, 5u}) EXPECT_EQ(enumerate_stratum(Composition({0, 1}), p).size(), 1u);
  const auto big = enumerate_stratum(Composition({2, 1, 1}), 2);
  EXPECT_EQ(big.size(), 32u);
  EXPECT_EQ(std::set<LatticeHNF>(big.begin(), big.end()).size(), 32u);
  EXPECT_EQ(StratumEnumerator(Composition({2, 1, 1}), 2).dimension(), 5u);
}

TEST(Stratum, MembersHaveTheirType) {
  for (const auto& alpha : compositions_of(3, 3))
    for (const auto& l : enumerate_stratum(alpha, 2)) {
      EXPECT_EQ(iwasawa_type(l), alpha);
      EXPECT_EQ(hnf_from_generators(l.matrix(5)), l);
    }
}

TEST(Sublattices, ProjectiveCounts) {
  EXPECT_EQ(sublattices_colength1(LatticeHNF::unit_lattice(2, 2)).size(), 3u);
  EXPECT_EQ(sublattices_colength1(LatticeHNF::unit_lattice(3, 3)).size(), 13u);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto l = LatticeHNF::diagonal(Composition({2, 0}), p);
    const auto subs = sublattices_colength1(l);
    EXPECT_EQ(subs.size(), p + 1);
    for (const auto& s : subs) {
      EXPECT_EQ(s.colength(), 3);
      EXPECT_TRUE(l.contains(s));
      EXPECT_FALSE(s.contains(l));
    }
  }
}

TEST(Fiber, FlagCounts) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    EXPECT_EQ(fiber_flags(LatticeHNF::diagonal(Composition({1, 1}), p)).size(), p + 1);
    EXPECT_EQ(fiber_flags(two_by_two(p, {1, 1}, {1})).size(), 1u);
    EXPECT_EQ(fiber_flags(LatticeHNF::diagonal(Composition({2, 0}), p)).size(), 1u);
  }
  EXPECT_EQ(count_fiber_flags(LatticeHNF::diagonal(Composition({1, 1, 1}), 2)), 21u);
}

TEST(Fiber, FlagsAreCompleteChains) {
  const auto bottom = LatticeHNF::diagonal(Composition({2, 1}), 3);
  for (const auto& f : fiber_flags(bottom)) {
    ASSERT_EQ(f.length(), 3);
    EXPECT_EQ(f.chain.front(), LatticeHNF::unit_lattice(2, 3));
    EXPECT_EQ(f.bottom(), bottom);
    for (int i = 0; i < f.length(); ++i) {
      EXPECT_EQ(f.chain[i + 1].colength(), i + 1);
      EXPECT_TRUE(f.chain[i].contains(f.chain[i + 1]));
    }
    EXPECT_EQ(flag_step_rows(f).size(), 3u);
  }
}

TEST(Fiber, MatchesCompositionSeriesRecursion) {
  for (std::uint32_t p : {2u, 3u})
    for (int d = 1; d <= 4; ++d)
      for (const auto& mu : partitions_of(d, 3)) {
        const auto got = count_fiber_flags(LatticeHNF::diagonal(mu.as_composition(), p));
        EXPECT_EQ(static_cast<std::int64_t>(got), oracle::composition_series_count(mu.parts(), p))
            << mu.to_string() << " p=" << p;
      }
}

TEST(AllLattices, Counts) {
  EXPECT_EQ(enumerate_all_lattices(2, 1, 3).size(), 4u);
  EXPECT_EQ(enumerate_all_lattices(2, 2, 2).size(), 7u);
  EXPECT_EQ(enumerate_all_lattices(3, 1, 2).size(), 7u);
  EXPECT_EQ(enumerate_all_lattices(2, 0, 2).size(), 1u);
}

TEST(AllLattices, ReconcileWithStrata) {
  for (std::uint32_t p : {2u, 3u})
    for (int d = 0; d <= 3; ++d) {
      std::vector<LatticeHNF> by_strata;
      for (const auto& alpha : compositions_of(d, 3)) {
        auto s = enumerate_stratum(alpha, p);
        by_strata.insert(by_strata.end(), s.begin(), s.end());
      }
      std::sort(by_strata.begin(), by_strata.end());
      EXPECT_EQ(by_strata, enumerate_all_lattices(3, d, p)) << "d=" << d << " p=" << p;
    }
}

TEST(Containment, DiagonalLattices) {
  const auto a = LatticeHNF::diagonal(Composition({1, 0}), 3);
  const auto b = LatticeHNF::diagonal(Composition({1, 1}), 3);
  EXPECT_TRUE(a.contains(b));
  EXPECT_FALSE(b.contains(a));
  EXPECT_TRUE(a.contains(a));
}

}  // namespace
}  // namespace strata
