#include <gtest/gtest.h>

#include <stdexcept>

#include "strata/cyclotomic.hpp"
#include "strata/field.hpp"
#include "strata/partition.hpp"
#include "strata/qpoly.hpp"

namespace strata {
namespace {

TEST(Field, RejectsCompositeModulus) {
  EXPECT_THROW(FpElt(1, 4), PreconditionError);
  EXPECT_THROW(FpElt(1, 1), PreconditionError);
  EXPECT_NO_THROW(FpElt(1, 2));
}

TEST(Field, ReducesAndInverts) {
  FpElt a(-1, 7);
  EXPECT_EQ(a.value(), 6u);
  EXPECT_EQ((a * a.inverse()).value(), 1u);
  EXPECT_THROW(FpElt(0, 7).inverse(), PreconditionError);
  EXPECT_THROW(FpElt(1, 3) + FpElt(1, 5), PreconditionError);
}

TEST(Psi, ZeroIsOne) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) EXPECT_EQ(psi(FpElt(0, p)), CycInt::integer(p, 1));
}

TEST(Psi, NontrivialValuesAtThree) {
  const CycInt s = psi(FpElt(1, 3)) + psi(FpElt(2, 3));
  EXPECT_EQ(s, CycInt::integer(3, -1));
  EXPECT_EQ(s.coords(), (std::vector<std::int64_t>{-1, 0}));
}

TEST(Psi, FullSumVanishes) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
    CycInt s(p);
    for (std::uint32_t x = 0; x < p; ++x) s += psi(FpElt(x, p));
    EXPECT_TRUE(s.is_zero()) << "p=" << p;
  }
}

TEST(Psi, CharacteristicTwo) {
  EXPECT_EQ(psi(FpElt(1, 2)), CycInt::integer(2, -1));
  EXPECT_EQ(cyc_mul(psi(FpElt(1, 2)), psi(FpElt(1, 2))), CycInt::integer(2, 1));
}

TEST(CycInt, InverseRootAndZero) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    EXPECT_EQ(cyc_mul(psi(FpElt(1, p)), psi(FpElt(p - 1, p))), CycInt::integer(p, 1));
    EXPECT_EQ(cyc_add(psi(FpElt(1, p)), CycInt(p)), psi(FpElt(1, p)));
  }
}

TEST(CycInt, IsInteger) {
  EXPECT_EQ(cyc_is_integer(psi(FpElt(0, 5)) + psi(FpElt(0, 5))), 2);
  EXPECT_EQ(cyc_is_integer(psi(FpElt(1, 3)) + psi(FpElt(2, 3))), -1);
  EXPECT_FALSE(cyc_is_integer(psi(FpElt(1, 3))).has_value());
}

TEST(CycInt, TopPowerIsCanonicalised) {
  // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}).
  const CycInt top = CycInt::zeta_power(5, 4);
  EXPECT_EQ(top.coords(), (std::vector<std::int64_t>{-1, -1, -1, -1}));
  EXPECT_EQ(CycInt::zeta_power(5, -1), top);
}

TEST(CycInt, RejectsMixedRingsAndBadShapes) {
  EXPECT_THROW(CycInt(3, {1, 2, 3}), PreconditionError);
  EXPECT_THROW(CycInt::integer(3, 1) + CycInt::integer(5, 1), PreconditionError);
}

TEST(CycInt, ToString) {
  EXPECT_EQ(CycInt::integer(3, 0).to_string(), "0");
  EXPECT_EQ(CycInt::integer(3, 3).to_string(), "3");
  EXPECT_EQ(CycInt(5, {-1, 0, 2, 0}).to_string(), "-1 + 2z^2");
}

TEST(ScaledCyc, ReducesCommonPowers) {
  const ScaledCyc v(CycInt(3, {9, 18}), 3);
  const ScaledCyc r = v.reduced();
  EXPECT_EQ(r.denom_exp(), 1u);
  EXPECT_EQ(r.numerator(), CycInt(3, {1, 2}));
  EXPECT_TRUE(v.same_value(r));
  EXPECT_FALSE(v.same_value(ScaledCyc(CycInt(3, {1, 2}), 0)));
  EXPECT_TRUE(ScaledCyc(CycInt(3), 4).same_value(ScaledCyc(CycInt(3), 0)));
}

TEST(Histogram, EvaluatesAgainstCharacter) {
  CharacterHistogram h(3);
  h.add(0, 2);
  h.add(1, 1);
  h.add(2, 1);
  EXPECT_EQ(h.total(), 4);
  EXPECT_EQ(h.evaluate(AdditiveCharacter(3)), CycInt::integer(3, 1));
  AdditiveCharacter flipped(3);
  flipped.negate(0);
  EXPECT_EQ(h.evaluate(flipped), CycInt::integer(3, -3));
}

TEST(QPoly, EvaluationExamples) {
  EXPECT_EQ(qpoly_eval(QPoly{1}, 2), 1);
  EXPECT_EQ(qpoly_eval(QPoly{1}, 13), 1);
  EXPECT_EQ(qpoly_eval(QPoly{1, 1}, 3), 4);
  EXPECT_EQ(qpoly_eval(QPoly{0, 0, 1}, 2), 4);
}

TEST(QPoly, ArithmeticAndFormatting) {
  const QPoly a{1, 1};
  EXPECT_EQ(a * a, (QPoly{1, 2, 1}));
  EXPECT_EQ(a + (QPoly{-1, -1}), QPoly{});
  EXPECT_EQ(QPoly{}.degree(), -1);
  EXPECT_EQ((QPoly{1, 2, 1}).to_string(), "q^2 + 2q + 1");
  EXPECT_EQ(QPoly::monomial(1).to_string("p"), "p");
  EXPECT_EQ(QPoly{}.to_string(), "0");
}

TEST(QPoly, OverflowIsReported) {
  EXPECT_THROW(ipow(2, 64), std::overflow_error);
  EXPECT_THROW(QPoly::monomial(70).eval(2), std::overflow_error);
  EXPECT_EQ(ipow(3, 4), 81);
}

TEST(Partition, ValidatesAndPads) {
  EXPECT_THROW(Partition({1, 2}), PreconditionError);
  EXPECT_THROW(Partition({1, -1}), PreconditionError);
  EXPECT_THROW(Partition({1, 1, 1}, 2), PreconditionError);
  EXPECT_EQ(Partition({2, 1}, 4).parts(), (std::vector<int>{2, 1, 0, 0}));
  EXPECT_EQ(Partition({2, 1}, 4).rows(), 2u);
  EXPECT_THROW(Partition(Composition({0, 1})), PreconditionError);
}

TEST(Partition, Dominance) {
  EXPECT_TRUE(dominance_leq(Partition({1, 1}), Partition({2, 0})));
  EXPECT_FALSE(dominance_leq(Partition({2, 0}), Partition({1, 1})));
  const Partition l({3, 1, 0});
  EXPECT_TRUE(dominance_leq(l, l));
  EXPECT_TRUE(dominance_leq(Partition({2, 2, 0, 0}), Partition({3, 1, 0, 0})));
  EXPECT_FALSE(dominance_leq(Partition({2, 2, 0, 0}), Partition({2, 1, 1, 0})));
  EXPECT_THROW(dominance_leq(Partition({1, 0}), Partition({2, 0})), PreconditionError);
}

TEST(Partition, Pairings) {
  const Partition a({1, 0});
  EXPECT_EQ(pairing_2delta(a), 1);
  EXPECT_EQ(n_stat(a), 0);
  EXPECT_EQ(weight_top(a), 1);
  const Partition b({1, 1});
  EXPECT_EQ(pairing_2delta(b), 0);
  EXPECT_EQ(weight_top(b), 1);
  const Partition c({2, 1, 0});
  EXPECT_EQ(pairing_2delta(c), 4);
  EXPECT_EQ(n_stat(c), 1);
  EXPECT_EQ(weight_top(c), 5);
}

TEST(Partition, Listings) {
  const auto ps = partitions_of(4, 2);
  ASSERT_EQ(ps.size(), 3u);
  EXPECT_EQ(ps[0].parts(), (std::vector<int>{4, 0}));
  EXPECT_EQ(ps[2].parts(), (std::vector<int>{2, 2}));
  EXPECT_EQ(partitions_of(4, 4).size(), 5u);
  EXPECT_EQ(partitions_of(0, 3).size(), 1u);
  const auto cs = compositions_of(2, 3);
  ASSERT_EQ(cs.size(), 6u);
  EXPECT_EQ(cs.front().parts(), (std::vector<int>{2, 0, 0}));
  EXPECT_EQ(cs.back().parts(), (std::vector<int>{0, 0, 2}));
}

TEST(Partition, ParseIntList) {
  EXPECT_EQ(parse_int_list("2,1,0"), (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(parse_int_list(" (1, 1) "), (std::vector<int>{1, 1}));
  EXPECT_EQ(parse_int_list("[3]"), (std::vector<int>{3}));
  EXPECT_THROW(parse_int_list("1,,2"), PreconditionError);
  EXPECT_THROW(parse_int_list("a"), PreconditionError);
}

}  // namespace
}  // namespace strata
