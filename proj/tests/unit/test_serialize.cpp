#include <gtest/gtest.h>

#include "strata/serialize.hpp"

namespace strata {
namespace {

TEST(Json, CycIntShape) {
  const auto j = to_json(CycInt(3, {1, -2}));
  EXPECT_EQ(j.dump(), R"({"coords":[1,-2],"p":3})");
  EXPECT_EQ(cycint_from_json(j), CycInt(3, {1, -2}));
}

TEST(Json, ScaledCycShape) {
  const ScaledCyc v(CycInt::integer(2, 5), 3);
  const auto j = to_json(v);
  EXPECT_EQ(j.at("denom_exp"), 3);
  EXPECT_EQ(scaledcyc_from_json(j), v);
}

TEST(Json, LatticeRecord) {
  std::vector<std::vector<std::vector<std::uint32_t>>> e(3, std::vector<std::vector<std::uint32_t>>(3));
  e[0][1] = {1, 2};
  e[0][2] = {0, 1};
  e[1][2] = {2};
  const LatticeHNF l(3, Composition({2, 1, 0}), e);
  const auto j = to_json(l);
  EXPECT_EQ(j.at("entries").at("1,2"), (std::vector<std::uint32_t>{1, 2}));
  EXPECT_EQ(j.at("entries").at("2,3"), (std::vector<std::uint32_t>{2}));
  EXPECT_EQ(lattice_from_json(j, 3), l);
  auto bad = j;
  bad["entries"]["3,1"] = std::vector<int>{0};
  EXPECT_THROW(lattice_from_json(bad, 3), PreconditionError);
}

TEST(Json, VerdictSchema) {
  const auto v = fiber_identity_check(Partition({1, 1}), 3);
  const auto j = to_json(v);
  EXPECT_EQ(j.at("identity"), "fiber");
  EXPECT_EQ(j.at("n"), 2);
  EXPECT_EQ(j.at("d"), 2);
  EXPECT_EQ(j.at("p"), 3);
  EXPECT_EQ(j.at("mu"), (std::vector<int>{1, 1}));
  EXPECT_EQ(j.at("ok"), true);
  EXPECT_FALSE(j.contains("tau"));
  EXPECT_EQ(cycint_from_json(j.at("value")), CycInt::integer(3, 4));
}

TEST(Json, FlagAndPolynomial) {
  const auto flags = fiber_flags(LatticeHNF::diagonal(Composition({1, 1}), 2));
  const auto j = to_json(flags.front());
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0].at("alpha"), (std::vector<int>{0, 0}));
  EXPECT_EQ(to_json(QPoly{1, 0, 2}).dump(), "[1,0,2]");
}

}  // namespace
}  // namespace strata
