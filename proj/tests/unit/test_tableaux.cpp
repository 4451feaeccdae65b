#include <gtest/gtest.h>

#include "oracles.hpp"
#include "strata/tableaux.hpp"

namespace strata {
namespace {

TEST(HookCount, Examples) {
  for (int d = 1; d <= 5; ++d) EXPECT_EQ(hook_count(Partition({d})), 1u);
  EXPECT_EQ(hook_count(Partition({2, 1})), 2u);
  EXPECT_EQ(hook_count(Partition({2, 2})), 2u);
  EXPECT_EQ(hook_count(Partition({3, 2, 1})), 16u);
  EXPECT_EQ(multinomial(Partition({2, 1, 0})), 3u);
}

TEST(ChainTypes, Listings) {
  const auto two = enumerate_chain_types(Partition({1, 1}));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].rows(), (std::vector<int>{1, 2}));
  EXPECT_EQ(two[1].rows(), (std::vector<int>{2, 1}));
  EXPECT_EQ(enumerate_chain_types(Partition({2, 0})).size(), 1u);
  EXPECT_EQ(enumerate_chain_types(Partition({2, 1, 0})).size(), 3u);
}

TEST(ChainTypes, Decreasing) {
  EXPECT_TRUE(chain_is_decreasing(ChainType({1, 2}, 2)));
  EXPECT_FALSE(chain_is_decreasing(ChainType({2, 1}, 2)));
  EXPECT_TRUE(chain_is_decreasing(ChainType({1, 1, 1}, 3)));
  EXPECT_TRUE(chain_is_decreasing(ChainType({1, 2, 1}, 2)));
  EXPECT_FALSE(chain_is_decreasing(ChainType({2, 1, 1}, 2)));
}

TEST(ChainTypes, PrefixTypes) {
  const ChainType tau({2, 1, 1}, 2);
  const auto pre = tau.prefix_types();
  ASSERT_EQ(pre.size(), 4u);
  EXPECT_EQ(pre[0].parts(), (std::vector<int>{0, 0}));
  EXPECT_EQ(pre[1].parts(), (std::vector<int>{0, 1}));
  EXPECT_EQ(pre[3].parts(), (std::vector<int>{2, 1}));
  EXPECT_EQ(tau.content().parts(), (std::vector<int>{2, 1}));
  EXPECT_THROW(ChainType({3}, 2), PreconditionError);
}

TEST(Tableaux, ChainToTableau) {
  const auto a = chain_to_tableau(ChainType({1, 2}, 2));
  EXPECT_EQ(a.rows, (std::vector<std::vector<int>>{{1}, {2}}));
  EXPECT_TRUE(a.standard);
  const auto b = chain_to_tableau(ChainType({2, 1}, 2));
  EXPECT_EQ(b.rows, (std::vector<std::vector<int>>{{2}, {1}}));
  EXPECT_FALSE(b.standard);

  std::vector<Tableau> syt;
  for (const auto& tau : enumerate_chain_types(Partition({2, 1, 0})))
    if (chain_is_decreasing(tau)) syt.push_back(chain_to_tableau(tau));
  ASSERT_EQ(syt.size(), hook_count(Partition({2, 1})));
  EXPECT_EQ(syt[0].rows, (std::vector<std::vector<int>>{{1, 2}, {3}}));
  EXPECT_EQ(syt[1].rows, (std::vector<std::vector<int>>{{1, 3}, {2}}));
  for (const auto& t : syt) EXPECT_TRUE(t.standard);
}

TEST(Tableaux, RoundTrip) {
  for (const auto& tau : enumerate_chain_types(Partition({2, 2, 1})))
    EXPECT_EQ(tableau_to_chain(chain_to_tableau(tau), 3), tau);
}

TEST(Charge, SmallWords) {
  EXPECT_EQ(charge({1, 2}), 1);
  EXPECT_EQ(charge({2, 1}), 0);
  EXPECT_EQ(charge({3, 2, 1}), 0);
  EXPECT_EQ(charge({1, 2, 3}), 3);
  EXPECT_EQ(charge({1, 1, 2, 2}), 2);
  EXPECT_EQ(charge({2, 2, 1, 1}), 0);
}

TEST(KostkaFoulkes, Examples) {
  EXPECT_EQ(kostka_foulkes(Partition({2, 0}), Partition({1, 1})), (QPoly{0, 1}));
  EXPECT_EQ(kostka_foulkes(Partition({2, 1, 0}), Partition({1, 1, 1})), (QPoly{0, 1, 1}));
  for (const auto& l : partitions_of(4, 4)) EXPECT_EQ(kostka_foulkes(l, l), QPoly{1});
  EXPECT_EQ(kostka_foulkes(Partition({1, 1}), Partition({2, 0})), QPoly{});
}

TEST(KostkaFoulkes, SingleRowIsQToTheN) {
  for (int d = 1; d <= 6; ++d)
    for (const auto& mu : partitions_of(d, static_cast<std::size_t>(d)))
      EXPECT_EQ(kostka_foulkes(Partition({d}, d), mu), QPoly::monomial(static_cast<unsigned>(n_stat(mu))));
}

TEST(KostkaFoulkes, OneColumnContentMatchesPrincipalSpecialisation) {
  for (int d = 1; d <= 6; ++d) {
    const auto n = static_cast<std::size_t>(d);
    const Partition ones(std::vector<int>(n, 1));
    for (const auto& l : partitions_of(d, n)) {
      std::vector<int> parts(l.parts().begin(), l.parts().begin() + static_cast<std::ptrdiff_t>(l.rows()));
      EXPECT_EQ(kostka_foulkes(l, ones), oracle::kostka_foulkes_one_column(parts)) << l.to_string();
    }
  }
}

TEST(Stalk, Examples) {
  for (const auto& l : partitions_of(4, 3)) EXPECT_EQ(stalk_poly(l, l), QPoly{1});
  EXPECT_EQ(stalk_poly(Partition({2, 0}), Partition({1, 1})), QPoly{1});
  EXPECT_EQ(stalk_poly(Partition({2, 1, 0}), Partition({1, 1, 1})), (QPoly{1, 1}));
  EXPECT_EQ(stalk_poly(Partition({1, 1}), Partition({2, 0})), QPoly{});
  EXPECT_THROW(stalk_poly(Partition({1, 0}), Partition({1, 1})), PreconditionError);
}

TEST(Stalk, TableOverrides) {
  StalkTable t(2, 2);
  ASSERT_EQ(t.partitions().size(), 2u);
  const Partition top({2, 0}), low({1, 1});
  EXPECT_EQ(t.at(top, low), QPoly{1});
  t.set(top, low, QPoly{2});
  EXPECT_EQ(t.at(top, low), QPoly{2});
  EXPECT_THROW(t.at(Partition({3, 0}), low), PreconditionError);
}

TEST(Ssyt, CountsAreKostkaNumbers) {
  EXPECT_EQ(semistandard_tableaux(Partition({2, 1, 0}), Partition({1, 1, 1})).size(), 2u);
  EXPECT_EQ(semistandard_tableaux(Partition({3, 1, 0}), Partition({2, 1, 1})).size(), 2u);
  EXPECT_EQ(semistandard_tableaux(Partition({2, 2, 0}), Partition({2, 1, 1})).size(), 1u);
  const Tableau t{{{1, 1, 2}, {2}}, false};
  EXPECT_EQ(reading_word(t), (std::vector<int>{2, 1, 1, 2}));
}

}  // namespace
}  // namespace strata
