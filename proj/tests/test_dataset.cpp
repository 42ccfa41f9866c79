#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "fixtures.hpp"

using namespace fuzzmine;
using namespace fuzzmine::testing;

namespace {

std::vector<std::string> ids(const QualifiedDataset& d) {
  std::vector<std::string> out;
  for (const auto& t : d.transactions) out.push_back(t.id);
  return out;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no fuzzmine::Error thrown";
  return ErrorKind::MalformedInput;
}

}  // namespace

TEST(LoadTransactions, GroceryRows) {
  const auto& tx = grocery_transactions();
  ASSERT_EQ(tx.size(), 13u);
  EXPECT_EQ(tx[0].id, "T1");
  EXPECT_EQ(tx[0].card(), 5u);
  EXPECT_EQ(tx[3].card(), 8u);
  EXPECT_EQ(tx[4].card(), 6u);  // duplicates count: 1113 x2, 3112 x2
}

TEST(LoadTransactions, Errors) {
  const Taxonomy& tax = *grocery_taxonomy();
  auto load = [&](std::vector<TransactionRecord> recs) { return load_transactions(recs, tax); };
  EXPECT_EQ(kind_of([&] { load({{"T1", {"7112"}}}); }), ErrorKind::UnknownLeafCode);
  EXPECT_EQ(kind_of([&] { load({{"T1", {"1111", "11**"}}}); }), ErrorKind::UnknownLeafCode);
  EXPECT_EQ(kind_of([&] { load({{"T1", {"1*1*"}}}); }), ErrorKind::MalformedCode);
  EXPECT_EQ(kind_of([&] { load({{"T1", {"111"}}}); }), ErrorKind::MalformedCode);
  EXPECT_EQ(kind_of([&] { load({{"T1", {"1111"}}, {"T1", {"1112"}}}); }), ErrorKind::DuplicateTransactionId);
  EXPECT_EQ(kind_of([&] { load({{"T1", {}}}); }), ErrorKind::EmptyTransaction);
}

TEST(Qualify, ChiSixMatchesQualifiedTable) {
  QualifiedDataset m = grocery_qualified();
  EXPECT_EQ(ids(m), (std::vector<std::string>{"T1", "T2", "T3", "T5", "T6", "T8", "T9", "T10", "T11", "T12", "T13"}));
  EXPECT_EQ(m.size(), 11u);
  EXPECT_EQ(m.source_size, 13u);
}

TEST(Qualify, ChiEightKeepsEverything) {
  // Largest basket is T4 with 8 items.
  std::size_t max_card = 0;
  for (const auto& t : grocery_transactions()) max_card = std::max(max_card, t.card());
  ASSERT_EQ(max_card, 8u);
  EXPECT_EQ(qualify(grocery_taxonomy(), grocery_transactions(), MaxItems(8)).size(), 13u);
  EXPECT_EQ(qualify(grocery_taxonomy(), grocery_transactions(), MaxItems(7)).size(), 12u);
  EXPECT_EQ(qualify(grocery_taxonomy(), grocery_transactions(), MaxItems::unlimited()).size(), 13u);
}

TEST(Qualify, ZeroChiRejected) { EXPECT_EQ(kind_of([] { MaxItems(0); }), ErrorKind::InvalidChi); }

TEST(Qualify, EmptyResultIsLegal) {
  EXPECT_EQ(qualify(grocery_taxonomy(), grocery_transactions(), MaxItems(1)).size(), 0u);
}

TEST(GroupAtLevel, LevelOneRowT2) {
  GroupCounts gc = group_at_level(grocery_qualified(), 1);
  GroupCounts::Row expected{{parse_code("1***"), 1}, {parse_code("2***"), 1}, {parse_code("3***"), 2}, {parse_code("4***"), 2}};
  EXPECT_EQ(gc.of("T2"), expected);
}

TEST(GroupAtLevel, LevelOneRowT1CountsBothMilkLeaves) {
  GroupCounts gc = group_at_level(grocery_qualified(), 1);
  EXPECT_EQ(gc.of("T1").at(parse_code("1***")), 2u);
  EXPECT_EQ(gc.of("T1").at(parse_code("2***")), 2u);
}

TEST(GroupAtLevel, LeafLevelIsIdentityMultiset) {
  GroupCounts gc = group_at_level(grocery_qualified(), 4);
  GroupCounts::Row expected{{parse_code("1111"), 1}, {parse_code("5134"), 2}};
  EXPECT_EQ(gc.of("T12"), expected);
}

TEST(GroupAtLevel, LevelTwoRowT9) {
  GroupCounts gc = group_at_level(grocery_qualified(), 2);
  GroupCounts::Row expected{{parse_code("11**"), 1}, {parse_code("61**"), 2}, {parse_code("51**"), 2}};
  EXPECT_EQ(gc.of("T9"), expected);
}

TEST(GroupAtLevel, Errors) {
  EXPECT_EQ(kind_of([] { group_at_level(grocery_qualified(), 0); }), ErrorKind::LevelOutOfRange);
  EXPECT_EQ(kind_of([] { group_at_level(grocery_qualified(), 5); }), ErrorKind::LevelOutOfRange);
  GroupCounts gc = group_at_level(grocery_qualified(), 1);
  EXPECT_EQ(kind_of([&] { gc.of("T4"); }), ErrorKind::TransactionNotInDataset);
}

TEST(DatasetProperty, QualifyIdempotentAndCountsSumToCard) {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    RandomCase rc = random_case(rng);
    QualifiedDataset once = qualify(rc.taxonomy, rc.transactions, rc.chi);
    QualifiedDataset twice = qualify(rc.taxonomy, once.transactions, rc.chi);
    EXPECT_EQ(ids(once), ids(twice));
    for (const auto& t : once.transactions) EXPECT_TRUE(rc.chi.admits(t));

    const int depth = once.depth();
    for (int k = 1; k <= depth; ++k) {
      GroupCounts gc = group_at_level(once, k);
      for (std::size_t i = 0; i < gc.size(); ++i) {
        std::size_t sum = 0;
        for (const auto& [g, n] : gc.row(i)) {
          EXPECT_GE(n, 1u);
          sum += n;
        }
        EXPECT_EQ(sum, gc.card(i));
      }
      if (k == depth) continue;
      // refining one level and summing back over the shared prefix recovers the counts
      GroupCounts finer = group_at_level(once, k + 1);
      for (std::size_t i = 0; i < gc.size(); ++i) {
        GroupCounts::Row rolled;
        for (const auto& [g, n] : finer.row(i)) rolled[g.ancestor_at(k)] += n;
        EXPECT_EQ(rolled, gc.row(i));
      }
    }
  }
}
