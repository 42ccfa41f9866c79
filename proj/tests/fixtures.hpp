#pragma once

#include <filesystem>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fuzzmine/fuzzmine.hpp"

namespace fuzzmine::testing {

inline std::filesystem::path data_dir() { return FUZZMINE_DATA_DIR; }

inline std::shared_ptr<const Taxonomy> grocery_taxonomy() {
  static auto tax = std::make_shared<const Taxonomy>(io::load_taxonomy_file(data_dir() / "taxonomy.csv"));
  return tax;
}

inline const std::vector<Transaction>& grocery_transactions() {
  static auto tx = io::load_transactions_file(data_dir() / "transactions.csv", *grocery_taxonomy());
  return tx;
}

/// The eleven transactions with at most six items.
inline QualifiedDataset grocery_qualified() { return qualify(grocery_taxonomy(), grocery_transactions(), MaxItems(6)); }

inline Rational dec(const char* text) { return parse_rational(text); }

inline Itemset S(std::initializer_list<std::string_view> codes) { return make_itemset(codes); }

/// Per-level minimum supports 0.36 / 0.3 / 0.2 / 0.16, four-itemsets max.
inline MiningConfig grocery_config(ArithmeticMode mode, DescentPolicy descent) {
  MiningConfig c;
  c.min_support.set_level(1, dec("0.36")).set_level(2, dec("0.3")).set_level(3, dec("0.2")).set_level(4, dec("0.16"));
  c.max_itemset_size = 4;
  c.mode = mode;
  c.descent = descent;
  return c;
}

/// Random tree of the given depth with up to `max_leaves` distinct leaves and a
/// handful of transactions over them. Branch digits stay in 1..3 so groups
/// collide at upper levels.
struct RandomCase {
  std::shared_ptr<const Taxonomy> taxonomy;
  std::vector<Transaction> transactions;
  MaxItems chi = MaxItems::unlimited();
  MiningConfig config;
};

inline RandomCase random_case(std::mt19937& rng, std::size_t max_tx = 10, std::size_t max_leaves = 10) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  RandomCase rc;
  const int depth = pick(2, 4);

  std::set<std::string> leaf_codes;
  const int want = pick(1, static_cast<int>(max_leaves));
  for (int attempt = 0; attempt < 50 && static_cast<int>(leaf_codes.size()) < want; ++attempt) {
    std::string code;
    for (int d = 0; d < depth; ++d) code += static_cast<char>('0' + pick(1, 3));
    leaf_codes.insert(code);
  }
  std::vector<TaxonomyRecord> records;
  for (const auto& c : leaf_codes) records.push_back({"leaf " + c, c});
  rc.taxonomy = std::make_shared<const Taxonomy>(load_taxonomy(records));
  std::vector<std::string> leaves(leaf_codes.begin(), leaf_codes.end());

  const int n_tx = pick(0, static_cast<int>(max_tx));
  std::vector<TransactionRecord> tx;
  for (int i = 0; i < n_tx; ++i) {
    TransactionRecord r{"T" + std::to_string(i + 1), {}};
    const int card = pick(1, 6);
    for (int j = 0; j < card; ++j) r.items.push_back(leaves[static_cast<std::size_t>(pick(0, static_cast<int>(leaves.size()) - 1))]);
    tx.push_back(std::move(r));
  }
  rc.transactions = load_transactions(tx, *rc.taxonomy);

  if (pick(0, 3) != 0) rc.chi = MaxItems(static_cast<std::size_t>(pick(1, 7)));

  rc.config.max_itemset_size = static_cast<std::size_t>(pick(1, 4));
  rc.config.mode = ArithmeticMode::Exact;
  rc.config.descent = DescentPolicy::AllGroups;
  for (int k = 1; k <= depth; ++k) {
    rc.config.min_support.set_level(k, Rational(Integer(pick(1, 20)), Integer(20)));
    if (pick(0, 4) == 0)
      rc.config.min_support.set_size(k, static_cast<std::size_t>(pick(2, 4)), Rational(Integer(pick(1, 20)), Integer(20)));
  }
  return rc;
}

}  // namespace fuzzmine::testing
