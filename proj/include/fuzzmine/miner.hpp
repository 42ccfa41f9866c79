#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzmine/dataset.hpp"
#include "fuzzmine/error.hpp"
#include "fuzzmine/fuzzy_support.hpp"
#include "fuzzmine/rational.hpp"

namespace fuzzmine {

/// Which level-k groups enter the search once level k-1 is done.
enum class DescentPolicy {
  AllGroups,                // every level-k group present in M
  FrequentDescendantsOnly,  // only children of frequent level-(k-1) groups
};

inline std::string_view descent_name(DescentPolicy p) {
  return p == DescentPolicy::AllGroups ? "all" : "frequent-descendants";
}

/// Minimum supports: one value per level, optionally overridden per itemset size.
class Thresholds {
 public:
  Thresholds& set_level(int level, Rational beta) {
    per_level_[level] = std::move(beta);
    return *this;
  }
  Thresholds& set_size(int level, std::size_t size, Rational beta) {
    per_size_[{level, size}] = std::move(beta);
    return *this;
  }

  bool has_level(int level) const {
    if (per_level_.contains(level)) return true;
    for (const auto& [key, v] : per_size_)
      if (key.first == level) return true;
    return false;
  }

  /// beta_q^k; a size without an override inherits the level value.
  const Rational* find(int level, std::size_t size) const {
    if (auto it = per_size_.find({level, size}); it != per_size_.end()) return &it->second;
    if (auto it = per_level_.find(level); it != per_level_.end()) return &it->second;
    return nullptr;
  }

  const Rational& at(int level, std::size_t size) const {
    if (const Rational* beta = find(level, size)) return *beta;
    throw Error(ErrorKind::MissingThreshold,
                "no minimum support for level " + std::to_string(level) + " size " + std::to_string(size));
  }

  const std::map<int, Rational>& per_level() const noexcept { return per_level_; }
  const std::map<std::pair<int, std::size_t>, Rational>& per_size() const noexcept { return per_size_; }

  void validate() const {
    for (const auto& [level, beta] : per_level_)
      if (beta <= 0) throw Error(ErrorKind::InvalidThreshold, "minimum support for level " + std::to_string(level) + " must be positive");
    for (const auto& [key, beta] : per_size_)
      if (beta <= 0)
        throw Error(ErrorKind::InvalidThreshold, "minimum support for level " + std::to_string(key.first) + " size " +
                                                     std::to_string(key.second) + " must be positive");
  }

  friend bool operator==(const Thresholds&, const Thresholds&) = default;

 private:
  std::map<int, Rational> per_level_;
  std::map<std::pair<int, std::size_t>, Rational> per_size_;
};

struct MiningConfig {
  Thresholds min_support;
  std::size_t max_itemset_size = 4;
  std::optional<int> max_level;  // defaults to the taxonomy depth
  DescentPolicy descent = DescentPolicy::AllGroups;
  ArithmeticMode mode = ArithmeticMode::Exact;

  int effective_max_level(int depth) const { return max_level.value_or(depth); }

  void validate(int depth) const {
    if (max_itemset_size < 1) throw Error(ErrorKind::InvalidConfig, "maximum itemset size must be at least 1");
    int top = effective_max_level(depth);
    if (top < 1 || top > depth)
      throw Error(ErrorKind::InvalidConfig, "maximum level " + std::to_string(top) + " outside 1.." + std::to_string(depth));
    min_support.validate();
    for (int k = 1; k <= top; ++k)
      if (!min_support.has_level(k)) throw Error(ErrorKind::MissingThreshold, "no minimum support for level " + std::to_string(k));
  }
};

/// N_q^k: the frequent q-itemsets of level k, keyed by sorted itemset.
struct FrequentTable {
  int level = 0;
  std::size_t size = 0;
  std::map<Itemset, SupportValue> entries;

  bool empty() const noexcept { return entries.empty(); }
  bool contains(const Itemset& items) const { return entries.contains(items); }
  const SupportValue* find(const Itemset& items) const {
    auto it = entries.find(items);
    return it == entries.end() ? nullptr : &it->second;
  }

  friend bool operator==(const FrequentTable&, const FrequentTable&) = default;
};

struct DatasetSummary {
  std::size_t source_size = 0;  // |D|
  std::size_t qualified_size = 0;  // |M|
  MaxItems chi = MaxItems::unlimited();
  std::vector<std::string> qualified_ids;

  static DatasetSummary of(const QualifiedDataset& dataset) {
    DatasetSummary s{dataset.source_size, dataset.size(), dataset.chi, {}};
    for (const auto& t : dataset.transactions) s.qualified_ids.push_back(t.id);
    return s;
  }
};

struct MiningResult {
  MiningConfig config;
  DatasetSummary dataset;
  std::vector<FrequentTable> tables;  // level-major, then size; every (k, q) present

  const FrequentTable* table(int level, std::size_t size) const {
    for (const auto& t : tables)
      if (t.level == level && t.size == size) return &t;
    return nullptr;
  }

  const SupportValue* find(const Itemset& items) const {
    if (items.empty()) return nullptr;
    const FrequentTable* t = table(items.front().level(), items.size());
    return t ? t->find(items) : nullptr;
  }

  std::size_t itemset_count() const {
    std::size_t n = 0;
    for (const auto& t : tables) n += t.entries.size();
    return n;
  }
};

inline bool meets(const SupportValue& sv, const Rational& beta, ArithmeticMode mode) { return sv.value(mode) >= beta; }

inline FrequentTable frequent_singletons(const LevelMemberships& grid, const Rational& beta,
                                         const std::optional<std::set<ItemCode>>& allowed_groups = std::nullopt) {
  FrequentTable table{grid.level(), 1, {}};
  for (const auto& g : grid.groups()) {
    if (allowed_groups && !allowed_groups->contains(g)) continue;
    Itemset single{g};
    SupportValue sv = grid.support(single);
    if (meets(sv, beta, grid.mode())) table.entries.emplace(std::move(single), std::move(sv));
  }
  return table;
}

inline FrequentTable frequent_singletons(const QualifiedDataset& dataset, int level, const Rational& beta,
                                         ArithmeticMode mode,
                                         const std::optional<std::set<ItemCode>>& allowed_groups = std::nullopt) {
  if (beta <= 0) throw Error(ErrorKind::InvalidThreshold, "minimum support must be positive");
  return frequent_singletons(LevelMemberships(group_at_level(dataset, level), mode), beta, allowed_groups);
}

/// Size-(q+1) candidates from N_q: join entries sharing their first q-1 codes,
/// then drop any candidate with a q-subset missing from N_q. Lexicographic order.
inline std::vector<Itemset> generate_candidates(const FrequentTable& prev) {
  std::vector<Itemset> out;
  std::vector<const Itemset*> keys;
  keys.reserve(prev.entries.size());
  for (const auto& [items, sv] : prev.entries) keys.push_back(&items);

  for (std::size_t i = 0; i < keys.size(); ++i) {
    const Itemset& a = *keys[i];
    for (std::size_t j = i + 1; j < keys.size(); ++j) {
      const Itemset& b = *keys[j];
      if (!std::equal(a.begin(), a.end() - 1, b.begin(), b.end() - 1)) break;  // sorted: no later b shares the prefix
      Itemset cand = a;
      cand.push_back(b.back());

      bool all_subsets = true;
      Itemset sub;
      for (std::size_t drop = 0; drop + 2 < cand.size() && all_subsets; ++drop) {
        // dropping either of the last two codes gives a or b, already known frequent
        sub.assign(cand.begin(), cand.end());
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
        all_subsets = prev.contains(sub);
      }
      if (all_subsets) out.push_back(std::move(cand));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Top-down, level by level: for each level the size-1 table comes from the
/// group universe, larger sizes from Apriori candidates, each filtered by
/// beta_q^k. Stops growing a level once a size yields no candidates.
inline MiningResult mine(const QualifiedDataset& dataset, const MiningConfig& config) {
  if (!dataset.taxonomy) throw Error(ErrorKind::InvalidConfig, "dataset has no taxonomy");
  const int depth = dataset.depth();
  config.validate(depth);

  MiningResult result{config, DatasetSummary::of(dataset), {}};
  const int top = config.effective_max_level(depth);
  const std::size_t max_q = config.max_itemset_size;
  std::optional<std::set<ItemCode>> parents;  // frequent groups of the previous level

  for (int k = 1; k <= top; ++k) {
    LevelMemberships grid(group_at_level(dataset, k), config.mode);

    std::optional<std::set<ItemCode>> allowed;
    if (config.descent == DescentPolicy::FrequentDescendantsOnly && parents) {
      allowed.emplace();
      for (const auto& g : grid.groups())
        if (parents->contains(g.ancestor_at(k - 1))) allowed->insert(g);
    }

    std::vector<FrequentTable> level_tables;
    level_tables.push_back(frequent_singletons(grid, config.min_support.at(k, 1), allowed));

    for (std::size_t q = 2; q <= max_q; ++q) {
      FrequentTable next{k, q, {}};
      const FrequentTable& prev = level_tables.back();
      if (!prev.empty()) {
        const Rational& beta = config.min_support.at(k, q);
        for (auto& cand : generate_candidates(prev)) {
          SupportValue sv = grid.support(cand);
          if (meets(sv, beta, config.mode)) next.entries.emplace(std::move(cand), std::move(sv));
        }
      }
      level_tables.push_back(std::move(next));
    }

    parents.emplace();
    for (const auto& [items, sv] : level_tables.front().entries) parents->insert(items.front());
    for (auto& t : level_tables) result.tables.push_back(std::move(t));
  }
  return result;
}

}  // namespace fuzzmine
