#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "fuzzmine/error.hpp"
#include "fuzzmine/taxonomy.hpp"

namespace fuzzmine {

/// A basket of leaf codes. Duplicates are kept: they count toward card().
struct Transaction {
  std::string id;
  std::vector<ItemCode> items;

  std::size_t card() const noexcept { return items.size(); }
};

struct TransactionRecord {
  std::string id;
  std::vector<std::string> items;
};

inline std::vector<Transaction> load_transactions(std::span<const TransactionRecord> records, const Taxonomy& taxonomy) {
  std::vector<Transaction> out;
  out.reserve(records.size());
  std::set<std::string> seen;
  for (const auto& rec : records) {
    if (!seen.insert(rec.id).second) throw Error(ErrorKind::DuplicateTransactionId, "'" + rec.id + "'");
    if (rec.items.empty()) throw Error(ErrorKind::EmptyTransaction, "'" + rec.id + "'");
    Transaction t{rec.id, {}};
    t.items.reserve(rec.items.size());
    for (const auto& text : rec.items) {
      ItemCode code = parse_code(text, taxonomy.depth());
      if (!taxonomy.is_leaf(code))
        throw Error(ErrorKind::UnknownLeafCode, "'" + text + "' in transaction '" + rec.id + "' is not a leaf of the taxonomy");
      t.items.push_back(std::move(code));
    }
    out.push_back(std::move(t));
  }
  return out;
}

/// Maximum item threshold: transactions with more items are left out of the
/// mined set.
class MaxItems {
 public:
  explicit MaxItems(std::size_t value) : value_(value) {
    if (value == 0) throw Error(ErrorKind::InvalidChi, "maximum item threshold must be at least 1");
  }
  static MaxItems unlimited() noexcept { return MaxItems(); }

  bool is_unlimited() const noexcept { return value_ == std::numeric_limits<std::size_t>::max(); }
  std::size_t value() const noexcept { return value_; }
  bool admits(const Transaction& t) const noexcept { return t.card() <= value_; }

  friend bool operator==(const MaxItems&, const MaxItems&) = default;

 private:
  MaxItems() noexcept : value_(std::numeric_limits<std::size_t>::max()) {}
  std::size_t value_;
};

/// The qualified transaction set M = {T | card(T) <= chi}.
struct QualifiedDataset {
  std::shared_ptr<const Taxonomy> taxonomy;
  MaxItems chi = MaxItems::unlimited();
  std::vector<Transaction> transactions;
  std::size_t source_size = 0;  // |D| before qualification

  int depth() const noexcept { return taxonomy ? taxonomy->depth() : 0; }
  std::size_t size() const noexcept { return transactions.size(); }

  const Transaction* find(const std::string& id) const noexcept {
    for (const auto& t : transactions)
      if (t.id == id) return &t;
    return nullptr;
  }
};

/// Keeps input order. An empty result is legal.
inline QualifiedDataset qualify(std::shared_ptr<const Taxonomy> taxonomy, std::span<const Transaction> transactions,
                                MaxItems chi) {
  QualifiedDataset out{std::move(taxonomy), chi, {}, transactions.size()};
  for (const auto& t : transactions)
    if (chi.admits(t)) out.transactions.push_back(t);
  return out;
}

/// Occurrence counts of each level-k group inside each qualified transaction.
/// Rows follow the dataset's transaction order; absent groups are not stored.
class GroupCounts {
 public:
  using Row = std::map<ItemCode, std::size_t>;

  int level() const noexcept { return level_; }
  std::size_t size() const noexcept { return rows_.size(); }

  const Row& row(std::size_t index) const { return rows_.at(index); }
  std::size_t card(std::size_t index) const { return cards_.at(index); }
  const std::string& id(std::size_t index) const { return ids_.at(index); }

  /// Row index of a transaction id, or throws TransactionNotInDataset.
  std::size_t index_of(const std::string& id) const {
    if (auto it = index_.find(id); it != index_.end()) return it->second;
    throw Error(ErrorKind::TransactionNotInDataset, "'" + id + "'");
  }
  const Row& of(const std::string& id) const { return rows_[index_of(id)]; }

  std::size_t count(std::size_t index, const ItemCode& group) const {
    const Row& r = rows_.at(index);
    auto it = r.find(group);
    return it == r.end() ? 0 : it->second;
  }

  /// Every group with a non-zero count in at least one transaction, ordered.
  std::set<ItemCode> universe() const {
    std::set<ItemCode> out;
    for (const auto& r : rows_)
      for (const auto& [g, n] : r) out.insert(g);
    return out;
  }

  friend GroupCounts group_at_level(const QualifiedDataset& dataset, int level);

 private:
  int level_ = 0;
  std::vector<Row> rows_;
  std::vector<std::size_t> cards_;
  std::vector<std::string> ids_;
  std::map<std::string, std::size_t> index_;
};

inline GroupCounts group_at_level(const QualifiedDataset& dataset, int level) {
  if (level < 1 || level > dataset.depth())
    throw Error(ErrorKind::LevelOutOfRange, "level " + std::to_string(level) + " outside 1.." + std::to_string(dataset.depth()));
  GroupCounts gc;
  gc.level_ = level;
  gc.rows_.reserve(dataset.size());
  for (std::size_t i = 0; i < dataset.transactions.size(); ++i) {
    const Transaction& t = dataset.transactions[i];
    GroupCounts::Row row;
    for (const auto& item : t.items) ++row[item.ancestor_at(level)];
    gc.rows_.push_back(std::move(row));
    gc.cards_.push_back(t.card());
    gc.ids_.push_back(t.id);
    gc.index_.emplace(t.id, i);
  }
  return gc;
}

}  // namespace fuzzmine
