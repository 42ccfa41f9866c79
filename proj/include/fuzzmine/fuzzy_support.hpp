#pragma once

#include <algorithm>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzmine/dataset.hpp"
#include "fuzzmine/error.hpp"
#include "fuzzmine/rational.hpp"
#include "fuzzmine/taxonomy.hpp"

namespace fuzzmine {

/// A set of same-level group codes, kept sorted and duplicate-free.
using Itemset = std::vector<ItemCode>;

inline Itemset make_itemset(std::vector<ItemCode> codes) {
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

inline Itemset make_itemset(std::initializer_list<std::string_view> rendered) {
  std::vector<ItemCode> codes;
  for (auto text : rendered) codes.push_back(parse_code(text));
  return make_itemset(std::move(codes));
}

inline std::string to_string(const Itemset& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i].render();
  }
  return out + "}";
}

/// Throws EmptyItemset / MixedLevels; returns the common level.
inline int itemset_level(const Itemset& items) {
  if (items.empty()) throw Error(ErrorKind::EmptyItemset, "itemset has no members");
  int level = items.front().level();
  for (const auto& c : items)
    if (c.level() != level || c.depth() != items.front().depth())
      throw Error(ErrorKind::MixedLevels, to_string(items));
  return level;
}

enum class ArithmeticMode {
  Exact,
  PaperCompat,  // memberships truncated to 10^-2 before summation
};

inline std::string_view mode_name(ArithmeticMode m) { return m == ArithmeticMode::Exact ? "exact" : "compat"; }

struct SupportValue {
  Rational exact;
  std::optional<Rational> compat;  // set only in PaperCompat mode

  const Rational& value(ArithmeticMode mode) const {
    return mode == ArithmeticMode::PaperCompat && compat ? *compat : exact;
  }

  friend bool operator==(const SupportValue&, const SupportValue&) = default;
};

/// Per-transaction degrees; zero entries are omitted.
struct Membership {
  std::map<std::string, Rational> values;
};

namespace detail {

inline void require_level_value(int expected, int level) {
  if (level != expected)
    throw Error(ErrorKind::MixedLevels, "itemset at level " + std::to_string(level) + " evaluated against level " +
                                            std::to_string(expected) + " groups");
}

inline void require_level(const GroupCounts& counts, int level) { require_level_value(counts.level(), level); }

inline Rational row_membership(const GroupCounts& counts, std::size_t row, const Itemset& items) {
  Rational best;
  bool first = true;
  for (const auto& g : items) {
    std::size_t v = counts.count(row, g);
    if (v == 0) return Rational(0);
    Rational m(Integer(v), Integer(counts.card(row)));
    if (first || m < best) best = m;
    first = false;
  }
  return best;
}

}  // namespace detail

/// v / card(T) for the group's occurrence count v; 0 when the group is absent.
inline Rational item_membership(const GroupCounts& counts, const Transaction& t, const ItemCode& group) {
  detail::require_level(counts, group.level());
  std::size_t row = counts.index_of(t.id);
  return Rational(Integer(counts.count(row, group)), Integer(counts.card(row)));
}

/// Infimum of the member memberships.
inline Rational itemset_membership(const GroupCounts& counts, const Transaction& t, const Itemset& items) {
  detail::require_level(counts, itemset_level(items));
  return detail::row_membership(counts, counts.index_of(t.id), items);
}

inline Membership membership(const GroupCounts& counts, const Itemset& items) {
  detail::require_level(counts, itemset_level(items));
  Membership out;
  for (std::size_t row = 0; row < counts.size(); ++row) {
    Rational m = detail::row_membership(counts, row, items);
    if (m != 0) out.values.emplace(counts.id(row), std::move(m));
  }
  return out;
}

inline SupportValue support(const GroupCounts& counts, const Itemset& items, ArithmeticMode mode) {
  detail::require_level(counts, itemset_level(items));
  SupportValue sv;
  if (mode == ArithmeticMode::PaperCompat) sv.compat = Rational(0);
  for (std::size_t row = 0; row < counts.size(); ++row) {
    Rational m = detail::row_membership(counts, row, items);
    if (m == 0) continue;
    if (sv.compat) *sv.compat += truncate_hundredths(m);
    sv.exact += m;
  }
  return sv;
}

inline SupportValue support(const QualifiedDataset& dataset, const Itemset& items, ArithmeticMode mode) {
  return support(group_at_level(dataset, itemset_level(items)), items, mode);
}

/// Sum of all level-`level` singleton supports. Equals |M| in exact mode.
inline Rational normalization_check(const QualifiedDataset& dataset, int level,
                                    ArithmeticMode mode = ArithmeticMode::Exact) {
  GroupCounts counts = group_at_level(dataset, level);
  Rational total;
  for (const auto& g : counts.universe()) total += support(counts, Itemset{g}, mode).value(mode);
  return total;
}

/// Dense membership grid for one level: one row of per-transaction degrees per
/// group. The miner evaluates every candidate against this instead of
/// re-walking GroupCounts maps.
class LevelMemberships {
 public:
  LevelMemberships(const GroupCounts& counts, ArithmeticMode mode) : mode_(mode), level_(counts.level()) {
    n_ = counts.size();
    for (const auto& g : counts.universe()) {
      std::vector<Rational> row(n_);
      for (std::size_t t = 0; t < n_; ++t) {
        std::size_t v = counts.count(t, g);
        if (v) row[t] = Rational(Integer(v), Integer(counts.card(t)));
      }
      exact_.emplace(g, std::move(row));
    }
  }

  int level() const noexcept { return level_; }
  ArithmeticMode mode() const noexcept { return mode_; }

  std::set<ItemCode> groups() const {
    std::set<ItemCode> out;
    for (const auto& [g, row] : exact_) out.insert(g);
    return out;
  }

  SupportValue support(const Itemset& items) const {
    detail::require_level_value(level_, itemset_level(items));
    std::vector<const std::vector<Rational>*> rows;
    rows.reserve(items.size());
    for (const auto& g : items) {
      auto it = exact_.find(g);
      if (it == exact_.end()) return zero();
      rows.push_back(&it->second);
    }
    SupportValue sv = zero();
    for (std::size_t t = 0; t < n_; ++t) {
      const Rational* best = &(*rows.front())[t];
      for (std::size_t i = 1; i < rows.size() && *best != 0; ++i)
        if ((*rows[i])[t] < *best) best = &(*rows[i])[t];
      if (*best == 0) continue;
      sv.exact += *best;
      if (sv.compat) *sv.compat += truncate_hundredths(*best);
    }
    return sv;
  }

 private:
  SupportValue zero() const {
    SupportValue sv;
    if (mode_ == ArithmeticMode::PaperCompat) sv.compat = Rational(0);
    return sv;
  }

  ArithmeticMode mode_;
  int level_;
  std::size_t n_ = 0;
  std::map<ItemCode, std::vector<Rational>> exact_;
};

}  // namespace fuzzmine
