#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "fuzzmine/error.hpp"
#include "fuzzmine/fuzzy_support.hpp"
#include "fuzzmine/miner.hpp"
#include "fuzzmine/rational.hpp"

namespace fuzzmine {

struct AssociationRule {
  Itemset antecedent;
  Itemset consequent;
  int level = 0;
  SupportValue support;  // of antecedent u consequent
  Rational confidence;   // under the run's arithmetic mode

  friend bool operator==(const AssociationRule&, const AssociationRule&) = default;
};

namespace detail {

inline Itemset union_of(const Itemset& a, const Itemset& b) {
  Itemset u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u;
}

inline void check_rule_shape(const Itemset& a, const Itemset& b) {
  int la = itemset_level(a);
  int lb = itemset_level(b);
  if (la != lb) throw Error(ErrorKind::MixedLevels, to_string(a) + " => " + to_string(b));
  Itemset common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  if (!common.empty()) throw Error(ErrorKind::InvalidRule, "antecedent and consequent overlap: " + to_string(common));
}

/// Compat mode divides the truncated supports and truncates the quotient.
inline Rational ratio(const SupportValue& both, const SupportValue& antecedent, ArithmeticMode mode) {
  const Rational& den = antecedent.value(mode);
  if (den == 0) throw Error(ErrorKind::ZeroAntecedentSupport, "antecedent support is zero");
  Rational q = both.value(mode) / den;
  return mode == ArithmeticMode::PaperCompat ? truncate_hundredths(q) : q;
}

}  // namespace detail

/// Support(A u B) / Support(A), looked up in the mined tables.
inline Rational confidence(const MiningResult& result, const Itemset& a_in, const Itemset& b_in) {
  Itemset a = make_itemset(a_in), b = make_itemset(b_in);
  detail::check_rule_shape(a, b);
  Itemset both = detail::union_of(a, b);
  const SupportValue* s_both = result.find(both);
  const SupportValue* s_a = result.find(a);
  if (!s_both) throw Error(ErrorKind::ItemsetNotFound, to_string(both) + " is not in the mined tables");
  if (!s_a) throw Error(ErrorKind::ItemsetNotFound, to_string(a) + " is not in the mined tables");
  return detail::ratio(*s_both, *s_a, result.config.mode);
}

/// As above, but recomputes supports from the dataset for itemsets the run
/// pruned or never reached.
inline Rational confidence(const MiningResult& result, const QualifiedDataset& dataset, const Itemset& a_in,
                           const Itemset& b_in) {
  Itemset a = make_itemset(a_in), b = make_itemset(b_in);
  detail::check_rule_shape(a, b);
  Itemset both = detail::union_of(a, b);
  const ArithmeticMode mode = result.config.mode;
  auto lookup = [&](const Itemset& s) {
    if (const SupportValue* sv = result.find(s)) return *sv;
    return support(dataset, s, mode);
  };
  return detail::ratio(lookup(both), lookup(a), mode);
}

/// Every ordered split of every frequent itemset of size >= 2, per level.
/// Ordered by level, then itemset, then antecedent.
inline std::vector<AssociationRule> generate_rules(const MiningResult& result,
                                                   const std::optional<Rational>& min_confidence = std::nullopt) {
  const ArithmeticMode mode = result.config.mode;
  std::set<int> levels;
  for (const auto& t : result.tables) levels.insert(t.level);

  std::vector<AssociationRule> rules;
  for (int level : levels) {
    std::vector<std::pair<const Itemset*, const SupportValue*>> sets;
    for (const auto& t : result.tables)
      if (t.level == level && t.size >= 2)
        for (const auto& [items, sv] : t.entries) sets.emplace_back(&items, &sv);
    std::sort(sets.begin(), sets.end(), [](const auto& x, const auto& y) { return *x.first < *y.first; });

    for (const auto& [items_ptr, sv_ptr] : sets) {
      const Itemset& items = *items_ptr;
      const std::size_t n = items.size();
      std::vector<AssociationRule> local;
      for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        Itemset a, b;
        for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1 ? a : b).push_back(items[i]);
        const SupportValue* s_a = result.find(a);
        if (!s_a) throw Error(ErrorKind::ItemsetNotFound, to_string(a) + " missing although " + to_string(items) + " is frequent");
        Rational conf = detail::ratio(*sv_ptr, *s_a, mode);
        if (min_confidence && conf < *min_confidence) continue;
        local.push_back(AssociationRule{std::move(a), std::move(b), level, *sv_ptr, std::move(conf)});
      }
      std::sort(local.begin(), local.end(),
                [](const AssociationRule& x, const AssociationRule& y) { return x.antecedent < y.antecedent; });
      for (auto& r : local) rules.push_back(std::move(r));
    }
  }
  return rules;
}

}  // namespace fuzzmine
