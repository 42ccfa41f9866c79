#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzmine/dataset.hpp"
#include "fuzzmine/error.hpp"
#include "fuzzmine/miner.hpp"
#include "fuzzmine/rational.hpp"

namespace fuzzmine::oracle {

// Reference miner for equivalence tests. It shares no support or candidate
// code with the production path: memberships come straight from the raw
// transactions and every subset of the level universe is enumerated.

using OracleResult = MiningResult;

inline constexpr std::size_t kMaxUniverse = 20;

namespace detail {

inline std::size_t occurrences(const Transaction& t, std::string_view prefix) {
  std::size_t n = 0;
  for (const auto& item : t.items)
    if (item.render().compare(0, prefix.size(), prefix) == 0) ++n;
  return n;
}

}  // namespace detail

/// Sum over M of count_g(T) / card(T).
inline Rational singleton_support(const QualifiedDataset& dataset, const ItemCode& group) {
  Rational total;
  for (const auto& t : dataset.transactions) {
    std::size_t n = detail::occurrences(t, group.digits());
    if (n) total += Rational(Integer(n), Integer(t.card()));
  }
  return total;
}

inline OracleResult brute_force_mine(const QualifiedDataset& dataset, const MiningConfig& config,
                                     std::size_t max_universe = kMaxUniverse) {
  const int depth = dataset.depth();
  const int top = config.max_level.value_or(depth);
  if (top < 1 || top > depth) throw Error(ErrorKind::InvalidConfig, "maximum level out of range");
  for (const auto& [level, beta] : config.min_support.per_level())
    if (beta <= 0) throw Error(ErrorKind::InvalidThreshold, "beta must be positive");
  for (const auto& [key, beta] : config.min_support.per_size())
    if (beta <= 0) throw Error(ErrorKind::InvalidThreshold, "beta must be positive");

  OracleResult result;
  result.config = config;
  result.config.mode = ArithmeticMode::Exact;
  result.dataset = DatasetSummary::of(dataset);

  for (int k = 1; k <= top; ++k) {
    std::set<std::string> prefixes;
    for (const auto& t : dataset.transactions)
      for (const auto& item : t.items) prefixes.insert(item.render().substr(0, static_cast<std::size_t>(k)));
    if (prefixes.size() > max_universe)
      throw Error(ErrorKind::UniverseTooLarge, std::to_string(prefixes.size()) + " groups at level " + std::to_string(k));
    std::vector<ItemCode> universe;
    for (const auto& p : prefixes) universe.push_back(ItemCode::from_digits(p, depth));

    // membership[g][t] = count / card
    std::vector<std::vector<Rational>> membership(universe.size(), std::vector<Rational>(dataset.size()));
    for (std::size_t g = 0; g < universe.size(); ++g)
      for (std::size_t t = 0; t < dataset.size(); ++t) {
        const Transaction& tx = dataset.transactions[t];
        std::size_t n = detail::occurrences(tx, universe[g].digits());
        if (n) membership[g][t] = Rational(Integer(n), Integer(tx.card()));
      }

    const std::size_t first_table = result.tables.size();
    for (std::size_t q = 1; q <= config.max_itemset_size; ++q) result.tables.push_back(FrequentTable{k, q, {}});

    const std::uint32_t subsets = std::uint32_t{1} << universe.size();
    // Popcount order so every (q-1)-subset is decided before its supersets.
    for (std::size_t q = 1; q <= config.max_itemset_size && q <= universe.size(); ++q) {
      const Rational& beta = config.min_support.at(k, q);
      for (std::uint32_t mask = 1; mask < subsets; ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != q) continue;
        Itemset items;
        for (std::size_t g = 0; g < universe.size(); ++g)
          if (mask >> g & 1u) items.push_back(universe[g]);

        if (q > 1) {
          bool closed = true;
          const FrequentTable& smaller = result.tables[first_table + q - 2];
          for (std::size_t drop = 0; drop < items.size() && closed; ++drop) {
            Itemset sub = items;
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
            closed = smaller.entries.contains(sub);
          }
          if (!closed) continue;
        }

        Rational total;
        for (std::size_t t = 0; t < dataset.size(); ++t) {
          Rational low = 1;
          for (std::size_t g = 0; g < universe.size(); ++g)
            if (mask >> g & 1u && membership[g][t] < low) low = membership[g][t];
          total += low;
        }
        if (total >= beta) result.tables[first_table + q - 1].entries.emplace(std::move(items), SupportValue{total, std::nullopt});
      }
    }
  }
  return result;
}

}  // namespace fuzzmine::oracle
