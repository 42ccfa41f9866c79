#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fuzzmine/error.hpp"
#include "fuzzmine/miner.hpp"
#include "fuzzmine/rational.hpp"
#include "fuzzmine/rules.hpp"

namespace fuzzmine {

enum class ReportFormat { Json, Csv, Text };

struct RunReport {
  MiningResult result;
  std::vector<AssociationRule> rules;
  std::optional<Rational> min_confidence;
  std::optional<double> timing_ms;  // only serialized when set
};

/// Compat values print with exactly two decimals, exact values as "p/q".
inline std::string format_value(const Rational& value, ArithmeticMode mode) {
  return mode == ArithmeticMode::PaperCompat ? to_fixed2(value) : to_fraction_string(value);
}

namespace detail {

inline nlohmann::ordered_json codes_json(const Itemset& items) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : items) arr.push_back(c.render());
  return arr;
}

inline std::string codes_text(const Itemset& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i].render();
  }
  return out;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline std::string emit_json(const RunReport& report) {
  const MiningResult& r = report.result;
  const ArithmeticMode mode = r.config.mode;
  using json = nlohmann::ordered_json;

  json min_support = json::array();
  for (const auto& [level, beta] : r.config.min_support.per_level())
    min_support.push_back({{"level", level}, {"value", to_decimal_string(beta)}});
  for (const auto& [key, beta] : r.config.min_support.per_size())
    min_support.push_back({{"level", key.first}, {"size", key.second}, {"value", to_decimal_string(beta)}});

  json config = {
      {"descent", descent_name(r.config.descent)},
      {"max_itemset_size", r.config.max_itemset_size},
      {"max_level", r.config.max_level ? json(*r.config.max_level) : json(nullptr)},
      {"min_confidence", report.min_confidence ? json(to_decimal_string(*report.min_confidence)) : json(nullptr)},
      {"min_support", std::move(min_support)},
  };
  json dataset = {
      {"transactions", r.dataset.source_size},
      {"qualified", r.dataset.qualified_size},
      {"chi", r.dataset.chi.is_unlimited() ? json(nullptr) : json(r.dataset.chi.value())},
      {"qualified_ids", r.dataset.qualified_ids},
  };

  json itemsets = json::array();
  for (const auto& table : r.tables)
    for (const auto& [items, sv] : table.entries)
      itemsets.push_back({{"level", table.level},
                          {"size", table.size},
                          {"itemset", codes_json(items)},
                          {"support", format_value(sv.value(mode), mode)}});

  json rules = json::array();
  for (const auto& rule : report.rules)
    rules.push_back({{"level", rule.level},
                     {"antecedent", codes_json(rule.antecedent)},
                     {"consequent", codes_json(rule.consequent)},
                     {"support", format_value(rule.support.value(mode), mode)},
                     {"confidence", format_value(rule.confidence, mode)}});

  json out = {
      {"mode", mode_name(mode)},
      {"config", std::move(config)},
      {"dataset", std::move(dataset)},
      {"frequent_itemsets", std::move(itemsets)},
      {"rules", std::move(rules)},
  };
  if (report.timing_ms) out["timing_ms"] = *report.timing_ms;
  return out.dump(2) + "\n";
}

inline std::string emit_csv(const RunReport& report) {
  const MiningResult& r = report.result;
  const ArithmeticMode mode = r.config.mode;
  std::ostringstream out;
  for (const auto& table : r.tables) {
    out << "# frequent itemsets level=" << table.level << " size=" << table.size << "\n";
    out << "level,size,itemset,support\n";
    for (const auto& [items, sv] : table.entries)
      out << table.level << ',' << table.size << ',' << codes_text(items, " ") << ',' << format_value(sv.value(mode), mode)
          << "\n";
    out << "\n";
  }
  out << "# rules\n";
  out << "level,antecedent,consequent,support,confidence\n";
  for (const auto& rule : report.rules)
    out << rule.level << ',' << codes_text(rule.antecedent, " ") << ',' << codes_text(rule.consequent, " ") << ','
        << format_value(rule.support.value(mode), mode) << ',' << format_value(rule.confidence, mode) << "\n";
  if (report.timing_ms) out << "\n# timing_ms," << *report.timing_ms << "\n";
  return out.str();
}

inline std::string emit_text(const RunReport& report) {
  const MiningResult& r = report.result;
  const ArithmeticMode mode = r.config.mode;
  std::ostringstream out;
  out << "Fuzzy multilevel association mining (" << mode_name(mode) << " arithmetic, descent "
      << descent_name(r.config.descent) << ")\n";
  out << "Transactions: " << r.dataset.source_size << ", qualified: " << r.dataset.qualified_size << " (chi = "
      << (r.dataset.chi.is_unlimited() ? std::string("unlimited") : std::to_string(r.dataset.chi.value())) << ")\n";

  int current = 0;
  for (const auto& table : r.tables) {
    if (table.level != current) {
      current = table.level;
      out << "\nLevel k = " << current << "\n";
    }
    out << "  N_" << table.size << "^" << table.level << "  " << table.size << "-itemset";
    if (const Rational* beta = r.config.min_support.find(table.level, table.size))
      out << "  (min support " << to_decimal_string(*beta) << ")";
    out << "\n";
    if (table.empty()) out << "    (none)\n";
    for (const auto& [items, sv] : table.entries) {
      std::string label = "{" + codes_text(items, ", ") + "}";
      out << "    " << label << std::string(label.size() < 36 ? 36 - label.size() : 1, ' ')
          << format_value(sv.value(mode), mode) << "\n";
    }
  }

  out << "\nRules";
  if (report.min_confidence) out << " (min confidence " << to_decimal_string(*report.min_confidence) << ")";
  out << "\n";
  if (report.rules.empty()) out << "  (none)\n";
  for (const auto& rule : report.rules) {
    std::string label = "{" + codes_text(rule.antecedent, ", ") + "} => {" + codes_text(rule.consequent, ", ") + "}";
    out << "  [" << rule.level << "] " << label << std::string(label.size() < 44 ? 44 - label.size() : 1, ' ')
        << "support " << format_value(rule.support.value(mode), mode) << "  confidence "
        << format_value(rule.confidence, mode) << "\n";
  }
  if (report.timing_ms) out << "\nElapsed: " << *report.timing_ms << " ms\n";
  return out.str();
}

}  // namespace detail

inline std::string emit_report(const RunReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return detail::emit_json(report);
    case ReportFormat::Csv: return detail::emit_csv(report);
    case ReportFormat::Text: return detail::emit_text(report);
  }
  return {};
}

}  // namespace fuzzmine
