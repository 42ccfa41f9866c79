#pragma once

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fuzzmine/fuzzmine.hpp"

namespace fuzzmine::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitConfig = 2;

/// A `--min-support` value: "k:beta" or "k,q:beta".
struct SupportSpec {
  int level = 0;
  std::optional<std::size_t> size;
  Rational beta;
};

inline SupportSpec parse_support_spec(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0)
    throw Error(ErrorKind::InvalidConfig, "min-support '" + text + "' is not of the form k:value or k,q:value");
  std::string key = text.substr(0, colon);
  SupportSpec spec;
  try {
    std::size_t used = 0;
    auto comma = key.find(',');
    spec.level = std::stoi(key.substr(0, comma), &used);
    if (used != key.substr(0, comma).size()) throw std::invalid_argument(key);
    if (comma != std::string::npos) {
      std::string q = key.substr(comma + 1);
      long long qv = std::stoll(q, &used);
      if (used != q.size() || qv < 1) throw std::invalid_argument(q);
      spec.size = static_cast<std::size_t>(qv);
    }
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidConfig, "bad level/size in min-support '" + text + "'");
  }
  try {
    spec.beta = parse_rational(text.substr(colon + 1));
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidThreshold, "min-support '" + text + "': " + e.what());
  }
  if (spec.level < 1) throw Error(ErrorKind::InvalidConfig, "min-support level must be at least 1 in '" + text + "'");
  if (spec.beta <= 0) throw Error(ErrorKind::InvalidThreshold, "threshold must be positive in '" + text + "'");
  return spec;
}

inline bool log_enabled() {
  const char* v = std::getenv("FUZZMINE_LOG");
  return v && *v && std::string(v) != "0";
}

/// Whole command line in, exit status out. Report goes to `out` unless
/// --output is given; diagnostics go to `err`.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mine fuzzy multilevel association rules from a transaction file over an item taxonomy.", "fuzzmine"};

  std::string taxonomy_path, transactions_path, output_path;
  std::optional<std::size_t> chi;
  std::vector<std::string> support_specs;
  std::optional<std::string> min_confidence_text;
  std::size_t max_itemset_size = 4;
  std::optional<int> max_level;
  std::string mode_text = "exact", descent_text = "all", format_text = "json";
  bool timing = false;

  app.add_option("--taxonomy", taxonomy_path, "Taxonomy file (CSV name,code or JSON object)")->required();
  app.add_option("--transactions", transactions_path, "Transactions file (CSV transaction_id,items or JSON array)")->required();
  app.add_option("--chi", chi, "Maximum items per qualified transaction (default unlimited)");
  app.add_option("--min-support", support_specs, "Minimum support, k:value or k,q:value (repeatable)");
  app.add_option("--min-confidence", min_confidence_text, "Drop rules below this confidence");
  app.add_option("--max-itemset-size", max_itemset_size, "Largest itemset size Q")->capture_default_str();
  app.add_option("--max-level", max_level, "Deepest level to mine (default taxonomy depth)");
  app.add_option("--mode", mode_text, "Arithmetic mode")->check(CLI::IsMember({"exact", "compat"}))->capture_default_str();
  app.add_option("--descent", descent_text, "Level descent policy")
      ->check(CLI::IsMember({"all", "frequent-descendants"}))
      ->capture_default_str();
  app.add_option("--format", format_text, "Report format")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
  app.add_option("--output", output_path, "Write the report here instead of stdout");
  app.add_flag("--timing", timing, "Include elapsed time in the report");

  std::reverse(args.begin(), args.end());  // CLI11's vector overload expects reversed order
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitConfig;
  }

  const bool verbose = log_enabled();
  const auto start = std::chrono::steady_clock::now();
  try {
    MiningConfig config;
    config.max_itemset_size = max_itemset_size;
    config.max_level = max_level;
    config.mode = mode_text == "compat" ? ArithmeticMode::PaperCompat : ArithmeticMode::Exact;
    config.descent = descent_text == "all" ? DescentPolicy::AllGroups : DescentPolicy::FrequentDescendantsOnly;
    for (const auto& text : support_specs) {
      SupportSpec spec = parse_support_spec(text);
      if (spec.size)
        config.min_support.set_size(spec.level, *spec.size, spec.beta);
      else
        config.min_support.set_level(spec.level, spec.beta);
    }
    std::optional<Rational> min_confidence;
    if (min_confidence_text) {
      try {
        min_confidence = parse_rational(*min_confidence_text);
      } catch (const Error& e) {
        throw Error(ErrorKind::InvalidConfig, std::string("min-confidence: ") + e.what());
      }
    }
    MaxItems max_items = chi ? MaxItems(*chi) : MaxItems::unlimited();

    auto taxonomy = std::make_shared<const Taxonomy>(io::load_taxonomy_file(taxonomy_path));
    auto transactions = io::load_transactions_file(transactions_path, *taxonomy);
    QualifiedDataset dataset = qualify(taxonomy, transactions, max_items);
    if (verbose)
      err << "fuzzmine: taxonomy depth " << taxonomy->depth() << ", " << taxonomy->size() << " entries; "
          << transactions.size() << " transactions, " << dataset.size() << " qualified\n";

    RunReport report;
    report.result = mine(dataset, config);
    report.rules = generate_rules(report.result, min_confidence);
    report.min_confidence = min_confidence;

    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (timing) report.timing_ms = elapsed;
    if (verbose)
      err << "fuzzmine: " << report.result.itemset_count() << " frequent itemsets, " << report.rules.size()
          << " rules in " << elapsed << " ms\n";

    ReportFormat format = format_text == "json" ? ReportFormat::Json
                          : format_text == "csv" ? ReportFormat::Csv
                                                 : ReportFormat::Text;
    std::string text = emit_report(report, format);
    if (output_path.empty()) {
      out << text;
    } else {
      std::ofstream file(output_path, std::ios::binary);
      if (!file) throw Error(ErrorKind::MalformedInput, "cannot write " + output_path);
      file << text;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_config_error(e.kind()) ? kExitConfig : kExitInput;
  }
  return kExitOk;
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(std::move(args), out, err);
}

}  // namespace fuzzmine::cli
