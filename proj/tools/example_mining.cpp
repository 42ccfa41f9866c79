// Library walkthrough on the bundled grocery fixtures: qualify, mine level by
// level in compat arithmetic, then print the rules of the deepest level.
#include <filesystem>
#include <iostream>
#include <memory>

#include "fuzzmine/fuzzmine.hpp"

int main(int argc, char** argv) {
  namespace fm = fuzzmine;
  std::filesystem::path data = argc > 1 ? argv[1] : "data";

  auto taxonomy = std::make_shared<const fm::Taxonomy>(fm::io::load_taxonomy_file(data / "taxonomy.csv"));
  auto transactions = fm::io::load_transactions_file(data / "transactions.csv", *taxonomy);
  fm::QualifiedDataset dataset = fm::qualify(taxonomy, transactions, fm::MaxItems(6));

  fm::MiningConfig config;
  config.mode = fm::ArithmeticMode::PaperCompat;
  config.descent = fm::DescentPolicy::FrequentDescendantsOnly;
  config.min_support.set_level(1, fm::parse_rational("0.36"))
      .set_level(2, fm::parse_rational("0.3"))
      .set_level(3, fm::parse_rational("0.2"))
      .set_level(4, fm::parse_rational("0.16"));

  fm::MiningResult result = fm::mine(dataset, config);
  std::cout << "qualified " << dataset.size() << " of " << transactions.size() << " transactions\n";
  for (const auto& table : result.tables)
    std::cout << "level " << table.level << " size " << table.size << ": " << table.entries.size() << " frequent\n";

  for (const auto& rule : fm::generate_rules(result, fm::parse_rational("0.5")))
    if (rule.level == 4)
      std::cout << fm::to_string(rule.antecedent) << " => " << fm::to_string(rule.consequent) << "  "
                << fm::to_fixed2(rule.confidence) << "\n";
  return 0;
}
