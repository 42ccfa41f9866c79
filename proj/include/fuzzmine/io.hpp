#pragma once

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fuzzmine/dataset.hpp"
#include "fuzzmine/error.hpp"
#include "fuzzmine/taxonomy.hpp"

namespace fuzzmine::io {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// One CSV record; double quotes group fields and "" escapes a quote.
inline std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw Error(ErrorKind::MalformedInput, "unterminated quote in CSV line");
  for (auto& f : fields) f = std::string(trim(f));
  return fields;
}

inline std::vector<std::vector<std::string>> read_csv(std::string_view text, std::string_view expected_header) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    if (!header_seen) {
      if (line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF) line.erase(0, 3);  // UTF-8 BOM
      auto header = split_csv_line(line);
      std::string joined;
      for (std::size_t i = 0; i < header.size(); ++i) joined += (i ? "," : "") + header[i];
      if (joined != expected_header)
        throw Error(ErrorKind::MalformedInput, "expected CSV header '" + std::string(expected_header) + "', got '" + joined + "'");
      header_seen = true;
      continue;
    }
    auto fields = split_csv_line(line);
    if (fields.size() != 2) throw Error(ErrorKind::MalformedInput, "expected 2 CSV fields in '" + line + "'");
    rows.push_back(std::move(fields));
  }
  if (!header_seen) throw Error(ErrorKind::MalformedInput, "missing CSV header '" + std::string(expected_header) + "'");
  return rows;
}

inline bool looks_like_json(std::string_view text) {
  std::string_view t = trim(text);
  return !t.empty() && (t.front() == '{' || t.front() == '[');
}

inline nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedInput, e.what());
  }
}

inline std::vector<std::string> split_items(std::string_view field) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : field) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace detail

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::MalformedInput, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// CSV with header `name,code`, or a JSON object {name: code}.
inline std::vector<TaxonomyRecord> parse_taxonomy(std::string_view text) {
  std::vector<TaxonomyRecord> out;
  if (detail::looks_like_json(text)) {
    auto j = detail::parse_json(text);
    if (!j.is_object()) throw Error(ErrorKind::MalformedInput, "taxonomy JSON must be an object {name: code}");
    for (const auto& [name, code] : j.items()) {
      if (!code.is_string()) throw Error(ErrorKind::MalformedInput, "code for '" + name + "' is not a string");
      out.push_back({name, code.get<std::string>()});
    }
    return out;
  }
  for (auto& row : detail::read_csv(text, "name,code")) out.push_back({std::move(row[0]), std::move(row[1])});
  return out;
}

/// CSV with header `transaction_id,items` (items space separated), or a JSON
/// array of {"id": ..., "items": [...]}.
inline std::vector<TransactionRecord> parse_transactions(std::string_view text) {
  std::vector<TransactionRecord> out;
  if (detail::looks_like_json(text)) {
    auto j = detail::parse_json(text);
    if (!j.is_array()) throw Error(ErrorKind::MalformedInput, "transactions JSON must be an array");
    for (const auto& rec : j) {
      if (!rec.is_object() || !rec.contains("id") || !rec.contains("items") || !rec["id"].is_string() ||
          !rec["items"].is_array())
        throw Error(ErrorKind::MalformedInput, "transaction records need a string 'id' and an 'items' array");
      TransactionRecord r{rec["id"].get<std::string>(), {}};
      for (const auto& item : rec["items"]) {
        if (!item.is_string()) throw Error(ErrorKind::MalformedInput, "item codes must be strings in '" + r.id + "'");
        r.items.push_back(item.get<std::string>());
      }
      out.push_back(std::move(r));
    }
    return out;
  }
  for (auto& row : detail::read_csv(text, "transaction_id,items"))
    out.push_back({std::move(row[0]), detail::split_items(row[1])});
  return out;
}

inline Taxonomy load_taxonomy_file(const std::filesystem::path& path) {
  auto records = parse_taxonomy(read_file(path));
  return load_taxonomy(records);
}

inline std::vector<Transaction> load_transactions_file(const std::filesystem::path& path, const Taxonomy& taxonomy) {
  auto records = parse_transactions(read_file(path));
  return load_transactions(records, taxonomy);
}

}  // namespace fuzzmine::io
