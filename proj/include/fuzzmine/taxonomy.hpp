#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzmine/error.hpp"

namespace fuzzmine {

/// A node of the item hierarchy in positional form: one branch digit (1-9) per
/// level, padded with '*' up to the taxonomy depth. "11**" is the second-level
/// node reached by branch 1 then branch 1; "1112" is a leaf of a depth-4 tree.
class ItemCode {
 public:
  ItemCode() = default;

  /// Builds from the specified digits only; the rest is wildcard.
  static ItemCode from_digits(std::string_view digits, int depth) {
    if (depth < 1) throw Error(ErrorKind::MalformedCode, "depth must be positive");
    if (digits.empty() || static_cast<int>(digits.size()) > depth)
      throw Error(ErrorKind::MalformedCode, "need 1.." + std::to_string(depth) + " digits, got '" + std::string(digits) + "'");
    for (char c : digits)
      if (c < '1' || c > '9') throw Error(ErrorKind::MalformedCode, "branch digit out of 1-9 in '" + std::string(digits) + "'");
    ItemCode code;
    code.text_.assign(digits);
    code.text_.append(static_cast<std::size_t>(depth) - digits.size(), '*');
    code.prefix_len_ = static_cast<int>(digits.size());
    return code;
  }

  int depth() const noexcept { return static_cast<int>(text_.size()); }
  int prefix_len() const noexcept { return prefix_len_; }
  int level() const noexcept { return prefix_len_; }
  bool is_leaf() const noexcept { return prefix_len_ == depth(); }

  std::string_view digits() const noexcept { return std::string_view(text_).substr(0, static_cast<std::size_t>(prefix_len_)); }
  const std::string& render() const noexcept { return text_; }

  /// The ancestor holding the first `level` digits; identity at the own level.
  ItemCode ancestor_at(int level) const {
    if (level < 1 || level > prefix_len_)
      throw Error(ErrorKind::LevelOutOfRange,
                  "level " + std::to_string(level) + " outside 1.." + std::to_string(prefix_len_) + " for " + text_);
    return from_digits(digits().substr(0, static_cast<std::size_t>(level)), depth());
  }

  /// True when this code lies in the subtree rooted at `ancestor` (inclusive).
  bool descends_from(const ItemCode& ancestor) const noexcept {
    return ancestor.depth() == depth() && ancestor.prefix_len_ <= prefix_len_ &&
           digits().substr(0, static_cast<std::size_t>(ancestor.prefix_len_)) == ancestor.digits();
  }

  friend bool operator==(const ItemCode& a, const ItemCode& b) noexcept { return a.text_ == b.text_; }
  friend std::strong_ordering operator<=>(const ItemCode& a, const ItemCode& b) noexcept {
    return a.text_ <=> b.text_;
  }

 private:
  std::string text_;
  int prefix_len_ = 0;
};

/// Parses a rendered code: a run of digits followed only by '*', total length
/// `depth`.
inline ItemCode parse_code(std::string_view text, int depth) {
  if (static_cast<int>(text.size()) != depth)
    throw Error(ErrorKind::MalformedCode,
                "'" + std::string(text) + "' has length " + std::to_string(text.size()) + ", expected " + std::to_string(depth));
  std::size_t n = 0;
  while (n < text.size() && text[n] != '*') {
    if (text[n] < '0' || text[n] > '9')
      throw Error(ErrorKind::MalformedCode, "unexpected character in '" + std::string(text) + "'");
    ++n;
  }
  for (std::size_t i = n; i < text.size(); ++i) {
    if (text[i] != '*') throw Error(ErrorKind::MalformedCode, "digit after wildcard in '" + std::string(text) + "'");
  }
  if (n == 0) throw Error(ErrorKind::MalformedCode, "no branch digits in '" + std::string(text) + "'");
  return ItemCode::from_digits(text.substr(0, n), depth);
}

/// Depth taken from the string length.
inline ItemCode parse_code(std::string_view text) { return parse_code(text, static_cast<int>(text.size())); }

inline ItemCode ancestor_at(const ItemCode& code, int level) { return code.ancestor_at(level); }

struct TaxonomyRecord {
  std::string name;
  std::string code;
};

/// Name <-> code dictionary over a strict tree of fixed depth. Immutable once
/// loaded.
class Taxonomy {
 public:
  int depth() const noexcept { return depth_; }
  std::size_t size() const noexcept { return by_code_.size(); }

  bool contains(const ItemCode& code) const { return by_code_.contains(code); }
  bool is_leaf(const ItemCode& code) const { return code.is_leaf() && contains(code); }

  std::optional<ItemCode> code_of(const std::string& name) const {
    if (auto it = by_name_.find(name); it != by_name_.end()) return it->second;
    return std::nullopt;
  }
  std::optional<std::string> name_of(const ItemCode& code) const {
    if (auto it = by_code_.find(code); it != by_code_.end()) return it->second;
    return std::nullopt;
  }

  std::vector<ItemCode> leaves() const {
    std::vector<ItemCode> out;
    for (const auto& [code, name] : by_code_)
      if (code.is_leaf()) out.push_back(code);
    return out;
  }

  /// Entries in code order.
  const std::map<ItemCode, std::string>& entries() const noexcept { return by_code_; }

  friend Taxonomy load_taxonomy(std::span<const TaxonomyRecord> records);

 private:
  int depth_ = 0;
  std::map<std::string, ItemCode> by_name_;
  std::map<ItemCode, std::string> by_code_;
};

inline Taxonomy load_taxonomy(std::span<const TaxonomyRecord> records) {
  if (records.empty()) throw Error(ErrorKind::EmptyTaxonomy, "no taxonomy records");
  Taxonomy tax;
  tax.depth_ = static_cast<int>(records.front().code.size());
  for (const auto& rec : records) {
    if (static_cast<int>(rec.code.size()) != tax.depth_)
      throw Error(ErrorKind::InconsistentDepth, "code '" + rec.code + "' for '" + rec.name + "' is not " +
                                                    std::to_string(tax.depth_) + " characters");
    ItemCode code = parse_code(rec.code, tax.depth_);
    if (tax.by_name_.contains(rec.name)) throw Error(ErrorKind::DuplicateName, "'" + rec.name + "'");
    if (tax.by_code_.contains(code)) throw Error(ErrorKind::DuplicateCode, "'" + rec.code + "'");
    tax.by_name_.emplace(rec.name, code);
    tax.by_code_.emplace(code, rec.name);
  }
  return tax;
}

}  // namespace fuzzmine
