#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fuzzmine {

enum class ErrorKind {
  // taxonomy
  MalformedCode,
  LevelOutOfRange,
  EmptyTaxonomy,
  DuplicateName,
  DuplicateCode,
  InconsistentDepth,
  // dataset
  UnknownLeafCode,
  DuplicateTransactionId,
  EmptyTransaction,
  InvalidChi,
  // fuzzy support
  TransactionNotInDataset,
  MixedLevels,
  EmptyItemset,
  // miner / oracle
  InvalidThreshold,
  MissingThreshold,
  InvalidConfig,
  UniverseTooLarge,
  // rules
  ZeroAntecedentSupport,
  ItemsetNotFound,
  InvalidRule,
  // io
  MalformedInput,
};

constexpr std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedCode: return "MalformedCode";
    case ErrorKind::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorKind::EmptyTaxonomy: return "EmptyTaxonomy";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::DuplicateCode: return "DuplicateCode";
    case ErrorKind::InconsistentDepth: return "InconsistentDepth";
    case ErrorKind::UnknownLeafCode: return "UnknownLeafCode";
    case ErrorKind::DuplicateTransactionId: return "DuplicateTransactionId";
    case ErrorKind::EmptyTransaction: return "EmptyTransaction";
    case ErrorKind::InvalidChi: return "InvalidChi";
    case ErrorKind::TransactionNotInDataset: return "TransactionNotInDataset";
    case ErrorKind::MixedLevels: return "MixedLevels";
    case ErrorKind::EmptyItemset: return "EmptyItemset";
    case ErrorKind::InvalidThreshold: return "InvalidThreshold";
    case ErrorKind::MissingThreshold: return "MissingThreshold";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorKind::ZeroAntecedentSupport: return "ZeroAntecedentSupport";
    case ErrorKind::ItemsetNotFound: return "ItemsetNotFound";
    case ErrorKind::InvalidRule: return "InvalidRule";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

/// Configuration problems (thresholds, limits) as opposed to bad input data.
constexpr bool is_config_error(ErrorKind kind) noexcept {
  return kind == ErrorKind::InvalidChi || kind == ErrorKind::InvalidThreshold ||
         kind == ErrorKind::MissingThreshold || kind == ErrorKind::InvalidConfig;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace fuzzmine
