#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgut {

enum class ErrorKind {
  IndexOutOfRange,
  LoopEdge,
  InvalidOrder,
  EmptySet,
  OrderTooLarge,
  Disconnected,
  ComplementDisconnected,
  KOutOfRange,
  NoCaseApplies,
  DegenerateDegrees,
  NotTight,
  InvalidFamilyOrder,
  UnknownBound,
  MalformedHeader,
  Truncated,
  TrailingGarbage,
  NonCanonicalPadding,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::ComplementDisconnected: return "ComplementDisconnected";
    case ErrorKind::KOutOfRange: return "KOutOfRange";
    case ErrorKind::NoCaseApplies: return "NoCaseApplies";
    case ErrorKind::DegenerateDegrees: return "DegenerateDegrees";
    case ErrorKind::NotTight: return "NotTight";
    case ErrorKind::InvalidFamilyOrder: return "InvalidFamilyOrder";
    case ErrorKind::UnknownBound: return "UnknownBound";
    case ErrorKind::MalformedHeader: return "MalformedHeader";
    case ErrorKind::Truncated: return "Truncated";
    case ErrorKind::TrailingGarbage: return "TrailingGarbage";
    case ErrorKind::NonCanonicalPadding: return "NonCanonicalPadding";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sgut
