#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rees {

enum class Errc {
  InvalidPartition,
  BarUndefined,
  IndexOutOfRange,
  SpecMismatch,
  BadIndices,
  ZeroPolynomial,
  ZeroDivisor,
  PairBudgetExceeded,
  BoundExceeded,
  ConstraintViolated,
  AmbientMismatch,
  UnsupportedM,
  UnknownVariable,
  ParseError,
  Overflow,
};

constexpr std::string_view errc_name(Errc e) noexcept {
  switch (e) {
    case Errc::InvalidPartition: return "InvalidPartition";
    case Errc::BarUndefined: return "BarUndefined";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::SpecMismatch: return "SpecMismatch";
    case Errc::BadIndices: return "BadIndices";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ZeroDivisor: return "ZeroDivisor";
    case Errc::PairBudgetExceeded: return "PairBudgetExceeded";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::ConstraintViolated: return "ConstraintViolated";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::UnsupportedM: return "UnsupportedM";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::ParseError: return "ParseError";
    case Errc::Overflow: return "Overflow";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message is prefixed with the code name so CLI diagnostics stay greppable.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace rees
