#pragma once

#include <stdexcept>
#include <string>

namespace mapforge {

enum class ErrorCode {
  NotInvolution,
  FixedPointInAlpha,
  NotPermutation,
  Disconnected,
  RootOutOfRange,
  NotBipartite,
  NotBicolorable,
  NotFlippable,
  NotPushable,
  NotUnicellular,
  StemCountMismatch,
  InconsistentLabeling,
  MarkNotRootable,
  GenusZero,
  MarkNotSchemeStem,
  NotSchemeRooted,
  CycleDetected,
  NotSymmetric,
  IdentityViolation,
  OffsetCycle,
  CensusMissing,
  BoundExceeded,
  BadInput,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mapforge
