#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twinspec {

enum class ErrorCode {
  InvalidArgument,
  InexactDivision,
  ZeroPolynomial,
  EndpointIsRoot,
  NotSquareFree,
  ParseError,
  InvalidEdge,
  InvalidSequence,
  LabelOutOfRange,
  EqualLabels,
  NotTwins,
  NonRealRoots,
  NotIsolating,
  DerivativeVanishes,
  Degenerate,
  RemovedEigenvalueMissing,
  SizeMismatch,
  IndexOutOfRange,
  FixtureMissing,
  NoMatch,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI's JSON error output) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace twinspec
