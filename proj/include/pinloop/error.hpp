#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pinloop {

enum class ErrorCode {
  NotInvolution,
  FixedPointInInvolution,
  BadTransversalPairing,
  NonIntegerGenus,
  DanglingFreeCircleHost,
  NotSimple,
  DisconnectedMap,
  UnknownRegionId,
  ResourceBudgetExceeded,
  TooManyStrands,
  SelfLoopDetected,
  NotBipartite,
  MatchingNotMaximum,
  ComponentWithoutEdge,
  DegreeOutOfRange,
  NotCubic,
  Not3Connected,
  NotGenusZero,
  Disconnected,
  StateNotPinning,
  InvalidGraph,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Domain error carried through every module; the CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace pinloop
