#pragma once

#include <stdexcept>
#include <string>

namespace worm3 {

enum class ErrorKind {
  InvalidPoint,
  OutOfRange,
  EmptyBoundary,
  NotOnBoundary,
  DegenerateFrame,
  InvalidParams,
  NonSmoothPoint,
  OutsideSupport,
  GridTooCoarse,
  BranchViolation,
  NonConvergent,
  OnWall,
  TooCloseToContour,
  ConfigError,
};

const char* to_string(ErrorKind kind);

/// Single exception type; callers switch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace worm3
