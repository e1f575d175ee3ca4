#include "worm3/errors.hpp"

namespace worm3 {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidPoint: return "InvalidPoint";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::EmptyBoundary: return "EmptyBoundary";
    case ErrorKind::NotOnBoundary: return "NotOnBoundary";
    case ErrorKind::DegenerateFrame: return "DegenerateFrame";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::NonSmoothPoint: return "NonSmoothPoint";
    case ErrorKind::OutsideSupport: return "OutsideSupport";
    case ErrorKind::GridTooCoarse: return "GridTooCoarse";
    case ErrorKind::BranchViolation: return "BranchViolation";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::OnWall: return "OnWall";
    case ErrorKind::TooCloseToContour: return "TooCloseToContour";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace worm3
