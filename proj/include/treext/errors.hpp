#pragma once

#include <stdexcept>
#include <string>

namespace treext {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// degree sequences
struct RejectsEmpty : Error { using Error::Error; };
struct RejectsNonTree : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };

// trees
struct NotATree : Error { using Error::Error; };
struct SameVertex : Error { using Error::Error; };

struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// invariants
struct MissingDistanceValue : Error { using Error::Error; };
struct ROutOfRange : Error { using Error::Error; };
struct OracleSizeExceeded : Error { using Error::Error; };
struct UnknownSelector : Error { using Error::Error; };
struct NonPositiveParameter : Error { using Error::Error; };
struct ConvergenceFailure : Error { using Error::Error; };

// enumeration
struct SizeBoundExceeded : Error { using Error::Error; };

}  // namespace treext
