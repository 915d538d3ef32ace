#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pentamod {

enum class ErrorCode {
  AntipodalEndpoints,
  DegenerateArc,
  AntipodeOfOrigin,
  UnsupportedSolid,
  SingularMap,
  DegenerateAnchor,
  AntipodalConstruction,
  OutOfRange,
  NoRootInDisk,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pentamod
