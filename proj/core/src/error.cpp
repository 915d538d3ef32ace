#include "pentamod/error.hpp"

namespace pentamod {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::AntipodalEndpoints: return "AntipodalEndpoints";
    case ErrorCode::DegenerateArc: return "DegenerateArc";
    case ErrorCode::AntipodeOfOrigin: return "AntipodeOfOrigin";
    case ErrorCode::UnsupportedSolid: return "UnsupportedSolid";
    case ErrorCode::SingularMap: return "SingularMap";
    case ErrorCode::DegenerateAnchor: return "DegenerateAnchor";
    case ErrorCode::AntipodalConstruction: return "AntipodalConstruction";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NoRootInDisk: return "NoRootInDisk";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace pentamod
