#include "frankl/error.hpp"

namespace frankl {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DomainTooLarge: return "DomainTooLarge";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::InvalidWeight: return "InvalidWeight";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::OverlappingBase: return "OverlappingBase";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace frankl
