#pragma once

#include <stdexcept>
#include <string>

namespace frankl {

enum class ErrorKind {
  DomainTooLarge,
  OutOfDomain,
  InvalidWeight,
  EmptyFamily,
  TooLarge,
  OverlappingBase,
  ArityMismatch,
};

const char* to_string(ErrorKind kind) noexcept;

// Every precondition failure in the library surfaces as this exception.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace frankl
