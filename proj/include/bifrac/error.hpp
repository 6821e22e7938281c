#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bifrac {

enum class ErrorKind {
  MalformedTable,
  NotAOneCell,
  NotAnObject,
  AxiomViolation,
  NotAGroupoid,
  CodomainMismatch,
  BoundaryMismatch,
  CrossCheckFailure,
  Input,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bifrac
