#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sq {

enum class ErrorCode {
  Argument,   // caller passed a structurally invalid argument
  Domain,     // value outside the mathematical domain of the operation
  Singular,   // input hits a singular configuration (e.g. x*y = 0)
  Numeric,    // iteration/root bracketing failure
  Io,         // stream or file failure
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Domain failure for one element of a bulk operation.
class PointDomainError : public Error {
 public:
  PointDomainError(std::size_t index, const std::string& what)
      : Error(ErrorCode::Domain, what), index_(index) {}

  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

}  // namespace sq
