#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace moduli {

enum class ErrorCode {
  NonSquare,
  Singular,
  NotHomogeneous,
  ParseError,
  EvenGenus,
  GenusTooSmall,
  ZeroPolynomial,
  GenusMismatch,
  InexactDivision,
  InconsistentSystem,
  Capacity,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library. The code identifies the contract that
/// was violated; what() carries a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& detail)
      : Error(ErrorCode::ParseError,
              detail + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace moduli
