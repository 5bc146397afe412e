#pragma once

#include <stdexcept>
#include <string>

namespace coxconn {

enum class ErrorCode {
  InvalidMatrix,
  GroupTooLarge,
  InvalidWindow,
  RankMismatch,
  GroupMismatch,
  NotComparable,
  NotInInterval,
  OutOfRange,
  InvalidSeries,
  ParseError,
};

const char* to_string(ErrorCode code);

// All library failures surface as this exception; code() tells callers
// (the CLI in particular) which class of failure occurred.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace coxconn
