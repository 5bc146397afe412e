#include "coxconn/error.hpp"

namespace coxconn {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidMatrix: return "InvalidMatrix";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::InvalidWindow: return "InvalidWindow";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::NotInInterval: return "NotInInterval";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidSeries: return "InvalidSeries";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace coxconn
