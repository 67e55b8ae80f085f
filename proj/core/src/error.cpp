#include "skewbrace/error.hpp"

namespace skewbrace {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformed:
      return "Malformed";
    case ErrorCode::kOutOfRange:
      return "OutOfRange";
    case ErrorCode::kIdentityViolation:
      return "IdentityViolation";
    case ErrorCode::kNotLatin:
      return "NotLatin";
    case ErrorCode::kNotAssociative:
      return "NotAssociative";
    case ErrorCode::kCarrierMismatch:
      return "CarrierMismatch";
    case ErrorCode::kIdentityMismatch:
      return "IdentityMismatch";
    case ErrorCode::kNotABrace:
      return "NotABrace";
    case ErrorCode::kNotBijective:
      return "NotBijective";
    case ErrorCode::kOrderTooLarge:
      return "OrderTooLarge";
  }
  return "Unknown";
}

}  // namespace skewbrace
