#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skewbrace {

/// Elements of a finite carrier are the integers 0..n-1; 0 is always the identity.
using Element = int;

enum class ErrorCode {
  kMalformed,          // wrong shape or unparsable input
  kOutOfRange,         // witness: {row, col} or {element}
  kIdentityViolation,  // witness: {row, col}
  kNotLatin,           // witness: {axis (0 = row, 1 = column), index}
  kNotAssociative,     // witness: {a, b, c}
  kCarrierMismatch,
  kIdentityMismatch,
  kNotABrace,  // witness: {x, y, z} violating the compatibility law
  kNotBijective,
  kOrderTooLarge,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<Element> witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<Element>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<Element> witness_;
};

/// Outcome of an exhaustive identity check. `witness` holds the lexicographically
/// first failing tuple when the identity does not hold.
struct CheckResult {
  bool holds = true;
  std::vector<Element> witness;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::vector<Element> w) { return {false, std::move(w)}; }

  explicit operator bool() const noexcept { return holds; }
};

}  // namespace skewbrace
