#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "dpar/error.hpp"

namespace dpar {

enum class Violation {
  min_length,
  needs_letter,
  needs_digit,
  needs_symbol,
  unsupported_charset,
};

std::string_view to_string(Violation v) noexcept;

/// Composition rules applied to a user's password. The defaults are the
/// eight-characters/one-letter/one-digit policy.
struct PasswordPolicy {
  std::size_t min_length = 8;
  bool require_letter = true;
  bool require_digit = true;
  bool require_symbol = false;
};

struct PolicyResult {
  bool valid = true;
  std::vector<Violation> violations;
};

/// Violations are reported in enum order. Any byte outside ASCII letters,
/// digits and the 32 keyboard symbols yields `unsupported_charset`.
PolicyResult validate_policy(std::string_view password, const PasswordPolicy& policy = {});

/// Raised when an operation requires a policy-valid password. The message
/// lists violation names only, never the password.
class PolicyError : public Error {
 public:
  explicit PolicyError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

}  // namespace dpar
