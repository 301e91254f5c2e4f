#include "dpar/policy.hpp"

#include <algorithm>
#include <string>

#include "dpar/charset.hpp"

namespace dpar {

std::string_view to_string(Violation v) noexcept {
  switch (v) {
    case Violation::min_length: return "min_length";
    case Violation::needs_letter: return "needs_letter";
    case Violation::needs_digit: return "needs_digit";
    case Violation::needs_symbol: return "needs_symbol";
    case Violation::unsupported_charset: return "unsupported_charset";
  }
  return "unknown";
}

PolicyResult validate_policy(std::string_view password, const PasswordPolicy& policy) {
  PolicyResult result;
  const auto has = [password](auto pred) {
    return std::any_of(password.begin(), password.end(), pred);
  };

  if (password.size() < policy.min_length) result.violations.push_back(Violation::min_length);
  if (policy.require_letter && !has(is_letter)) {
    result.violations.push_back(Violation::needs_letter);
  }
  if (policy.require_digit && !has(is_digit)) {
    result.violations.push_back(Violation::needs_digit);
  }
  if (policy.require_symbol && !has(is_symbol)) {
    result.violations.push_back(Violation::needs_symbol);
  }
  if (has([](char c) { return !is_supported(c); })) {
    result.violations.push_back(Violation::unsupported_charset);
  }
  result.valid = result.violations.empty();
  return result;
}

namespace {

std::string describe(const std::vector<Violation>& violations) {
  std::string msg = "password policy violated:";
  for (Violation v : violations) {
    msg += ' ';
    msg += to_string(v);
  }
  return msg;
}

}  // namespace

PolicyError::PolicyError(std::vector<Violation> violations)
    : Error(describe(violations)), violations_(std::move(violations)) {}

}  // namespace dpar
