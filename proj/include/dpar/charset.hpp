#pragma once

#include <string_view>

namespace dpar {

// 10 digits followed by the 32 printable ASCII keyboard symbols.
inline constexpr std::string_view kDigitSymbolAlphabet =
    "0123456789!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~";

static_assert(kDigitSymbolAlphabet.size() == 42);

constexpr bool is_upper(char c) noexcept { return c >= 'A' && c <= 'Z'; }
constexpr bool is_lower(char c) noexcept { return c >= 'a' && c <= 'z'; }
constexpr bool is_letter(char c) noexcept { return is_upper(c) || is_lower(c); }
constexpr bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }

constexpr bool is_symbol(char c) noexcept {
  return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') ||
         (c >= '[' && c <= '`') || (c >= '{' && c <= '~');
}

constexpr bool is_digit_or_symbol(char c) noexcept {
  return is_digit(c) || is_symbol(c);
}

/// Letters, digits and keyboard symbols; everything else (space, control
/// bytes, non-ASCII) is outside the supported alphabet.
constexpr bool is_supported(char c) noexcept {
  return is_letter(c) || is_digit_or_symbol(c);
}

constexpr char to_lower(char c) noexcept {
  return is_upper(c) ? static_cast<char>(c - 'A' + 'a') : c;
}

constexpr char to_upper(char c) noexcept {
  return is_lower(c) ? static_cast<char>(c - 'a' + 'A') : c;
}

}  // namespace dpar
