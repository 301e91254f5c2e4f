#include <doctest.h>

#include "dpar/policy.hpp"

using namespace dpar;

TEST_CASE("policy accepts the eight/letter/digit minimum") {
  CHECK(validate_policy("abc12345").valid);
  CHECK(validate_policy("!1P@ssw0rD2#").valid);
}

TEST_CASE("policy reports each missing clause") {
  auto r = validate_policy("password");
  CHECK_FALSE(r.valid);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0] == Violation::needs_digit);

  r = validate_policy("pass1");
  CHECK(r.violations == std::vector<Violation>{Violation::min_length});

  r = validate_policy("12345678");
  CHECK(r.violations == std::vector<Violation>{Violation::needs_letter});

  r = validate_policy("");
  CHECK(r.violations ==
        std::vector<Violation>{Violation::min_length, Violation::needs_letter, Violation::needs_digit});
}

TEST_CASE("non-ASCII and whitespace are unsupported") {
  auto r = validate_policy("p\xc3\xa4ssword1");
  CHECK_FALSE(r.valid);
  CHECK(r.violations.back() == Violation::unsupported_charset);
  CHECK(validate_policy("pass word1").violations ==
        std::vector<Violation>{Violation::unsupported_charset});
}

TEST_CASE("policy is configurable") {
  PasswordPolicy p;
  p.min_length = 4;
  p.require_digit = false;
  p.require_symbol = true;
  CHECK(validate_policy("abc!", p).valid);
  CHECK(validate_policy("abcd", p).violations == std::vector<Violation>{Violation::needs_symbol});
}

TEST_CASE("PolicyError names violations, not the password") {
  PolicyError e({Violation::min_length, Violation::needs_digit});
  CHECK(std::string(e.what()) == "password policy violated: min_length needs_digit");
}
