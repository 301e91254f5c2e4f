#pragma once

#include <stdexcept>
#include <string>

namespace dpar {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A PasswordParts value (or other structured input) breaks its invariants.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// A function was called with arguments outside its contract.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Model or l33t-table file could not be parsed.
class FormatError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace dpar
