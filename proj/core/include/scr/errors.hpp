#pragma once

#include <stdexcept>
#include <string>

namespace scr {

/// Input data violated a documented precondition (bad CSV row, broken
/// record invariant, invalid configuration value).
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A numerical routine left its supported regime (factorization failure,
/// negligible-mass truncation region, domain error).
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Filesystem failure (missing input, unwritable output).
class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace scr
