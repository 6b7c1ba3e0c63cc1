#pragma once

#include <stdexcept>
#include <string>

namespace uncsens {

// Violated precondition on a public operation (shape mismatch, empty batch, ...).
struct contract_error : std::invalid_argument {
  explicit contract_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Mathematically invalid argument value (negative variance, ...).
struct domain_error : std::domain_error {
  explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

// Malformed input file; message carries the exact location.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad or inconsistent configuration (unknown field, missing column, ...).
struct config_error : std::runtime_error {
  explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace uncsens
