#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gtcut {

// Bad argument to an operation (length mismatch, index out of range, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Inconsistent generator / training / loop configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Instance too large for the exact solver.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed instance file; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Malformed or incompatible model file.
class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A base solver returned a configuration worse than the one it started from.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Approximation ratio against a zero optimum.
class UndefinedRatio : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Signed-rank test with every paired difference equal to zero.
class DegenerateTest : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace gtcut
