#ifndef PARTLOG_ERROR_HPP
#define PARTLOG_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace partlog {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input does not describe a valid object (overlapping blocks, a relation
/// that is not an equivalence, a malformed identifier, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Two operands live on universes of different sizes.
class SizeMismatch : public Error {
 public:
  SizeMismatch(std::size_t left, std::size_t right)
      : Error("universe size mismatch: " + std::to_string(left) + " vs " +
              std::to_string(right)) {}
};

/// An enumeration guard was hit (adjunctive oracle limit, core size, etc.).
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// The refuter's assignment budget would be exceeded.
class BudgetExceeded : public LimitExceeded {
 public:
  using LimitExceeded::LimitExceeded;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(const std::string& name)
      : Error("unbound variable '" + name + "'"), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at position " + std::to_string(position) + ": " +
              message),
        position_(position) {}

  /// Zero-based byte offset into the input.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace partlog

#endif  // PARTLOG_ERROR_HPP
