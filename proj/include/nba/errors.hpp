#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nba {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Elements or tuples over different point sets, or tables of the wrong length.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class SubscriptError : public Error {
 public:
  using Error::Error;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(const std::string& name)
      : Error("unbound variable '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Index constraints (i ∈ d, j ∉ d, i ≠ j, ...) and other caller preconditions.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace nba
