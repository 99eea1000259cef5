#pragma once

#include <stdexcept>
#include <string>

namespace exmc {

/// Base class for all library failures that are not plain precondition
/// violations (those throw std::invalid_argument).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A target or likelihood evaluated to zero where the algorithm divides by it.
class UndefinedDensityError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or grid would exceed the desk-scale budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

class GridMismatchError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  using Error::Error;
};

class NonReversibleError : public Error {
 public:
  using Error::Error;
};

class TooShortTraceError : public Error {
 public:
  using Error::Error;
};

/// A check was requested for a model it does not apply to.
class ModelMismatchError : public Error {
 public:
  using Error::Error;
};

/// Configuration validation failure; `path()` names the offending field.
class ConfigError : public Error {
 public:
  ConfigError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace exmc
