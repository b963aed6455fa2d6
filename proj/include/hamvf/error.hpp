#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hamvf {

enum class ErrorCode {
  invalid_argument,
  not_exactly_evaluable,
  arity_mismatch,
  non_closed_constant,
  grid_out_of_domain,
  config_error,
};

/// Base class of every error raised by the solver core.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(ErrorCode::invalid_argument, what) {}
};

/// An exact value was requested but an exponential factor e^{r t} with r t != 0 is present.
class NotExactlyEvaluable : public Error {
 public:
  explicit NotExactlyEvaluable(const std::string& what)
      : Error(ErrorCode::not_exactly_evaluable, what) {}
};

class ArityMismatch : public Error {
 public:
  explicit ArityMismatch(const std::string& what) : Error(ErrorCode::arity_mismatch, what) {}
};

/// A definite-integral constant is not rational. The message carries the constant in
/// symbolic form (sum of q_i * e^(c_i)).
class NonClosedConstant : public Error {
 public:
  NonClosedConstant(const std::string& what, std::string constant)
      : Error(ErrorCode::non_closed_constant, what), constant_(std::move(constant)) {}
  const std::string& constant() const noexcept { return constant_; }

 private:
  std::string constant_;
};

class GridOutOfDomain : public Error {
 public:
  explicit GridOutOfDomain(const std::string& what) : Error(ErrorCode::grid_out_of_domain, what) {}
};

class ConfigError : public Error {
 public:
  ConfigError(std::size_t line, const std::string& reason)
      : Error(ErrorCode::config_error, format(line, reason)), line_(line), reason_(reason) {}
  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  static std::string format(std::size_t line, const std::string& reason) {
    return line == 0 ? reason : "line " + std::to_string(line) + ": " + reason;
  }
  std::size_t line_;
  std::string reason_;
};

}  // namespace hamvf
