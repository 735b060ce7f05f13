#pragma once

#include <stdexcept>
#include <string>

namespace wrcl {

/// Base class for every engine error.
class EngineError : public std::runtime_error {
public:
  explicit EngineError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when a partial semiring addition is applied to incompatible
/// operands (e.g. probabilities summing above one).
class AdditionUndefinedError : public EngineError {
public:
  AdditionUndefinedError(std::string lhs, std::string rhs, const std::string& where = {})
      : EngineError("addition undefined on operands " + lhs + " and " + rhs +
                    (where.empty() ? std::string{} : " (" + where + ")")),
        lhs_(std::move(lhs)),
        rhs_(std::move(rhs)) {}

  const std::string& lhs() const { return lhs_; }
  const std::string& rhs() const { return rhs_; }

private:
  std::string lhs_, rhs_;
};

class DomainOverflowError : public EngineError {
public:
  DomainOverflowError(const std::string& var, long long value, long long domain)
      : EngineError("assignment to " + var + " produced " + std::to_string(value) +
                    ", outside the domain [0, " + std::to_string(domain - 1) + "]") {}
};

class TypeMismatchError : public EngineError {
public:
  explicit TypeMismatchError(const std::string& msg) : EngineError(msg) {}
};

class ParseError : public EngineError {
public:
  ParseError(const std::string& msg, int line, int column)
      : EngineError(msg + " at line " + std::to_string(line) + ", column " +
                    std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_, column_;
};

class WellDefinednessError : public EngineError {
public:
  WellDefinednessError(const std::string& node, const std::string& witness)
      : EngineError("program is not well-defined for this semiring: " + node +
                    (witness.empty() ? std::string{} : ", witness state " + witness)) {}
};

class StateSpaceTooLargeError : public EngineError {
public:
  StateSpaceTooLargeError(unsigned long long size, unsigned long long cap)
      : EngineError("state space has " + std::to_string(size) +
                    " states, exceeding the cap of " + std::to_string(cap)) {}
};

class FixpointBudgetExceededError : public EngineError {
public:
  explicit FixpointBudgetExceededError(unsigned long long iters)
      : EngineError("fixpoint iteration did not converge within " +
                    std::to_string(iters) + " steps") {}
};

class PathBudgetExceededError : public EngineError {
public:
  explicit PathBudgetExceededError(unsigned long long budget)
      : EngineError("path enumeration exceeded the budget of " +
                    std::to_string(budget) + " paths") {}
};

class ExhaustiveTooLargeError : public EngineError {
public:
  explicit ExhaustiveTooLargeError(unsigned long long states)
      : EngineError("exhaustive subset check needs 2^" + std::to_string(states) +
                    " subsets; use search mode instead") {}
};

class SemiringMismatchError : public EngineError {
public:
  explicit SemiringMismatchError(const std::string& msg) : EngineError(msg) {}
};

class SemiringNotNumericError : public EngineError {
public:
  explicit SemiringNotNumericError(const std::string& msg) : EngineError(msg) {}
};

class NegativeHyperValueError : public EngineError {
public:
  explicit NegativeHyperValueError(double value)
      : EngineError("hyperquantity evaluated to the negative value " +
                    std::to_string(value) +
                    " where a nonnegative result is required") {}
};

class LinearityViolationError : public EngineError {
public:
  explicit LinearityViolationError(const std::string& msg) : EngineError(msg) {}
};

}  // namespace wrcl
