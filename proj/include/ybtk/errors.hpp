#pragma once

#include <stdexcept>
#include <string>

namespace ybtk {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or rejected input (bad tables, bad parameters, parse failures).
/// CLI maps these to exit status 2.
class InputError : public Error {
public:
  using Error::Error;
};

class OutOfRangeError : public InputError {
public:
  OutOfRangeError(int row, int col, int value, int n)
      : InputError("table entry out of range: t[" + std::to_string(row) + "][" +
                   std::to_string(col) + "] = " + std::to_string(value) +
                   ", carrier is {0,...," + std::to_string(n - 1) + "}") {}
};

class RaggedError : public InputError {
public:
  explicit RaggedError(int row)
      : InputError("table is not rectangular: row " + std::to_string(row) +
                   " has the wrong length") {}
};

class NotLeftQuasigroupError : public InputError {
public:
  explicit NotLeftQuasigroupError(int row)
      : InputError("row " + std::to_string(row) +
                   " is not a permutation (left translation not bijective)") {}
};

class NotRightQuasigroupError : public InputError {
public:
  explicit NotRightQuasigroupError(int col)
      : InputError("column " + std::to_string(col) +
                   " is not a permutation (right translation not bijective)") {}
};

/// A law referencing \ or / (or loop inverses) was asked of a structure
/// that cannot supply them.
class LawNeedsDivisionError : public InputError {
public:
  using InputError::InputError;
};

class NotPowerAssociativeError : public InputError {
public:
  using InputError::InputError;
};

class MissingDivisionError : public InputError {
public:
  using InputError::InputError;
};

class NotBruckError : public InputError {
public:
  using InputError::InputError;
};

class Not2DivisibleError : public InputError {
public:
  using InputError::InputError;
};

class NotInvolutiveError : public InputError {
public:
  using InputError::InputError;
};

class NotAutomorphismError : public InputError {
public:
  using InputError::InputError;
};

class NotLbdsError : public InputError {
public:
  using InputError::InputError;
};

class NotIdempotentError : public InputError {
public:
  using InputError::InputError;
};

class NotLsQuandleError : public InputError {
public:
  using InputError::InputError;
};

class BadOrderPairError : public InputError {
public:
  using InputError::InputError;
};

class UnknownFamilyError : public InputError {
public:
  using InputError::InputError;
};

class BadParamsError : public InputError {
public:
  using InputError::InputError;
};

class InvalidSymmetricSpaceError : public InputError {
public:
  using InputError::InputError;
};

class InfeasibleSizeError : public InputError {
public:
  using InputError::InputError;
};

class ParseError : public InputError {
public:
  ParseError(int line, const std::string& what)
      : InputError("parse error at line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

/// Backtracking search ran out of nodes. CLI maps this to exit status 3.
class SearchBudgetExceeded : public Error {
public:
  explicit SearchBudgetExceeded(long long budget)
      : Error("search budget exceeded (" + std::to_string(budget) +
              " nodes); retry with a higher budget"),
        budget_(budget) {}
  long long budget() const { return budget_; }

private:
  long long budget_;
};

/// Numeric acceptance check failed its tolerance.
class ToleranceExceeded : public Error {
public:
  ToleranceExceeded(double worst, double tol)
      : Error("residual " + std::to_string(worst) + " exceeds tolerance " +
              std::to_string(tol)),
        worst_(worst) {}
  double worst() const { return worst_; }

private:
  double worst_;
};

}  // namespace ybtk
