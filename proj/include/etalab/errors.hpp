#pragma once

#include <stdexcept>
#include <string>

namespace etalab {

/// Base of every engine error; kind() is the machine-readable tag used in reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : ParseError("ParseError", line, column, message) {}
  int line() const { return line_; }
  int column() const { return column_; }

 protected:
  ParseError(std::string kind, int line, int column, const std::string& message)
      : Error(std::move(kind), "line " + std::to_string(line) + ", column " +
                                   std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

 private:
  int line_;
  int column_;
};

class UnknownVariable : public ParseError {
 public:
  UnknownVariable(int line, int column, const std::string& name)
      : ParseError("UnknownVariable", line, column, "unknown variable '" + name + "'"),
        name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class HomogeneityError : public Error {
 public:
  explicit HomogeneityError(const std::string& message, int relation = -1, int row = -1)
      : Error("HomogeneityError", message), relation_(relation), row_(row) {}
  /// 0-based relation column and generator row of the offending entry, or -1.
  int relation() const { return relation_; }
  int row() const { return row_; }

 private:
  int relation_;
  int row_;
};

/// The internal-degree bound D is too small for the requested computation.
class DegreeBoundExceeded : public Error {
 public:
  DegreeBoundExceeded(int step, const std::string& message)
      : Error("DegreeBoundExceeded", message), step_(step) {}
  /// Homological step at which the bound ran out (-1 when not tied to a step).
  int step() const { return step_; }

 private:
  int step_;
};

class HypothesisViolation : public Error {
 public:
  explicit HypothesisViolation(const std::string& message) : Error("HypothesisViolation", message) {}
};

class NotPolynomialWithinBound : public Error {
 public:
  explicit NotPolynomialWithinBound(const std::string& message)
      : Error("NotPolynomialWithinBound", message) {}
};

class NotStabilized : public Error {
 public:
  explicit NotStabilized(const std::string& message) : Error("NotStabilized", message) {}
};

class InsufficientWindow : public Error {
 public:
  InsufficientWindow(int suggested_j, const std::string& message)
      : Error("InsufficientWindow", message), suggested_j_(suggested_j) {}
  /// Smallest homological bound J that looks sufficient.
  int suggested_j() const { return suggested_j_; }

 private:
  int suggested_j_;
};

class XDegreeDefect : public Error {
 public:
  explicit XDegreeDefect(const std::string& message) : Error("XDegreeDefect", message) {}
};

}  // namespace etalab
