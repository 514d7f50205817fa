#pragma once

#include <stdexcept>
#include <string>

namespace specforge {

enum class ErrKind { Parse, Admit, Eval, Query, BadArg, Io };

class Error : public std::runtime_error {
public:
  Error(ErrKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrKind kind() const { return kind_; }

private:
  ErrKind kind_;
};

class ParseError : public Error {
public:
  ParseError(int line, int col, const std::string& msg)
      : Error(ErrKind::Parse,
              std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_;
  int col_;
};

// Why an evaluation stopped; the checker turns these into Unknown verdicts.
enum class EvalWhy { FuelExhausted, AbstractFunction, UnboundVariable, Other };

class EvalError : public Error {
public:
  EvalError(EvalWhy why, std::string msg)
      : Error(ErrKind::Eval, std::move(msg)), why_(why) {}
  EvalWhy why() const { return why_; }

private:
  EvalWhy why_;
};

}  // namespace specforge
