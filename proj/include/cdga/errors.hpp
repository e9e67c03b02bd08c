// Exception hierarchy shared by the library and the command line tool.
//
// The CLI maps each family onto a stable exit status: parse errors exit 1,
// mathematical check failures exit 2, precondition violations exit 3.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace cdga {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input (file syntax, schema, element expressions).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(line ? what + " (line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ")"
                   : what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Raised while parsing element expressions like "2*(y⊗xy) - x⊗x".
class ExpressionParseError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Structurally invalid algebra data: unknown labels, degree violations,
/// products or differentials that do not respect the grading.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// A computed object fails a mathematical property it must have
/// (d² ≠ 0, a map that is not a module map, inconsistent sign rules, ...).
class MathError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (wrong parity of the formal
/// dimension, an element of the wrong degree, a non-cocycle, ...).
class PreconditionError : public Error {
 public:
  PreconditionError(std::string code, const std::string& what)
      : Error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

class MixedParents : public Error {
 public:
  MixedParents() : Error("elements belong to different algebras") {}
};

}  // namespace cdga
