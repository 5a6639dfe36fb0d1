#pragma once

#include <stdexcept>
#include <string>

namespace termbind {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lookup of a sort/varsort/opsym that the signature does not declare.
struct UndeclaredIdentifier : Error {
  using Error::Error;
};

struct UndeclaredVarSort : UndeclaredIdentifier {
  using UndeclaredIdentifier::UndeclaredIdentifier;
};

struct ParseError : Error {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg + " at " + std::to_string(line_) + ":" +
              std::to_string(col_)),
        line(line_),
        col(col_) {}
};

// interpret() hit a free variable the valuation does not cover.
struct ValuationUndefined : Error {
  using Error::Error;
};

// An operation with a well-sortedness precondition was fed a term that
// does not sort-check.
struct IllSorted : Error {
  using Error::Error;
};

// A sorted fold produced a value violating its sort predicate.
struct SortViolation : Error {
  using Error::Error;
};

// The term generator was asked for a sort no finite term inhabits.
struct UninhabitedSort : Error {
  using Error::Error;
};

// FOL evaluation found a carrier element where a truth value was needed
// (or vice versa), or a non-total function table.
struct EvalError : Error {
  using Error::Error;
};

}  // namespace termbind
