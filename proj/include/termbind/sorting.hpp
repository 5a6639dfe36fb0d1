#pragma once

#include <string>
#include <variant>
#include <vector>

#include "termbind/signature.hpp"
#include "termbind/term.hpp"

namespace termbind {

// One step of the path from the root of the checked term to the subterm a
// failure report addresses: descend into free input i, bound input j, or
// through an abstraction into its body.
struct PathStep {
  enum class Kind { Free, Bound, AbsBody };
  Kind kind;
  unsigned index = 0;  // unused for AbsBody

  bool operator==(const PathStep&) const = default;
};

enum class SortErrorKind {
  UnknownOpSym,
  UnknownVarSort,
  ArityDomainMismatch,
  ChildSortMismatch,
  BinderVarSortMismatch,
  NotInBar,
};

const char* sort_error_name(SortErrorKind k);

struct SortFailure {
  std::vector<PathStep> path;
  SortErrorKind reason;
  std::string detail;

  bool operator==(const SortFailure& other) const {
    return path == other.path && reason == other.reason;
  }
};

struct Sorted {
  SortId sort;
  bool operator==(const Sorted&) const = default;
};

struct AbsSorted {
  VarSortId varsort;
  SortId sort;
  bool operator==(const AbsSorted&) const = default;
};

// The outcome of sort inference: a term sorts at exactly one sort or fails
// at a unique earliest subterm (children are examined in ascending index
// order, free inputs before bound ones).
class SortReport {
 public:
  SortReport(Sorted s) : v_(std::move(s)) {}
  SortReport(AbsSorted s) : v_(std::move(s)) {}
  SortReport(SortFailure f) : v_(std::move(f)) {}

  bool is_sorted() const { return v_.index() == 0; }
  bool is_abs_sorted() const { return v_.index() == 1; }
  bool is_failure() const { return v_.index() == 2; }

  const Sorted& sorted() const { return std::get<Sorted>(v_); }
  const AbsSorted& abs_sorted() const { return std::get<AbsSorted>(v_); }
  const SortFailure& failure() const { return std::get<SortFailure>(v_); }

  bool operator==(const SortReport&) const = default;

 private:
  std::variant<Sorted, AbsSorted, SortFailure> v_;
};

// Infers the unique sort of t under sig, or reports the earliest failure.
SortReport infer_sort(const Signature& sig, const Term& t);

// Checks an abstraction: its body must sort at some s with (varsort, s)
// actually bindable in sig (i.e. occurring in some bound arity).
SortReport check_abs(const Signature& sig, const Abs& a);

// True iff t sorts at exactly s.
bool wls(const Signature& sig, const SortId& s, const Term& t);

}  // namespace termbind
