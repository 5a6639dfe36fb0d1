#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "termbind/ids.hpp"

namespace termbind {

// Shape of one operation symbol: sorts of its free inputs and
// (varsort, sort) pairs of its bound inputs, each keyed by index.
struct Arity {
  std::map<unsigned, SortId> free;
  std::map<unsigned, std::pair<VarSortId, SortId>> bound;

  bool operator==(const Arity&) const = default;
};

struct OpDecl {
  SortId result;
  Arity arity;

  bool operator==(const OpDecl&) const = default;
};

// Unchecked declarations exactly as read: duplicates and dangling
// references are representable and reported by validate_signature.
struct RawSignature {
  std::vector<SortId> sorts;
  std::vector<std::pair<VarSortId, SortId>> varsorts;  // (varsort, its sort)
  std::vector<std::pair<OpSymId, OpDecl>> ops;
};

struct ValidationError {
  enum class Kind {
    DuplicateDeclaration,
    UndeclaredSort,
    NonInjectiveAsSort,
    UndeclaredVarSort,
    InvalidIdentifier,
  };
  Kind kind;
  std::string detail;

  bool operator==(const ValidationError&) const = default;
};

// A validated binding signature. Only validate_signature constructs one, so
// every instance satisfies: varsorts map injectively into declared sorts,
// and all sorts/varsorts mentioned by arities are declared.
class Signature {
 public:
  // The empty signature; every non-empty one comes out of
  // validate_signature, so the invariants hold for all instances.
  Signature() = default;

  const std::set<SortId>& sorts() const { return sorts_; }
  const std::set<VarSortId>& varsorts() const { return varsorts_; }
  const std::map<VarSortId, SortId>& as_sort_map() const { return as_sort_; }
  const std::map<OpSymId, OpDecl>& ops() const { return ops_; }

  bool has_sort(const SortId& s) const { return sorts_.count(s) > 0; }
  bool has_varsort(const VarSortId& vs) const { return varsorts_.count(vs) > 0; }
  const OpDecl* find_op(const OpSymId& op) const;

  // The sort whose variables vs provides. Throws UndeclaredVarSort.
  const SortId& sort_of_var(const VarSortId& vs) const;

  // True iff some operation binds a variable of vs over a body of sort s,
  // i.e. (vs, s) occurs in some bound arity. Throws UndeclaredIdentifier
  // if either argument is not declared.
  bool is_in_bar(const VarSortId& vs, const SortId& s) const;

 private:
  friend std::variant<Signature, std::vector<ValidationError>>
  validate_signature(const RawSignature& raw);

  std::set<SortId> sorts_;
  std::set<VarSortId> varsorts_;
  std::map<VarSortId, SortId> as_sort_;
  std::map<OpSymId, OpDecl> ops_;
  std::set<std::pair<VarSortId, SortId>> bar_;
};

// Checks a raw signature and either produces the validated form or the full
// list of violations (all of them, not just the first).
std::variant<Signature, std::vector<ValidationError>> validate_signature(
    const RawSignature& raw);

}  // namespace termbind
