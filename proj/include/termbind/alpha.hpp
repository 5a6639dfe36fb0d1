#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <variant>

#include "termbind/term.hpp"

namespace termbind {

// Alpha-equivalence. Variables must agree exactly; operations must agree on
// the symbol and componentwise on same-keyed inputs; abstractions are
// compared by swapping both binders with one deterministically chosen fresh
// variable and comparing the bodies.
bool alpha_eq(const Term& a, const Term& b);
bool alpha_eq(const Abs& a, const Abs& b);

// The universally-quantified reading of the abstraction clause: instead of
// one fresh witness, the bodies are compared under `sample` distinct fresh
// variables and all comparisons must agree. Equivalent to alpha_eq for any
// sample >= 1; exists to exercise that equivalence. pre: sample >= 1.
bool alpha_eq_forall(const Term& a, const Term& b, std::size_t sample);
bool alpha_eq_forall(const Abs& a, const Abs& b, std::size_t sample);

struct CanonNode;

// A nameless normal form: bound variable occurrences are replaced by the
// distance (in enclosing-binder steps, innermost = 0) to their binder, and
// binders keep only their varsort. Free occurrences keep sort and name.
// Two terms are alpha-equivalent iff their canonical forms are equal, which
// makes this an independent equality oracle and a usable map/hash key.
class CanonTerm {
 public:
  static CanonTerm free(VarRef ref);
  static CanonTerm bound(VarSortId vs, unsigned distance);
  static CanonTerm op(OpSymId op, std::map<unsigned, CanonTerm> inputs,
                      std::map<unsigned, struct CanonAbs> bound_inputs);

  bool operator==(const CanonTerm& other) const;
  bool operator<(const CanonTerm& other) const;
  int compare(const CanonTerm& other) const;

  std::string str() const;

 private:
  explicit CanonTerm(std::shared_ptr<const CanonNode> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const CanonNode> node_;
};

struct CanonAbs {
  VarSortId sort;
  CanonTerm body;

  bool operator==(const CanonAbs& other) const;
  bool operator<(const CanonAbs& other) const;

  std::string str() const;
};

struct CanonFree {
  VarRef ref;
};

struct CanonBound {
  VarSortId sort;
  unsigned distance;
};

struct CanonOp {
  OpSymId op;
  std::map<unsigned, CanonTerm> inputs;
  std::map<unsigned, CanonAbs> bound_inputs;
};

struct CanonNode {
  std::variant<CanonFree, CanonBound, CanonOp> v;
};

CanonTerm to_canonical(const Term& t);
CanonAbs to_canonical(const Abs& a);

}  // namespace termbind
