#pragma once

#include <map>
#include <memory>
#include <set>
#include <variant>

#include "termbind/ids.hpp"

namespace termbind {

struct TermNode;
struct Abs;

// An immutable term: either a variable or an operation applied to finitely
// many terms (free inputs) and abstractions (bound inputs), both keyed by
// index. Copies share structure; equality is structural, never by identity.
class Term {
 public:
  static Term var(VarSortId vs, VarName name);
  static Term op(OpSymId op, std::map<unsigned, Term> inputs,
                 std::map<unsigned, Abs> bound_inputs);

  bool is_var() const;
  // pre: the respective shape; throws std::bad_variant_access otherwise
  const struct Var& as_var() const;
  const struct OpApp& as_op() const;

  bool operator==(const Term& other) const;

 private:
  explicit Term(std::shared_ptr<const TermNode> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const TermNode> node_;
};

// An abstraction: one binder occurrence (sort + name) scoping over a body.
// Not itself a term; it only appears in bound-input position.
struct Abs {
  VarSortId sort;
  VarName name;
  Term body;

  bool operator==(const Abs& other) const;
};

struct Var {
  VarSortId sort;
  VarName name;
};

struct OpApp {
  OpSymId op;
  std::map<unsigned, Term> inputs;
  std::map<unsigned, Abs> bound_inputs;
};

struct TermNode {
  std::variant<Var, OpApp> v;
};

// Structural equality on the raw tree, binder names included. Distinguishes
// alpha-equivalent terms; see alpha.hpp for equality up to renaming.
bool eq_raw(const Term& a, const Term& b);
bool eq_raw(const Abs& a, const Abs& b);

std::set<VarRef> free_vars(const Term& t);
std::set<VarRef> free_vars(const Abs& a);

// True iff (vs, y) does not occur free.
bool fresh(const VarSortId& vs, const VarName& y, const Term& t);
bool fresh(const VarSortId& vs, const VarName& y, const Abs& a);

// Exchanges z1 and z2 at varsort zs everywhere, binder occurrences included.
Term swap(const Term& t, const VarName& z1, const VarName& z2,
          const VarSortId& zs);
Abs swap(const Abs& a, const VarName& z1, const VarName& z2,
         const VarSortId& zs);

// Smallest k such that (vs, g$k) is not in avoid. Deterministic; returned
// names never collide with user input since '$' is rejected there.
VarName fresh_var(const VarSortId& vs, const std::set<VarRef>& avoid);

}  // namespace termbind
