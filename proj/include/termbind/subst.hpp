#pragma once

#include <map>
#include <optional>

#include "termbind/term.hpp"

namespace termbind {

// A finite partial map from variables to terms, the input of parallel
// substitution. Lookup is strict on both components of the key.
struct Env {
  std::map<VarRef, Term> map;

  const Term* lookup(const VarSortId& vs, const VarName& x) const {
    auto it = map.find(VarRef{vs, x});
    return it == map.end() ? nullptr : &it->second;
  }

  bool operator==(const Env&) const = default;
};

// Capture-avoiding substitution of Y for the free variable (ys, y). Binders
// are renamed (to deterministic fresh names) only when they would capture.
Term subst(const Term& x, const Term& y, const VarName& yvar,
           const VarSortId& ys);
Abs subst(const Abs& a, const Term& y, const VarName& yvar,
          const VarSortId& ys);

// Variable-for-variable substitution: X[(Var xs z)/x].
Term vsubst(const Term& x, const VarName& z, const VarName& xvar,
            const VarSortId& xs);

// Parallel substitution. Every binder is renamed to a fresh name before
// descending (away from the body's free variables, the environment's domain
// and the free variables of its range), even when no capture threatens.
Term psubst(const Term& x, const Env& rho);
Abs psubst(const Abs& a, const Env& rho);

// Monadic composition: psubst(X, env_comp(r1, r2)) == psubst(psubst(X, r1), r2).
// Defined pointwise as r1 undefined at v ? r2(v) : psubst(r1(v), r2).
Env env_comp(const Env& r1, const Env& r2);

}  // namespace termbind
