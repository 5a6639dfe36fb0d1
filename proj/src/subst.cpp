#include "termbind/subst.hpp"

namespace termbind {

Term subst(const Term& x, const Term& y, const VarName& yvar,
           const VarSortId& ys) {
  if (x.is_var()) {
    const Var& v = x.as_var();
    if (v.sort == ys && v.name == yvar) return y;
    return x;
  }
  const OpApp& o = x.as_op();
  std::map<unsigned, Term> inputs;
  std::map<unsigned, Abs> bound;
  for (const auto& [i, sub] : o.inputs)
    inputs.emplace(i, subst(sub, y, yvar, ys));
  for (const auto& [j, abs] : o.bound_inputs)
    bound.emplace(j, subst(abs, y, yvar, ys));
  return Term::op(o.op, std::move(inputs), std::move(bound));
}

Abs subst(const Abs& a, const Term& y, const VarName& yvar,
          const VarSortId& ys) {
  // The binder shadows the substituted variable.
  if (a.sort == ys && a.name == yvar) return a;
  // No capture possible: descend without renaming.
  if (fresh(a.sort, a.name, y)) {
    return Abs{a.sort, a.name, subst(a.body, y, yvar, ys)};
  }
  // The binder occurs free in Y; rename it first.
  std::set<VarRef> avoid = free_vars(a.body);
  std::set<VarRef> fv_y = free_vars(y);
  avoid.insert(fv_y.begin(), fv_y.end());
  avoid.insert(VarRef{ys, yvar});
  avoid.insert(VarRef{a.sort, a.name});
  VarName z = fresh_var(a.sort, avoid);
  Term renamed = vsubst(a.body, z, a.name, a.sort);
  return Abs{a.sort, z, subst(renamed, y, yvar, ys)};
}

Term vsubst(const Term& x, const VarName& z, const VarName& xvar,
            const VarSortId& xs) {
  return subst(x, Term::var(xs, z), xvar, xs);
}

Term psubst(const Term& x, const Env& rho) {
  if (x.is_var()) {
    const Var& v = x.as_var();
    if (const Term* t = rho.lookup(v.sort, v.name)) return *t;
    return x;
  }
  const OpApp& o = x.as_op();
  std::map<unsigned, Term> inputs;
  std::map<unsigned, Abs> bound;
  for (const auto& [i, sub] : o.inputs) inputs.emplace(i, psubst(sub, rho));
  for (const auto& [j, abs] : o.bound_inputs) bound.emplace(j, psubst(abs, rho));
  return Term::op(o.op, std::move(inputs), std::move(bound));
}

Abs psubst(const Abs& a, const Env& rho) {
  std::set<VarRef> avoid = free_vars(a.body);
  for (const auto& [ref, t] : rho.map) {
    avoid.insert(ref);
    std::set<VarRef> fv = free_vars(t);
    avoid.insert(fv.begin(), fv.end());
  }
  VarName z = fresh_var(a.sort, avoid);
  Term renamed = vsubst(a.body, z, a.name, a.sort);
  return Abs{a.sort, z, psubst(renamed, rho)};
}

Env env_comp(const Env& r1, const Env& r2) {
  Env out;
  for (const auto& [ref, t] : r2.map) out.map.emplace(ref, t);
  for (const auto& [ref, t] : r1.map) {
    out.map.insert_or_assign(ref, psubst(t, r2));
  }
  return out;
}

}  // namespace termbind
