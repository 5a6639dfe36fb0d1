#include "termbind/sorting.hpp"

namespace termbind {

const char* sort_error_name(SortErrorKind k) {
  switch (k) {
    case SortErrorKind::UnknownOpSym: return "UnknownOpSym";
    case SortErrorKind::UnknownVarSort: return "UnknownVarSort";
    case SortErrorKind::ArityDomainMismatch: return "ArityDomainMismatch";
    case SortErrorKind::ChildSortMismatch: return "ChildSortMismatch";
    case SortErrorKind::BinderVarSortMismatch: return "BinderVarSortMismatch";
    case SortErrorKind::NotInBar: return "NotInBar";
  }
  return "?";
}

namespace {

SortFailure fail_here(SortErrorKind reason, std::string detail) {
  return SortFailure{{}, reason, std::move(detail)};
}

SortFailure prefixed(PathStep step, SortFailure inner) {
  inner.path.insert(inner.path.begin(), step);
  return inner;
}

}  // namespace

SortReport infer_sort(const Signature& sig, const Term& t) {
  if (t.is_var()) {
    const Var& v = t.as_var();
    if (!sig.has_varsort(v.sort)) {
      return fail_here(SortErrorKind::UnknownVarSort,
                       "variable of undeclared varsort '" + v.sort.name + "'");
    }
    return Sorted{sig.sort_of_var(v.sort)};
  }

  const OpApp& o = t.as_op();
  const OpDecl* decl = sig.find_op(o.op);
  if (!decl) {
    return fail_here(SortErrorKind::UnknownOpSym,
                     "undeclared opsym '" + o.op.name + "'");
  }

  // The index sets must match the arity exactly, no extras and no holes.
  auto same_keys = [](const auto& got, const auto& want) {
    if (got.size() != want.size()) return false;
    auto itg = got.begin();
    auto itw = want.begin();
    for (; itg != got.end(); ++itg, ++itw) {
      if (itg->first != itw->first) return false;
    }
    return true;
  };
  if (!same_keys(o.inputs, decl->arity.free) ||
      !same_keys(o.bound_inputs, decl->arity.bound)) {
    return fail_here(SortErrorKind::ArityDomainMismatch,
                     "inputs of '" + o.op.name + "' do not match its arity");
  }

  for (const auto& [i, sub] : o.inputs) {
    SortReport r = infer_sort(sig, sub);
    if (r.is_failure()) {
      return prefixed({PathStep::Kind::Free, i}, r.failure());
    }
    const SortId& want = decl->arity.free.at(i);
    if (!(r.sorted().sort == want)) {
      return SortFailure{{{PathStep::Kind::Free, i}},
                         SortErrorKind::ChildSortMismatch,
                         "free input " + std::to_string(i) + " of '" +
                             o.op.name + "' has sort '" + r.sorted().sort.name +
                             "', expected '" + want.name + "'"};
    }
  }

  for (const auto& [j, abs] : o.bound_inputs) {
    const auto& [want_vs, want_s] = decl->arity.bound.at(j);
    if (!(abs.sort == want_vs)) {
      return SortFailure{{{PathStep::Kind::Bound, j}},
                         SortErrorKind::BinderVarSortMismatch,
                         "bound input " + std::to_string(j) + " of '" +
                             o.op.name + "' binds varsort '" + abs.sort.name +
                             "', expected '" + want_vs.name + "'"};
    }
    SortReport body = infer_sort(sig, abs.body);
    if (body.is_failure()) {
      return prefixed({PathStep::Kind::Bound, j},
                      prefixed({PathStep::Kind::AbsBody}, body.failure()));
    }
    if (!(body.sorted().sort == want_s)) {
      return SortFailure{
          {{PathStep::Kind::Bound, j}, {PathStep::Kind::AbsBody}},
          SortErrorKind::ChildSortMismatch,
          "bound input " + std::to_string(j) + " of '" + o.op.name +
              "' has body sort '" + body.sorted().sort.name + "', expected '" +
              want_s.name + "'"};
    }
  }

  return Sorted{decl->result};
}

SortReport check_abs(const Signature& sig, const Abs& a) {
  if (!sig.has_varsort(a.sort)) {
    return fail_here(SortErrorKind::UnknownVarSort,
                     "binder of undeclared varsort '" + a.sort.name + "'");
  }
  SortReport body = infer_sort(sig, a.body);
  if (body.is_failure()) {
    return prefixed({PathStep::Kind::AbsBody}, body.failure());
  }
  const SortId& s = body.sorted().sort;
  if (!sig.is_in_bar(a.sort, s)) {
    return fail_here(SortErrorKind::NotInBar,
                     "no operation binds varsort '" + a.sort.name +
                         "' over sort '" + s.name + "'");
  }
  return AbsSorted{a.sort, s};
}

bool wls(const Signature& sig, const SortId& s, const Term& t) {
  SortReport r = infer_sort(sig, t);
  return r.is_sorted() && r.sorted().sort == s;
}

}  // namespace termbind
