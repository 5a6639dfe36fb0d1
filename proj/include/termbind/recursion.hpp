#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "termbind/alpha.hpp"
#include "termbind/errors.hpp"
#include "termbind/signature.hpp"
#include "termbind/sorting.hpp"
#include "termbind/subst.hpp"
#include "termbind/term.hpp"

namespace termbind {

// A first-order-substitution model: a pair of carriers T (for terms) and A
// (for abstractions) with operations mirroring the term constructors plus
// substitution and freshness. fold_fs maps terms into it; if the model
// satisfies the laws checked by check_model_laws, the fold is the unique
// alpha-invariant map commuting with constructors and substitution.
template <class T, class A>
struct FsModel {
  std::function<T(const VarSortId&, const VarName&)> var;
  std::function<T(const OpSymId&, const std::map<unsigned, T>&,
                  const std::map<unsigned, A>&)>
      op;
  std::function<A(const VarSortId&, const VarName&, const T&)> abs;
  // SUBST(tX, tY, y, ys): the image of X[Y/y] given images of X and Y.
  std::function<T(const T&, const T&, const VarName&, const VarSortId&)> subst;
  std::function<A(const A&, const T&, const VarName&, const VarSortId&)>
      subst_abs;
  std::function<bool(const VarSortId&, const VarName&, const T&)> fresh;
  std::function<bool(const VarSortId&, const VarName&, const A&)> fresh_abs;
  // Equality on T the laws are stated with.
  std::function<bool(const T&, const T&)> eq;
};

// Full-recursion variant: OP also receives the original input maps, and
// FRESH/SUBST receive the original terms alongside their images.
template <class T, class A>
struct FullModel {
  std::function<T(const VarSortId&, const VarName&)> var;
  std::function<T(const OpSymId&, const std::map<unsigned, Term>&,
                  const std::map<unsigned, T>&, const std::map<unsigned, Abs>&,
                  const std::map<unsigned, A>&)>
      op;
  std::function<A(const VarSortId&, const VarName&, const T&)> abs;
  std::function<T(const Term&, const T&, const Term&, const T&, const VarName&,
                  const VarSortId&)>
      subst;
  std::function<bool(const VarSortId&, const VarName&, const Term&, const T&)>
      fresh;
  std::function<bool(const T&, const T&)> eq;
};

// Swapping-based variant: SWAP replaces SUBST as the binding-aware operation.
template <class T, class A>
struct SwapModel {
  std::function<T(const VarSortId&, const VarName&)> var;
  std::function<T(const OpSymId&, const std::map<unsigned, T>&,
                  const std::map<unsigned, A>&)>
      op;
  std::function<A(const VarSortId&, const VarName&, const T&)> abs;
  std::function<T(const T&, const VarName&, const VarName&, const VarSortId&)>
      swap;
  std::function<A(const A&, const VarName&, const VarName&, const VarSortId&)>
      swap_abs;
  std::function<bool(const VarSortId&, const VarName&, const T&)> fresh;
  std::function<bool(const VarSortId&, const VarName&, const A&)> fresh_abs;
  std::function<bool(const T&, const T&)> eq;
};

template <class T, class A>
A fold_fs_abs(const FsModel<T, A>& m, const Abs& a);

template <class T, class A>
T fold_fs(const FsModel<T, A>& m, const Term& t) {
  if (t.is_var()) return m.var(t.as_var().sort, t.as_var().name);
  const OpApp& o = t.as_op();
  std::map<unsigned, T> inputs;
  std::map<unsigned, A> bound;
  for (const auto& [i, sub] : o.inputs) inputs.emplace(i, fold_fs(m, sub));
  for (const auto& [j, abs] : o.bound_inputs)
    bound.emplace(j, fold_fs_abs(m, abs));
  return m.op(o.op, inputs, bound);
}

template <class T, class A>
A fold_fs_abs(const FsModel<T, A>& m, const Abs& a) {
  return m.abs(a.sort, a.name, fold_fs(m, a.body));
}

template <class T, class A>
A fold_full_abs(const FullModel<T, A>& m, const Abs& a);

template <class T, class A>
T fold_full(const FullModel<T, A>& m, const Term& t) {
  if (t.is_var()) return m.var(t.as_var().sort, t.as_var().name);
  const OpApp& o = t.as_op();
  std::map<unsigned, T> inputs;
  std::map<unsigned, A> bound;
  for (const auto& [i, sub] : o.inputs) inputs.emplace(i, fold_full(m, sub));
  for (const auto& [j, abs] : o.bound_inputs)
    bound.emplace(j, fold_full_abs(m, abs));
  return m.op(o.op, o.inputs, inputs, o.bound_inputs, bound);
}

template <class T, class A>
A fold_full_abs(const FullModel<T, A>& m, const Abs& a) {
  return m.abs(a.sort, a.name, fold_full(m, a.body));
}

template <class T, class A>
A fold_swap_abs(const SwapModel<T, A>& m, const Abs& a);

template <class T, class A>
T fold_swap(const SwapModel<T, A>& m, const Term& t) {
  if (t.is_var()) return m.var(t.as_var().sort, t.as_var().name);
  const OpApp& o = t.as_op();
  std::map<unsigned, T> inputs;
  std::map<unsigned, A> bound;
  for (const auto& [i, sub] : o.inputs) inputs.emplace(i, fold_swap(m, sub));
  for (const auto& [j, abs] : o.bound_inputs)
    bound.emplace(j, fold_swap_abs(m, abs));
  return m.op(o.op, inputs, bound);
}

template <class T, class A>
A fold_swap_abs(const SwapModel<T, A>& m, const Abs& a) {
  return m.abs(a.sort, a.name, fold_swap(m, a.body));
}

// Sorted refinement: the fold's postcondition is a caller-supplied sort
// predicate on model values, checked at every node against the sorts the
// signature assigns. fold_fs_sorted throws SortViolation on the first
// predicate failure and IllSorted if the input term does not sort-check.
template <class T, class A>
struct SortedFsModel {
  FsModel<T, A> base;
  std::function<bool(const SortId&, const T&)> wls_t;
  std::function<bool(const VarSortId&, const SortId&, const A&)> wls_abs_t;
};

template <class T, class A>
T fold_fs_sorted_at(const Signature& sig, const SortedFsModel<T, A>& m,
                    const Term& t, const SortId& expect) {
  T out = [&] {
    if (t.is_var()) return m.base.var(t.as_var().sort, t.as_var().name);
    const OpApp& o = t.as_op();
    const OpDecl& decl = *sig.find_op(o.op);
    std::map<unsigned, T> inputs;
    std::map<unsigned, A> bound;
    for (const auto& [i, sub] : o.inputs) {
      inputs.emplace(i, fold_fs_sorted_at(sig, m, sub, decl.arity.free.at(i)));
    }
    for (const auto& [j, abs] : o.bound_inputs) {
      const auto& [vs, s] = decl.arity.bound.at(j);
      A va = m.base.abs(abs.sort, abs.name,
                        fold_fs_sorted_at(sig, m, abs.body, s));
      if (m.wls_abs_t && !m.wls_abs_t(vs, s, va)) {
        throw SortViolation("abstraction value violates sort (" + vs.name +
                            ", " + s.name + ")");
      }
      bound.emplace(j, std::move(va));
    }
    return m.base.op(o.op, inputs, bound);
  }();
  if (m.wls_t && !m.wls_t(expect, out)) {
    throw SortViolation("value violates sort " + expect.name);
  }
  return out;
}

template <class T, class A>
T fold_fs_sorted(const Signature& sig, const SortedFsModel<T, A>& m,
                 const Term& t) {
  SortReport r = infer_sort(sig, t);
  if (!r.is_sorted()) {
    throw IllSorted("fold_fs_sorted: input term does not sort-check");
  }
  return fold_fs_sorted_at(sig, m, t, r.sorted().sort);
}

// A compositional interpretation domain: operations act on semantic values,
// abstractions become functions on the term domain.
template <class Dt, class Da>
struct SemDomain {
  std::function<Dt(const OpSymId&, const std::map<unsigned, Dt>&,
                   const std::map<unsigned, Da>&)>
      op;
  std::function<Da(const VarSortId&, const std::function<Dt(Dt)>&)> abs;
};

// A total-by-contract assignment of semantic values to variables; lookups
// the underlying function does not cover surface as ValuationUndefined at
// interpretation time.
template <class Dt>
class Valuation {
 public:
  explicit Valuation(std::function<std::optional<Dt>(const VarRef&)> lookup)
      : lookup_(std::move(lookup)) {}

  static Valuation total(std::function<Dt(const VarRef&)> f) {
    return Valuation([f = std::move(f)](const VarRef& v) {
      return std::optional<Dt>(f(v));
    });
  }

  std::optional<Dt> lookup(const VarRef& v) const { return lookup_(v); }

  Valuation updated(VarRef at, Dt value) const {
    auto inner = lookup_;
    return Valuation([inner, at = std::move(at),
                      value = std::move(value)](const VarRef& v) {
      if (v == at) return std::optional<Dt>(value);
      return inner(v);
    });
  }

 private:
  std::function<std::optional<Dt>(const VarRef&)> lookup_;
};

template <class Dt, class Da>
Da interpret_abs(const SemDomain<Dt, Da>& dom, const Valuation<Dt>& val,
                 const Abs& a);

// Environment-passing interpretation: variables look up the valuation,
// operations map through the domain, an abstraction denotes the function
// sending d to the body's value with the binder set to d.
template <class Dt, class Da>
Dt interpret(const SemDomain<Dt, Da>& dom, const Valuation<Dt>& val,
             const Term& t) {
  if (t.is_var()) {
    const Var& v = t.as_var();
    std::optional<Dt> d = val.lookup(VarRef{v.sort, v.name});
    if (!d) {
      throw ValuationUndefined("no value for variable " + v.name.str() +
                               " of varsort " + v.sort.name);
    }
    return *d;
  }
  const OpApp& o = t.as_op();
  std::map<unsigned, Dt> inputs;
  std::map<unsigned, Da> bound;
  for (const auto& [i, sub] : o.inputs)
    inputs.emplace(i, interpret(dom, val, sub));
  for (const auto& [j, abs] : o.bound_inputs)
    bound.emplace(j, interpret_abs(dom, val, abs));
  return dom.op(o.op, inputs, bound);
}

template <class Dt, class Da>
Da interpret_abs(const SemDomain<Dt, Da>& dom, const Valuation<Dt>& val,
                 const Abs& a) {
  VarRef binder{a.sort, a.name};
  auto body = a.body;
  std::function<Dt(Dt)> f = [dom, val, binder, body](Dt d) {
    return interpret(dom, val.updated(binder, std::move(d)), body);
  };
  return dom.abs(a.sort, f);
}

// Renames every binder to a distinct generated name avoiding `avoid`, the
// term's free variables and each other: the Barendregt convention made
// deterministic. The result is alpha-equivalent to the input.
Term refresh_binders(const Term& t, const std::set<VarRef>& avoid);
Abs refresh_binders(const Abs& a, const std::set<VarRef>& avoid);

// The binding-less shape of a term: variables become empty leaves, an
// abstraction's skeleton sits at index 0 of a unary branch.
class Tree {
 public:
  Tree();
  Tree(std::map<unsigned, Tree> free, std::map<unsigned, Tree> bound);

  const std::map<unsigned, Tree>& free() const;
  const std::map<unsigned, Tree>& bound() const;

  bool operator==(const Tree& other) const;

  std::string str() const;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

Tree skel(const Term& t);
Tree skel(const Abs& a);

// Property harness for model implementations: samples generated terms and
// checks (a) alpha-invariance of the fold, (b) commutation with
// substitution (swapping, for swap models), and (c) freshness preservation.
// Reports every violated instance with a printable counterexample.
struct LawFailure {
  std::string law;
  std::string detail;
};

struct LawReport {
  std::size_t cases = 0;
  std::vector<LawFailure> failures;

  bool passed() const { return failures.empty(); }
};

namespace law_detail {

// Deterministic pick of an interesting variable: free variables first,
// then binder occurrences.
std::optional<VarRef> pick_var(const Term& t, std::uint64_t salt);
std::string describe(const Term& t);
void collect_binders(const Term& t, std::vector<VarRef>& out);

}  // namespace law_detail

template <class T, class A>
LawReport check_model_laws(const FsModel<T, A>& m,
                           const std::function<Term(std::uint64_t)>& gen,
                           std::size_t n) {
  LawReport report;
  for (std::uint64_t i = 0; i < n; ++i) {
    Term x = gen(i);
    ++report.cases;

    Term xv = refresh_binders(x, {});
    if (!m.eq(fold_fs(m, x), fold_fs(m, xv))) {
      report.failures.push_back(
          {"alpha-invariance", law_detail::describe(x)});
    }

    if (std::optional<VarRef> yref = law_detail::pick_var(x, i)) {
      Term y = gen(n + i);
      Term lhs_t = subst(x, y, yref->name, yref->sort);
      T lhs = fold_fs(m, lhs_t);
      T rhs = m.subst(fold_fs(m, x), fold_fs(m, y), yref->name, yref->sort);
      if (!m.eq(lhs, rhs)) {
        report.failures.push_back(
            {"subst-commutation", law_detail::describe(x) + " [" +
                                      law_detail::describe(y) + "/" +
                                      yref->name.str() + "]"});
      }

      VarName f = fresh_var(yref->sort, free_vars(x));
      if (!m.fresh(yref->sort, f, fold_fs(m, x))) {
        report.failures.push_back(
            {"freshness-preservation",
             f.str() + " fresh in " + law_detail::describe(x)});
      }
    }
  }
  return report;
}

template <class T, class A>
LawReport check_model_laws(const FullModel<T, A>& m,
                           const std::function<Term(std::uint64_t)>& gen,
                           std::size_t n) {
  LawReport report;
  for (std::uint64_t i = 0; i < n; ++i) {
    Term x = gen(i);
    ++report.cases;

    Term xv = refresh_binders(x, {});
    if (!m.eq(fold_full(m, x), fold_full(m, xv))) {
      report.failures.push_back(
          {"alpha-invariance", law_detail::describe(x)});
    }

    if (std::optional<VarRef> yref = law_detail::pick_var(x, i)) {
      Term y = gen(n + i);
      Term lhs_t = subst(x, y, yref->name, yref->sort);
      T lhs = fold_full(m, lhs_t);
      T rhs = m.subst(x, fold_full(m, x), y, fold_full(m, y), yref->name,
                      yref->sort);
      if (!m.eq(lhs, rhs)) {
        report.failures.push_back(
            {"subst-commutation", law_detail::describe(x) + " [" +
                                      law_detail::describe(y) + "/" +
                                      yref->name.str() + "]"});
      }

      VarName f = fresh_var(yref->sort, free_vars(x));
      if (!m.fresh(yref->sort, f, x, fold_full(m, x))) {
        report.failures.push_back(
            {"freshness-preservation",
             f.str() + " fresh in " + law_detail::describe(x)});
      }
    }
  }
  return report;
}

template <class T, class A>
LawReport check_model_laws(const SwapModel<T, A>& m,
                           const std::function<Term(std::uint64_t)>& gen,
                           std::size_t n) {
  LawReport report;
  for (std::uint64_t i = 0; i < n; ++i) {
    Term x = gen(i);
    ++report.cases;

    Term xv = refresh_binders(x, {});
    if (!m.eq(fold_swap(m, x), fold_swap(m, xv))) {
      report.failures.push_back(
          {"alpha-invariance", law_detail::describe(x)});
    }

    if (std::optional<VarRef> z1 = law_detail::pick_var(x, i)) {
      // Alternate between a second in-term name and a certainly-fresh one:
      // swapping two occurring names and swapping one out of the term
      // exercise different failure modes.
      std::optional<VarRef> other = law_detail::pick_var(x, i + 1);
      VarName z2 = (i % 2 == 1 && other && other->sort == z1->sort)
                       ? other->name
                       : fresh_var(z1->sort, free_vars(x));
      Term lhs_t = swap(x, z1->name, z2, z1->sort);
      T lhs = fold_swap(m, lhs_t);
      T rhs = m.swap(fold_swap(m, x), z1->name, z2, z1->sort);
      if (!m.eq(lhs, rhs)) {
        report.failures.push_back(
            {"swap-commutation", law_detail::describe(x) + " [" +
                                     z1->name.str() + "<->" + z2.str() + "]"});
      }

      VarName f = fresh_var(z1->sort, free_vars(x));
      if (!m.fresh(z1->sort, f, fold_swap(m, x))) {
        report.failures.push_back(
            {"freshness-preservation",
             f.str() + " fresh in " + law_detail::describe(x)});
      }
    }
  }
  return report;
}

}  // namespace termbind
