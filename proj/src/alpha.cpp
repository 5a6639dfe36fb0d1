#include "termbind/alpha.hpp"

#include <stdexcept>
#include <vector>

namespace termbind {

bool alpha_eq(const Term& a, const Term& b) {
  if (a.is_var() != b.is_var()) return false;
  if (a.is_var()) {
    const Var& va = a.as_var();
    const Var& vb = b.as_var();
    return va.sort == vb.sort && va.name == vb.name;
  }
  const OpApp& oa = a.as_op();
  const OpApp& ob = b.as_op();
  if (oa.op != ob.op) return false;
  if (oa.inputs.size() != ob.inputs.size()) return false;
  if (oa.bound_inputs.size() != ob.bound_inputs.size()) return false;
  for (auto ita = oa.inputs.begin(), itb = ob.inputs.begin();
       ita != oa.inputs.end(); ++ita, ++itb) {
    if (ita->first != itb->first) return false;
    if (!alpha_eq(ita->second, itb->second)) return false;
  }
  for (auto ita = oa.bound_inputs.begin(), itb = ob.bound_inputs.begin();
       ita != oa.bound_inputs.end(); ++ita, ++itb) {
    if (ita->first != itb->first) return false;
    if (!alpha_eq(ita->second, itb->second)) return false;
  }
  return true;
}

bool alpha_eq(const Abs& a, const Abs& b) {
  if (a.sort != b.sort) return false;
  std::set<VarRef> avoid = free_vars(a.body);
  std::set<VarRef> fvb = free_vars(b.body);
  avoid.insert(fvb.begin(), fvb.end());
  avoid.insert(VarRef{a.sort, a.name});
  avoid.insert(VarRef{b.sort, b.name});
  VarName y = fresh_var(a.sort, avoid);
  return alpha_eq(swap(a.body, y, a.name, a.sort),
                  swap(b.body, y, b.name, b.sort));
}

bool alpha_eq_forall(const Term& a, const Term& b, std::size_t sample) {
  if (sample == 0) throw std::invalid_argument("alpha_eq_forall: sample == 0");
  if (a.is_var() != b.is_var()) return false;
  if (a.is_var()) {
    const Var& va = a.as_var();
    const Var& vb = b.as_var();
    return va.sort == vb.sort && va.name == vb.name;
  }
  const OpApp& oa = a.as_op();
  const OpApp& ob = b.as_op();
  if (oa.op != ob.op) return false;
  if (oa.inputs.size() != ob.inputs.size()) return false;
  if (oa.bound_inputs.size() != ob.bound_inputs.size()) return false;
  for (auto ita = oa.inputs.begin(), itb = ob.inputs.begin();
       ita != oa.inputs.end(); ++ita, ++itb) {
    if (ita->first != itb->first) return false;
    if (!alpha_eq_forall(ita->second, itb->second, sample)) return false;
  }
  for (auto ita = oa.bound_inputs.begin(), itb = ob.bound_inputs.begin();
       ita != oa.bound_inputs.end(); ++ita, ++itb) {
    if (ita->first != itb->first) return false;
    if (!alpha_eq_forall(ita->second, itb->second, sample)) return false;
  }
  return true;
}

bool alpha_eq_forall(const Abs& a, const Abs& b, std::size_t sample) {
  if (sample == 0) throw std::invalid_argument("alpha_eq_forall: sample == 0");
  if (a.sort != b.sort) return false;
  std::set<VarRef> avoid = free_vars(a.body);
  std::set<VarRef> fvb = free_vars(b.body);
  avoid.insert(fvb.begin(), fvb.end());
  avoid.insert(VarRef{a.sort, a.name});
  avoid.insert(VarRef{b.sort, b.name});
  std::size_t found = 0;
  for (std::uint64_t k = 0; found < sample; ++k) {
    VarName y = VarName::generated(k);
    if (avoid.count(VarRef{a.sort, y})) continue;
    ++found;
    if (!alpha_eq_forall(swap(a.body, y, a.name, a.sort),
                         swap(b.body, y, b.name, b.sort), sample)) {
      return false;
    }
  }
  return true;
}

CanonTerm CanonTerm::free(VarRef ref) {
  return CanonTerm(
      std::make_shared<const CanonNode>(CanonNode{CanonFree{std::move(ref)}}));
}

CanonTerm CanonTerm::bound(VarSortId vs, unsigned distance) {
  return CanonTerm(std::make_shared<const CanonNode>(
      CanonNode{CanonBound{std::move(vs), distance}}));
}

CanonTerm CanonTerm::op(OpSymId op, std::map<unsigned, CanonTerm> inputs,
                        std::map<unsigned, CanonAbs> bound_inputs) {
  return CanonTerm(std::make_shared<const CanonNode>(CanonNode{
      CanonOp{std::move(op), std::move(inputs), std::move(bound_inputs)}}));
}

namespace {

template <class K, class V, class Cmp>
int cmp_map(const std::map<K, V>& a, const std::map<K, V>& b, Cmp cmp_v) {
  auto ita = a.begin();
  auto itb = b.begin();
  for (; ita != a.end() && itb != b.end(); ++ita, ++itb) {
    if (ita->first != itb->first) return ita->first < itb->first ? -1 : 1;
    if (int c = cmp_v(ita->second, itb->second)) return c;
  }
  if (ita != a.end()) return 1;
  if (itb != b.end()) return -1;
  return 0;
}

int cmp_abs(const CanonAbs& a, const CanonAbs& b);

}  // namespace

int CanonTerm::compare(const CanonTerm& other) const {
  const CanonNode& na = *node_;
  const CanonNode& nb = *other.node_;
  if (na.v.index() != nb.v.index()) return na.v.index() < nb.v.index() ? -1 : 1;
  switch (na.v.index()) {
    case 0: {
      const VarRef& ra = std::get<CanonFree>(na.v).ref;
      const VarRef& rb = std::get<CanonFree>(nb.v).ref;
      if (ra == rb) return 0;
      return ra < rb ? -1 : 1;
    }
    case 1: {
      const CanonBound& ba = std::get<CanonBound>(na.v);
      const CanonBound& bb = std::get<CanonBound>(nb.v);
      if (ba.sort != bb.sort) return ba.sort < bb.sort ? -1 : 1;
      if (ba.distance != bb.distance) return ba.distance < bb.distance ? -1 : 1;
      return 0;
    }
    default: {
      const CanonOp& oa = std::get<CanonOp>(na.v);
      const CanonOp& ob = std::get<CanonOp>(nb.v);
      if (oa.op != ob.op) return oa.op < ob.op ? -1 : 1;
      if (int c = cmp_map(oa.inputs, ob.inputs,
                          [](const CanonTerm& x, const CanonTerm& y) {
                            return x.compare(y);
                          })) {
        return c;
      }
      return cmp_map(oa.bound_inputs, ob.bound_inputs, cmp_abs);
    }
  }
}

namespace {

int cmp_abs(const CanonAbs& a, const CanonAbs& b) {
  if (a.sort != b.sort) return a.sort < b.sort ? -1 : 1;
  return a.body.compare(b.body);
}

}  // namespace

bool CanonTerm::operator==(const CanonTerm& other) const {
  return compare(other) == 0;
}

bool CanonTerm::operator<(const CanonTerm& other) const {
  return compare(other) < 0;
}

bool CanonAbs::operator==(const CanonAbs& other) const {
  return cmp_abs(*this, other) == 0;
}

bool CanonAbs::operator<(const CanonAbs& other) const {
  return cmp_abs(*this, other) < 0;
}

std::string CanonTerm::str() const {
  const CanonNode& n = *node_;
  switch (n.v.index()) {
    case 0: {
      const CanonFree& f = std::get<CanonFree>(n.v);
      return "(f " + f.ref.sort.name + " " + f.ref.name.str() + ")";
    }
    case 1: {
      const CanonBound& b = std::get<CanonBound>(n.v);
      return "(b " + b.sort.name + " " + std::to_string(b.distance) + ")";
    }
    default: {
      const CanonOp& o = std::get<CanonOp>(n.v);
      std::string out = "(op " + o.op.name + " (";
      bool first = true;
      for (const auto& [i, sub] : o.inputs) {
        if (!first) out += " ";
        first = false;
        out += "(" + std::to_string(i) + " " + sub.str() + ")";
      }
      out += ") (";
      first = true;
      for (const auto& [j, abs] : o.bound_inputs) {
        if (!first) out += " ";
        first = false;
        out += "(" + std::to_string(j) + " " + abs.str() + ")";
      }
      out += "))";
      return out;
    }
  }
}

std::string CanonAbs::str() const {
  return "(abs " + sort.name + " " + body.str() + ")";
}

namespace {

// The stack of binders in scope, innermost last.
using BinderStack = std::vector<VarRef>;

CanonTerm canon(const Term& t, const BinderStack& stack);

CanonAbs canon(const Abs& a, BinderStack stack) {
  stack.push_back(VarRef{a.sort, a.name});
  return CanonAbs{a.sort, canon(a.body, stack)};
}

CanonTerm canon(const Term& t, const BinderStack& stack) {
  if (t.is_var()) {
    const Var& v = t.as_var();
    // Innermost matching binder wins; distance counts binder levels of any
    // varsort, so shadowing across varsorts resolves by exact (sort, name)
    // match.
    for (std::size_t k = 0; k < stack.size(); ++k) {
      const VarRef& binder = stack[stack.size() - 1 - k];
      if (binder.sort == v.sort && binder.name == v.name) {
        return CanonTerm::bound(v.sort, static_cast<unsigned>(k));
      }
    }
    return CanonTerm::free(VarRef{v.sort, v.name});
  }
  const OpApp& o = t.as_op();
  std::map<unsigned, CanonTerm> inputs;
  std::map<unsigned, CanonAbs> bound;
  for (const auto& [i, sub] : o.inputs) inputs.emplace(i, canon(sub, stack));
  for (const auto& [j, abs] : o.bound_inputs) bound.emplace(j, canon(abs, stack));
  return CanonTerm::op(o.op, std::move(inputs), std::move(bound));
}

}  // namespace

CanonTerm to_canonical(const Term& t) { return canon(t, {}); }

CanonAbs to_canonical(const Abs& a) { return canon(a, {}); }

}  // namespace termbind
