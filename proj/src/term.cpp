#include "termbind/term.hpp"

namespace termbind {

Term Term::var(VarSortId vs, VarName name) {
  return Term(std::make_shared<const TermNode>(
      TermNode{Var{std::move(vs), std::move(name)}}));
}

Term Term::op(OpSymId op, std::map<unsigned, Term> inputs,
              std::map<unsigned, Abs> bound_inputs) {
  return Term(std::make_shared<const TermNode>(TermNode{
      OpApp{std::move(op), std::move(inputs), std::move(bound_inputs)}}));
}

bool Term::is_var() const { return node_->v.index() == 0; }

const Var& Term::as_var() const { return std::get<Var>(node_->v); }

const OpApp& Term::as_op() const { return std::get<OpApp>(node_->v); }

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (is_var() != other.is_var()) return false;
  if (is_var()) {
    const Var& a = as_var();
    const Var& b = other.as_var();
    return a.sort == b.sort && a.name == b.name;
  }
  const OpApp& a = as_op();
  const OpApp& b = other.as_op();
  return a.op == b.op && a.inputs == b.inputs &&
         a.bound_inputs == b.bound_inputs;
}

bool Abs::operator==(const Abs& other) const {
  return sort == other.sort && name == other.name && body == other.body;
}

bool eq_raw(const Term& a, const Term& b) { return a == b; }
bool eq_raw(const Abs& a, const Abs& b) { return a == b; }

namespace {

void collect_free(const Term& t, std::set<VarRef>& out);

void collect_free(const Abs& a, std::set<VarRef>& out) {
  std::set<VarRef> inner;
  collect_free(a.body, inner);
  inner.erase(VarRef{a.sort, a.name});
  out.insert(inner.begin(), inner.end());
}

void collect_free(const Term& t, std::set<VarRef>& out) {
  if (t.is_var()) {
    out.insert(VarRef{t.as_var().sort, t.as_var().name});
    return;
  }
  const OpApp& o = t.as_op();
  for (const auto& [i, sub] : o.inputs) collect_free(sub, out);
  for (const auto& [j, abs] : o.bound_inputs) collect_free(abs, out);
}

}  // namespace

std::set<VarRef> free_vars(const Term& t) {
  std::set<VarRef> out;
  collect_free(t, out);
  return out;
}

std::set<VarRef> free_vars(const Abs& a) {
  std::set<VarRef> out;
  collect_free(a, out);
  return out;
}

bool fresh(const VarSortId& vs, const VarName& y, const Term& t) {
  if (t.is_var()) {
    const Var& v = t.as_var();
    return !(v.sort == vs && v.name == y);
  }
  const OpApp& o = t.as_op();
  for (const auto& [i, sub] : o.inputs) {
    if (!fresh(vs, y, sub)) return false;
  }
  for (const auto& [j, abs] : o.bound_inputs) {
    if (!fresh(vs, y, abs)) return false;
  }
  return true;
}

bool fresh(const VarSortId& vs, const VarName& y, const Abs& a) {
  if (a.sort == vs && a.name == y) return true;
  return fresh(vs, y, a.body);
}

namespace {

VarName swap_name(const VarName& x, const VarName& z1, const VarName& z2) {
  if (x == z1) return z2;
  if (x == z2) return z1;
  return x;
}

}  // namespace

Term swap(const Term& t, const VarName& z1, const VarName& z2,
          const VarSortId& zs) {
  if (t.is_var()) {
    const Var& v = t.as_var();
    if (v.sort == zs) return Term::var(v.sort, swap_name(v.name, z1, z2));
    return t;
  }
  const OpApp& o = t.as_op();
  std::map<unsigned, Term> inputs;
  std::map<unsigned, Abs> bound;
  for (const auto& [i, sub] : o.inputs) inputs.emplace(i, swap(sub, z1, z2, zs));
  for (const auto& [j, abs] : o.bound_inputs)
    bound.emplace(j, swap(abs, z1, z2, zs));
  return Term::op(o.op, std::move(inputs), std::move(bound));
}

Abs swap(const Abs& a, const VarName& z1, const VarName& z2,
         const VarSortId& zs) {
  VarName binder = a.sort == zs ? swap_name(a.name, z1, z2) : a.name;
  return Abs{a.sort, std::move(binder), swap(a.body, z1, z2, zs)};
}

VarName fresh_var(const VarSortId& vs, const std::set<VarRef>& avoid) {
  for (std::uint64_t k = 0;; ++k) {
    VarName cand = VarName::generated(k);
    if (!avoid.count(VarRef{vs, cand})) return cand;
  }
}

}  // namespace termbind
