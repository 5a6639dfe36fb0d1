#include "termbind/recursion.hpp"

#include "termbind/io.hpp"

namespace termbind {

namespace {

struct Refresher {
  std::set<VarRef> avoid;
  std::uint64_t next = 0;

  VarName take(const VarSortId& vs) {
    for (;;) {
      VarName cand = VarName::generated(next++);
      if (avoid.insert(VarRef{vs, cand}).second) return cand;
    }
  }

  Term go(const Term& t) {
    if (t.is_var()) return t;
    const OpApp& o = t.as_op();
    std::map<unsigned, Term> inputs;
    std::map<unsigned, Abs> bound;
    for (const auto& [i, sub] : o.inputs) inputs.emplace(i, go(sub));
    for (const auto& [j, abs] : o.bound_inputs) bound.emplace(j, go(abs));
    return Term::op(o.op, std::move(inputs), std::move(bound));
  }

  Abs go(const Abs& a) {
    VarName z = take(a.sort);
    return Abs{a.sort, z, go(vsubst(a.body, z, a.name, a.sort))};
  }
};

}  // namespace

Term refresh_binders(const Term& t, const std::set<VarRef>& avoid) {
  Refresher r{avoid};
  std::set<VarRef> fv = free_vars(t);
  r.avoid.insert(fv.begin(), fv.end());
  return r.go(t);
}

Abs refresh_binders(const Abs& a, const std::set<VarRef>& avoid) {
  Refresher r{avoid};
  std::set<VarRef> fv = free_vars(a);
  r.avoid.insert(fv.begin(), fv.end());
  // The binder itself is renamed too, so only the body's free variables
  // constrain freshness.
  std::set<VarRef> fvb = free_vars(a.body);
  r.avoid.insert(fvb.begin(), fvb.end());
  return r.go(a);
}

struct Tree::Node {
  std::map<unsigned, Tree> free;
  std::map<unsigned, Tree> bound;
};

Tree::Tree() {
  static const std::shared_ptr<const Node> leaf =
      std::make_shared<const Node>();
  node_ = leaf;
}

Tree::Tree(std::map<unsigned, Tree> free, std::map<unsigned, Tree> bound)
    : node_(std::make_shared<const Node>(
          Node{std::move(free), std::move(bound)})) {}

const std::map<unsigned, Tree>& Tree::free() const { return node_->free; }

const std::map<unsigned, Tree>& Tree::bound() const { return node_->bound; }

bool Tree::operator==(const Tree& other) const {
  if (node_ == other.node_) return true;
  return node_->free == other.node_->free && node_->bound == other.node_->bound;
}

std::string Tree::str() const {
  auto print_map = [](const std::map<unsigned, Tree>& m) {
    std::string out = "(";
    bool first = true;
    for (const auto& [i, sub] : m) {
      if (!first) out += " ";
      first = false;
      out += "(" + std::to_string(i) + " " + sub.str() + ")";
    }
    return out + ")";
  };
  return "(branch " + print_map(node_->free) + " " + print_map(node_->bound) +
         ")";
}

Tree skel(const Term& t) {
  if (t.is_var()) return Tree();
  const OpApp& o = t.as_op();
  std::map<unsigned, Tree> free;
  std::map<unsigned, Tree> bound;
  for (const auto& [i, sub] : o.inputs) free.emplace(i, skel(sub));
  for (const auto& [j, abs] : o.bound_inputs) bound.emplace(j, skel(abs));
  return Tree(std::move(free), std::move(bound));
}

Tree skel(const Abs& a) { return Tree({{0, skel(a.body)}}, {}); }

namespace law_detail {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

void collect_binders(const Term& t, std::vector<VarRef>& out) {
  if (t.is_var()) return;
  const OpApp& o = t.as_op();
  for (const auto& [i, sub] : o.inputs) collect_binders(sub, out);
  for (const auto& [j, abs] : o.bound_inputs) {
    out.push_back(VarRef{abs.sort, abs.name});
    collect_binders(abs.body, out);
  }
}

std::optional<VarRef> pick_var(const Term& t, std::uint64_t salt) {
  std::set<VarRef> fv = free_vars(t);
  std::vector<VarRef> candidates(fv.begin(), fv.end());
  if (candidates.empty()) collect_binders(t, candidates);
  if (candidates.empty()) return std::nullopt;
  return candidates[mix(salt) % candidates.size()];
}

std::string describe(const Term& t) { return print_term(t); }

}  // namespace law_detail

}  // namespace termbind
