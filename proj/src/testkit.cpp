#include "termbind/testkit.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "termbind/errors.hpp"

namespace termbind {

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) { return next() % bound; }

GenConfig make_gen_config(const Signature& sig, const SortId& sort,
                          unsigned max_depth, std::uint64_t seed) {
  GenConfig cfg{sig, sort, max_depth, {}, seed};
  for (const VarSortId& vs : sig.varsorts()) {
    cfg.var_pool[vs] = {VarName::user("x"), VarName::user("y"),
                        VarName::user("z")};
  }
  return cfg;
}

namespace {

constexpr unsigned kInf = std::numeric_limits<unsigned>::max();

struct Planner {
  const GenConfig& cfg;
  // Least depth at which each sort reaches ground, pools taken into account.
  std::map<SortId, unsigned> min_depth;

  explicit Planner(const GenConfig& cfg_) : cfg(cfg_) {
    for (const SortId& s : cfg.sig.sorts()) min_depth[s] = kInf;
    for (bool changed = true; changed;) {
      changed = false;
      for (const SortId& s : cfg.sig.sorts()) {
        unsigned d = best_depth(s);
        if (d < min_depth[s]) {
          min_depth[s] = d;
          changed = true;
        }
      }
    }
  }

  bool pool_ok(const VarSortId& vs) const {
    auto it = cfg.var_pool.find(vs);
    return it != cfg.var_pool.end() && !it->second.empty();
  }

  bool var_possible(const SortId& s) const {
    for (const auto& [vs, target] : cfg.sig.as_sort_map()) {
      if (target == s && pool_ok(vs)) return true;
    }
    return false;
  }

  // Depth the op needs below itself, kInf if some child sort is bottomless
  // or some binder has no pool to draw from.
  unsigned op_need(const OpDecl& decl) const {
    unsigned need = 0;
    for (const auto& [i, s] : decl.arity.free) {
      need = std::max(need, min_depth.at(s));
      if (need == kInf) return kInf;
    }
    for (const auto& [j, pair] : decl.arity.bound) {
      if (!pool_ok(pair.first)) return kInf;
      need = std::max(need, min_depth.at(pair.second));
      if (need == kInf) return kInf;
    }
    return need;
  }

  unsigned best_depth(const SortId& s) const {
    if (var_possible(s)) return 0;
    unsigned best = kInf;
    for (const auto& [op, decl] : cfg.sig.ops()) {
      if (!(decl.result == s)) continue;
      unsigned need = op_need(decl);
      if (need != kInf) best = std::min(best, need + 1);
    }
    return best;
  }
};

struct Generator {
  const GenConfig& cfg;
  const Planner& plan;
  Rng rng;

  const std::vector<VarName>& pool(const VarSortId& vs) {
    auto it = cfg.var_pool.find(vs);
    if (it == cfg.var_pool.end() || it->second.empty()) {
      throw std::invalid_argument("gen_term: empty variable pool for varsort " +
                                  vs.name);
    }
    return it->second;
  }

  Term gen_var(const SortId& s) {
    std::vector<VarSortId> options;
    for (const auto& [vs, target] : cfg.sig.as_sort_map()) {
      if (target == s && plan.pool_ok(vs)) options.push_back(vs);
    }
    const VarSortId& vs = options[rng.below(options.size())];
    const std::vector<VarName>& names = pool(vs);
    return Term::var(vs, names[rng.below(names.size())]);
  }

  Term gen_op(const OpSymId& op, const OpDecl& decl, unsigned depth) {
    std::map<unsigned, Term> inputs;
    std::map<unsigned, Abs> bound;
    for (const auto& [i, s] : decl.arity.free) {
      inputs.emplace(i, gen(s, depth));
    }
    for (const auto& [j, pair] : decl.arity.bound) {
      const std::vector<VarName>& names = pool(pair.first);
      bound.emplace(j, Abs{pair.first, names[rng.below(names.size())],
                           gen(pair.second, depth)});
    }
    return Term::op(op, std::move(inputs), std::move(bound));
  }

  // Fastest route to ground: the op minimizing (completion depth, total
  // arity, name). Children get exactly their minimal budgets.
  Term gen_escape(const SortId& s) {
    const OpSymId* best_op = nullptr;
    const OpDecl* best_decl = nullptr;
    unsigned best_need = kInf;
    std::size_t best_size = 0;
    for (const auto& [op, decl] : cfg.sig.ops()) {
      if (!(decl.result == s)) continue;
      unsigned need = plan.op_need(decl);
      if (need == kInf) continue;
      std::size_t size = decl.arity.free.size() + decl.arity.bound.size();
      if (!best_op || need < best_need ||
          (need == best_need && size < best_size)) {
        best_op = &op;
        best_decl = &decl;
        best_need = need;
        best_size = size;
      }
    }
    // Unreachable for inhabited sorts, which gen_term validated.
    if (!best_op) {
      throw UninhabitedSort("no finite term of sort " + s.name);
    }
    std::map<unsigned, Term> inputs;
    std::map<unsigned, Abs> bound;
    for (const auto& [i, cs] : best_decl->arity.free) {
      inputs.emplace(i, gen(cs, plan.min_depth.at(cs)));
    }
    for (const auto& [j, pair] : best_decl->arity.bound) {
      const std::vector<VarName>& names = pool(pair.first);
      bound.emplace(j, Abs{pair.first, names[rng.below(names.size())],
                           gen(pair.second, plan.min_depth.at(pair.second))});
    }
    return Term::op(*best_op, std::move(inputs), std::move(bound));
  }

  Term gen(const SortId& s, unsigned depth) {
    bool var_ok = plan.var_possible(s);
    std::vector<std::pair<const OpSymId*, const OpDecl*>> ops;
    if (depth > 0) {
      for (const auto& [op, decl] : cfg.sig.ops()) {
        if (!(decl.result == s)) continue;
        if (plan.op_need(decl) <= depth - 1) ops.push_back({&op, &decl});
      }
    }
    if (depth == 0 || (!var_ok && ops.empty())) {
      if (var_ok) return gen_var(s);
      return gen_escape(s);
    }
    if (var_ok && (ops.empty() || rng.below(3) == 0)) return gen_var(s);
    const auto& [op, decl] = ops[rng.below(ops.size())];
    return gen_op(*op, *decl, depth - 1);
  }
};

// Every sort a term of sort `start` could involve, plus the varsorts whose
// pools generation might need.
void reachable(const Signature& sig, const SortId& start,
               std::set<SortId>& sorts, std::set<VarSortId>& varsorts) {
  if (!sorts.insert(start).second) return;
  for (const auto& [vs, target] : sig.as_sort_map()) {
    if (target == start) varsorts.insert(vs);
  }
  for (const auto& [op, decl] : sig.ops()) {
    if (!(decl.result == start)) continue;
    for (const auto& [i, s] : decl.arity.free) {
      reachable(sig, s, sorts, varsorts);
    }
    for (const auto& [j, pair] : decl.arity.bound) {
      varsorts.insert(pair.first);
      reachable(sig, pair.second, sorts, varsorts);
    }
  }
}

// Inhabitation irrespective of pools: can a finite term of sort s exist?
std::set<SortId> inhabited_sorts(const Signature& sig) {
  std::set<SortId> inhabited;
  for (const auto& [vs, target] : sig.as_sort_map()) inhabited.insert(target);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [op, decl] : sig.ops()) {
      if (inhabited.count(decl.result)) continue;
      bool ok = true;
      for (const auto& [i, s] : decl.arity.free) ok = ok && inhabited.count(s);
      for (const auto& [j, pair] : decl.arity.bound)
        ok = ok && inhabited.count(pair.second);
      if (ok) {
        inhabited.insert(decl.result);
        changed = true;
      }
    }
  }
  return inhabited;
}

}  // namespace

Term gen_term(const GenConfig& cfg) {
  if (!cfg.sig.has_sort(cfg.sort)) {
    throw UndeclaredIdentifier("gen_term: undeclared sort " + cfg.sort.name);
  }
  std::set<SortId> inhabited = inhabited_sorts(cfg.sig);

  std::set<SortId> sorts;
  std::set<VarSortId> varsorts;
  reachable(cfg.sig, cfg.sort, sorts, varsorts);
  for (const SortId& s : sorts) {
    if (!inhabited.count(s)) {
      throw UninhabitedSort("no finite term of sort " + s.name);
    }
  }
  for (const VarSortId& vs : varsorts) {
    auto it = cfg.var_pool.find(vs);
    if (it == cfg.var_pool.end() || it->second.empty()) {
      throw std::invalid_argument("gen_term: empty variable pool for varsort " +
                                  vs.name);
    }
  }

  Planner plan(cfg);
  Generator g{cfg, plan, Rng(cfg.seed)};
  return g.gen(cfg.sort, cfg.max_depth);
}

namespace {

void collect_all_refs(const Term& t, std::set<VarRef>& out) {
  if (t.is_var()) {
    out.insert(VarRef{t.as_var().sort, t.as_var().name});
    return;
  }
  const OpApp& o = t.as_op();
  for (const auto& [i, sub] : o.inputs) collect_all_refs(sub, out);
  for (const auto& [j, abs] : o.bound_inputs) {
    out.insert(VarRef{abs.sort, abs.name});
    collect_all_refs(abs.body, out);
  }
}

// Rename free occurrences of (vs, from) to `to`, stopping at shadowing
// binders. Sound only when `to` is globally fresh, which freshen ensures.
Term naive_rename(const Term& t, const VarSortId& vs, const VarName& from,
                  const VarName& to) {
  if (t.is_var()) {
    const Var& v = t.as_var();
    if (v.sort == vs && v.name == from) return Term::var(vs, to);
    return t;
  }
  const OpApp& o = t.as_op();
  std::map<unsigned, Term> inputs;
  std::map<unsigned, Abs> bound;
  for (const auto& [i, sub] : o.inputs) {
    inputs.emplace(i, naive_rename(sub, vs, from, to));
  }
  for (const auto& [j, abs] : o.bound_inputs) {
    if (abs.sort == vs && abs.name == from) {
      bound.emplace(j, abs);
    } else {
      bound.emplace(j, Abs{abs.sort, abs.name,
                           naive_rename(abs.body, vs, from, to)});
    }
  }
  return Term::op(o.op, std::move(inputs), std::move(bound));
}

struct Freshener {
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
    for (const auto& [j, abs] : o.bound_inputs) {
      VarName z = take(abs.sort);
      bound.emplace(
          j, Abs{abs.sort, z, go(naive_rename(abs.body, abs.sort, abs.name, z))});
    }
    return Term::op(o.op, std::move(inputs), std::move(bound));
  }
};

Term graft(const Term& t, const Term& y, const VarName& yvar,
           const VarSortId& ys) {
  if (t.is_var()) {
    const Var& v = t.as_var();
    if (v.sort == ys && v.name == yvar) return y;
    return t;
  }
  const OpApp& o = t.as_op();
  std::map<unsigned, Term> inputs;
  std::map<unsigned, Abs> bound;
  for (const auto& [i, sub] : o.inputs) {
    inputs.emplace(i, graft(sub, y, yvar, ys));
  }
  for (const auto& [j, abs] : o.bound_inputs) {
    bound.emplace(j, Abs{abs.sort, abs.name, graft(abs.body, y, yvar, ys)});
  }
  return Term::op(o.op, std::move(inputs), std::move(bound));
}

}  // namespace

Term oracle_subst(const Term& x, const Term& y, const VarName& yvar,
                  const VarSortId& ys) {
  Freshener f;
  collect_all_refs(x, f.avoid);
  collect_all_refs(y, f.avoid);
  f.avoid.insert(VarRef{ys, yvar});
  Term renamed = f.go(x);
  return graft(renamed, y, yvar, ys);
}

namespace {

struct Variator {
  const GenConfig& cfg;
  Rng& rng;

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
    Term body = go(a.body);
    if (rng.below(4) == 0) return Abs{a.sort, a.name, std::move(body)};
    std::vector<VarName> candidates;
    auto it = cfg.var_pool.find(a.sort);
    if (it != cfg.var_pool.end()) {
      for (const VarName& z : it->second) {
        if (z == a.name || fresh(a.sort, z, body)) candidates.push_back(z);
      }
    }
    candidates.push_back(fresh_var(a.sort, free_vars(body)));
    const VarName& z = candidates[rng.below(candidates.size())];
    // Valid rename: z is the old binder or fresh for the body, so swapping
    // the two names in the body keeps the abstraction alpha-equal.
    return Abs{a.sort, z, swap(body, z, a.name, a.sort)};
  }
};

}  // namespace

Term alpha_variant(const Term& t, const GenConfig& cfg, Rng& rng) {
  Variator v{cfg, rng};
  return v.go(t);
}

}  // namespace termbind
