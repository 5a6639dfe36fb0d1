#include "termbind/instances.hpp"

#include <algorithm>
#include <stdexcept>

#include "termbind/errors.hpp"
#include "termbind/sorting.hpp"

namespace termbind {

namespace {

Signature must_validate(const RawSignature& raw, const char* what) {
  auto result = validate_signature(raw);
  if (auto* errors = std::get_if<std::vector<ValidationError>>(&result)) {
    std::string msg = std::string(what) + ": invalid signature:";
    for (const ValidationError& e : *errors) msg += " " + e.detail + ";";
    throw std::invalid_argument(msg);
  }
  return std::get<Signature>(std::move(result));
}

}  // namespace

LambdaKit LambdaKit::standard() {
  LambdaKit kit;
  RawSignature raw;
  raw.sorts = {kit.lam_sort};
  raw.varsorts = {{kit.vlam, kit.lam_sort}};
  raw.ops = {
      {kit.app_op,
       OpDecl{kit.lam_sort,
              Arity{{{0, kit.lam_sort}, {1, kit.lam_sort}}, {}}}},
      {kit.lam_op,
       OpDecl{kit.lam_sort, Arity{{}, {{0, {kit.vlam, kit.lam_sort}}}}}},
  };
  kit.sig = must_validate(raw, "LambdaKit");
  return kit;
}

std::optional<LambdaKit> LambdaKit::from_signature(const Signature& s) {
  std::vector<OpSymId> app_like;
  std::vector<OpSymId> lam_like;
  for (const auto& [op, decl] : s.ops()) {
    const SortId& r = decl.result;
    if (decl.arity.bound.empty() && decl.arity.free.size() == 2 &&
        decl.arity.free.count(0) && decl.arity.free.count(1) &&
        decl.arity.free.at(0) == r && decl.arity.free.at(1) == r) {
      app_like.push_back(op);
    }
    if (decl.arity.free.empty() && decl.arity.bound.size() == 1 &&
        decl.arity.bound.count(0) && decl.arity.bound.at(0).second == r) {
      lam_like.push_back(op);
    }
  }
  auto prefer = [](std::vector<OpSymId>& v, const char* name) -> const OpSymId* {
    if (v.empty()) return nullptr;
    for (const OpSymId& op : v) {
      if (op.name == name) return &op;
    }
    return v.size() == 1 ? &v[0] : nullptr;
  };
  const OpSymId* app = prefer(app_like, "App");
  const OpSymId* lam = prefer(lam_like, "Lam");
  if (!app || !lam) return std::nullopt;
  const OpDecl& app_decl = *s.find_op(*app);
  const OpDecl& lam_decl = *s.find_op(*lam);
  if (!(app_decl.result == lam_decl.result)) return std::nullopt;
  const auto& [vs, body_sort] = lam_decl.arity.bound.at(0);
  if (!(body_sort == lam_decl.result)) return std::nullopt;
  if (!(s.sort_of_var(vs) == lam_decl.result)) return std::nullopt;
  LambdaKit kit;
  kit.sig = s;
  kit.lam_sort = lam_decl.result;
  kit.vlam = vs;
  kit.app_op = *app;
  kit.lam_op = *lam;
  return kit;
}

Term LambdaKit::var(const std::string& name) const {
  return Term::var(vlam, VarName::user(name));
}

Term LambdaKit::app(Term fun, Term arg) const {
  return Term::op(app_op, {{0, std::move(fun)}, {1, std::move(arg)}}, {});
}

Term LambdaKit::lam(const std::string& binder, Term body) const {
  return Term::op(lam_op, {},
                  {{0, Abs{vlam, VarName::user(binder), std::move(body)}}});
}

Term LambdaKit::church(unsigned n) const {
  Term body = var("x");
  for (unsigned i = 0; i < n; ++i) body = app(var("f"), std::move(body));
  return lam("f", lam("x", std::move(body)));
}

Term LambdaKit::plus() const {
  Term body = app(app(var("m"), var("f")),
                  app(app(var("n"), var("f")), var("x")));
  return lam("m", lam("n", lam("f", lam("x", std::move(body)))));
}

namespace {

std::optional<Term> beta_step_raw(const LambdaKit& kit, const Term& t) {
  if (t.is_var()) return std::nullopt;
  const OpApp& o = t.as_op();
  if (o.op == kit.app_op) {
    const Term& fun = o.inputs.at(0);
    const Term& arg = o.inputs.at(1);
    if (!fun.is_var() && fun.as_op().op == kit.lam_op) {
      const Abs& abs = fun.as_op().bound_inputs.at(0);
      return subst(abs.body, arg, abs.name, abs.sort);
    }
    if (std::optional<Term> s = beta_step_raw(kit, fun)) {
      return kit.app(std::move(*s), arg);
    }
    if (std::optional<Term> s = beta_step_raw(kit, arg)) {
      return kit.app(fun, std::move(*s));
    }
    return std::nullopt;
  }
  if (o.op == kit.lam_op) {
    const Abs& abs = o.bound_inputs.at(0);
    if (std::optional<Term> s = beta_step_raw(kit, abs.body)) {
      return Term::op(kit.lam_op, {},
                      {{0, Abs{abs.sort, abs.name, std::move(*s)}}});
    }
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Term> beta_step(const LambdaKit& kit, const Term& t) {
  if (!wls(kit.sig, kit.lam_sort, t)) {
    throw IllSorted("beta_step: term does not sort at " + kit.lam_sort.name);
  }
  return beta_step_raw(kit, t);
}

std::optional<Term> normalize(const LambdaKit& kit, const Term& t,
                              unsigned fuel) {
  if (!wls(kit.sig, kit.lam_sort, t)) {
    throw IllSorted("normalize: term does not sort at " + kit.lam_sort.name);
  }
  Term cur = t;
  for (;;) {
    std::optional<Term> next = beta_step_raw(kit, cur);
    if (!next) return cur;
    if (fuel == 0) return std::nullopt;
    --fuel;
    cur = std::move(*next);
  }
}

FolKit::FolKit(const std::map<std::string, unsigned>& fun_decls,
               const std::map<std::string, unsigned>& pred_decls) {
  RawSignature raw;
  raw.sorts = {trm, fml};
  raw.varsorts = {{vtrm, trm}};
  raw.ops = {
      {and_op, OpDecl{fml, Arity{{{0, fml}, {1, fml}}, {}}}},
      {not_op, OpDecl{fml, Arity{{{0, fml}}, {}}}},
      {all_op, OpDecl{fml, Arity{{}, {{0, {vtrm, fml}}}}}},
  };
  auto add = [&](const std::string& name, unsigned arity, const SortId& result,
                 std::map<OpSymId, unsigned>& into) {
    OpSymId op{name};
    if (op == and_op || op == not_op || op == all_op) {
      throw std::invalid_argument("FolKit: symbol '" + name + "' is reserved");
    }
    Arity a;
    for (unsigned i = 0; i < arity; ++i) a.free.emplace(i, trm);
    raw.ops.push_back({op, OpDecl{result, std::move(a)}});
    into.emplace(op, arity);
  };
  for (const auto& [name, arity] : fun_decls) add(name, arity, trm, funs);
  for (const auto& [name, arity] : pred_decls) add(name, arity, fml, preds);
  sig = must_validate(raw, "FolKit");
}

std::optional<FolKit> FolKit::from_signature(const Signature& s) {
  const OpDecl* and_decl = s.find_op(OpSymId{"And"});
  const OpDecl* not_decl = s.find_op(OpSymId{"Not"});
  const OpDecl* all_decl = s.find_op(OpSymId{"All"});
  if (!and_decl || !not_decl || !all_decl) return std::nullopt;

  const SortId& f = and_decl->result;
  if (and_decl->arity != Arity{{{0, f}, {1, f}}, {}}) return std::nullopt;
  if (not_decl->result != f || not_decl->arity != Arity{{{0, f}}, {}}) {
    return std::nullopt;
  }
  if (all_decl->result != f || all_decl->arity.free.size() != 0 ||
      all_decl->arity.bound.size() != 1 || !all_decl->arity.bound.count(0)) {
    return std::nullopt;
  }
  const auto& [vs, body_sort] = all_decl->arity.bound.at(0);
  if (body_sort != f) return std::nullopt;
  const SortId& t = s.sort_of_var(vs);
  if (t == f) return std::nullopt;

  FolKit kit({}, {});
  kit.sig = s;
  kit.trm = t;
  kit.fml = f;
  kit.vtrm = vs;
  kit.and_op = OpSymId{"And"};
  kit.not_op = OpSymId{"Not"};
  kit.all_op = OpSymId{"All"};
  kit.funs.clear();
  kit.preds.clear();
  for (const auto& [op, decl] : s.ops()) {
    if (op == kit.and_op || op == kit.not_op || op == kit.all_op) continue;
    if (!decl.arity.bound.empty()) return std::nullopt;
    unsigned n = static_cast<unsigned>(decl.arity.free.size());
    for (unsigned i = 0; i < n; ++i) {
      auto it = decl.arity.free.find(i);
      if (it == decl.arity.free.end() || it->second != t) return std::nullopt;
    }
    if (decl.result == t) {
      kit.funs.emplace(op, n);
    } else if (decl.result == f) {
      kit.preds.emplace(op, n);
    } else {
      return std::nullopt;
    }
  }
  return kit;
}

Term FolKit::var(const std::string& name) const {
  return Term::var(vtrm, VarName::user(name));
}

namespace {

Term apply_all_free(const OpSymId& op, const std::vector<Term>& args) {
  std::map<unsigned, Term> inputs;
  for (unsigned i = 0; i < args.size(); ++i) inputs.emplace(i, args[i]);
  return Term::op(op, std::move(inputs), {});
}

}  // namespace

Term FolKit::fun(const std::string& symbol, const std::vector<Term>& args) const {
  auto it = funs.find(OpSymId{symbol});
  if (it == funs.end()) {
    throw std::invalid_argument("FolKit::fun: '" + symbol +
                                "' is not a function symbol");
  }
  if (it->second != args.size()) {
    throw std::invalid_argument("FolKit::fun: '" + symbol + "' takes " +
                                std::to_string(it->second) + " arguments");
  }
  return apply_all_free(OpSymId{symbol}, args);
}

Term FolKit::pred(const std::string& symbol,
                  const std::vector<Term>& args) const {
  auto it = preds.find(OpSymId{symbol});
  if (it == preds.end()) {
    throw std::invalid_argument("FolKit::pred: '" + symbol +
                                "' is not a predicate symbol");
  }
  if (it->second != args.size()) {
    throw std::invalid_argument("FolKit::pred: '" + symbol + "' takes " +
                                std::to_string(it->second) + " arguments");
  }
  return apply_all_free(OpSymId{symbol}, args);
}

Term FolKit::conj(Term a, Term b) const {
  return Term::op(and_op, {{0, std::move(a)}, {1, std::move(b)}}, {});
}

Term FolKit::neg(Term a) const {
  return Term::op(not_op, {{0, std::move(a)}}, {});
}

Term FolKit::all(const std::string& binder, Term body) const {
  return Term::op(all_op, {},
                  {{0, Abs{vtrm, VarName::user(binder), std::move(body)}}});
}

std::string fol_value_str(const FolValue& v) {
  if (std::holds_alternative<bool>(v)) return std::get<bool>(v) ? "true" : "false";
  return std::get<std::string>(v);
}

std::vector<std::string> validate_model(const FolKit& kit,
                                        const FiniteModel& model) {
  std::vector<std::string> problems;
  if (model.carrier.empty()) problems.push_back("empty carrier");
  std::set<std::string> elems(model.carrier.begin(), model.carrier.end());
  if (elems.size() != model.carrier.size()) {
    problems.push_back("duplicate carrier elements");
  }

  // Every tuple over the carrier, in lexicographic order.
  auto each_tuple = [&](unsigned arity, auto&& visit) {
    std::vector<std::string> tuple(arity);
    auto rec = [&](auto&& self, unsigned pos) -> void {
      if (pos == arity) {
        visit(tuple);
        return;
      }
      for (const std::string& c : model.carrier) {
        tuple[pos] = c;
        self(self, pos + 1);
      }
    };
    rec(rec, 0);
  };

  for (const auto& [op, arity] : kit.funs) {
    auto it = model.funs.find(op.name);
    if (it == model.funs.end()) {
      problems.push_back("no table for function '" + op.name + "'");
      continue;
    }
    for (const auto& [args, result] : it->second) {
      if (args.size() != arity) {
        problems.push_back("row of wrong width for function '" + op.name + "'");
      }
      if (!elems.count(result)) {
        problems.push_back("function '" + op.name +
                           "' maps outside the carrier ('" + result + "')");
      }
      for (const std::string& a : args) {
        if (!elems.count(a)) {
          problems.push_back("function '" + op.name +
                             "' row mentions non-carrier '" + a + "'");
        }
      }
    }
    each_tuple(arity, [&](const std::vector<std::string>& tuple) {
      if (!it->second.count(tuple)) {
        std::string row;
        for (const std::string& a : tuple) row += " " + a;
        problems.push_back("function '" + op.name + "' missing row for" +
                           (row.empty() ? " ()" : row));
      }
    });
  }

  for (const auto& [op, arity] : kit.preds) {
    auto it = model.preds.find(op.name);
    if (it == model.preds.end()) continue;  // empty extension: all false
    for (const std::vector<std::string>& tuple : it->second) {
      if (tuple.size() != arity) {
        problems.push_back("tuple of wrong width for predicate '" + op.name +
                           "'");
      }
      for (const std::string& a : tuple) {
        if (!elems.count(a)) {
          problems.push_back("predicate '" + op.name +
                             "' mentions non-carrier '" + a + "'");
        }
      }
    }
  }

  return problems;
}

FolValue eval_fol(const FolKit& kit, const FiniteModel& model,
                  const std::map<VarRef, FolValue>& valuation, const Term& t) {
  SortReport r = infer_sort(kit.sig, t);
  if (!r.is_sorted() ||
      !(r.sorted().sort == kit.trm || r.sorted().sort == kit.fml)) {
    throw IllSorted("eval_fol: input must sort at " + kit.trm.name + " or " +
                    kit.fml.name);
  }
  std::vector<std::string> problems = validate_model(kit, model);
  if (!problems.empty()) {
    throw EvalError("eval_fol: invalid model: " + problems.front());
  }

  auto want_bool = [](const FolValue& v) {
    if (!std::holds_alternative<bool>(v)) {
      throw EvalError("expected a truth value, got carrier element '" +
                      std::get<std::string>(v) + "'");
    }
    return std::get<bool>(v);
  };
  auto want_elem = [&model](const FolValue& v) {
    if (!std::holds_alternative<std::string>(v)) {
      throw EvalError("expected a carrier element, got a truth value");
    }
    const std::string& c = std::get<std::string>(v);
    if (std::find(model.carrier.begin(), model.carrier.end(), c) ==
        model.carrier.end()) {
      throw EvalError("'" + c + "' is not a carrier element");
    }
    return c;
  };

  using Da = std::function<FolValue(FolValue)>;
  SemDomain<FolValue, Da> dom;
  dom.op = [&kit, &model, want_bool, want_elem](
               const OpSymId& op, const std::map<unsigned, FolValue>& inputs,
               const std::map<unsigned, Da>& bound) -> FolValue {
    if (op == kit.and_op) {
      return FolValue(want_bool(inputs.at(0)) && want_bool(inputs.at(1)));
    }
    if (op == kit.not_op) return FolValue(!want_bool(inputs.at(0)));
    if (op == kit.all_op) {
      const Da& body = bound.at(0);
      for (const std::string& c : model.carrier) {
        if (!want_bool(body(FolValue(c)))) return FolValue(false);
      }
      return FolValue(true);
    }
    std::vector<std::string> args;
    args.reserve(inputs.size());
    for (const auto& [i, v] : inputs) args.push_back(want_elem(v));
    if (kit.funs.count(op)) {
      const auto& table = model.funs.at(op.name);
      auto it = table.find(args);
      if (it == table.end()) {
        throw EvalError("function '" + op.name + "' has no row for arguments");
      }
      return FolValue(it->second);
    }
    if (kit.preds.count(op)) {
      auto it = model.preds.find(op.name);
      return FolValue(it != model.preds.end() && it->second.count(args) > 0);
    }
    throw EvalError("operation '" + op.name + "' has no interpretation");
  };
  dom.abs = [](const VarSortId&, const std::function<FolValue(FolValue)>& f) {
    return Da(f);
  };

  Valuation<FolValue> val([&valuation](const VarRef& v) {
    auto it = valuation.find(v);
    return it == valuation.end() ? std::optional<FolValue>()
                                 : std::optional<FolValue>(it->second);
  });
  return interpret(dom, val, t);
}

CcsKit::CcsKit(std::vector<std::string> channels_,
               std::vector<std::set<unsigned>> sum_index_sets_) {
  channels = std::move(channels_);
  sum_index_sets = std::move(sum_index_sets_);
  RawSignature raw;
  raw.sorts = {exp, proc};
  raw.varsorts = {{varexp, exp}};
  raw.ops = {
      {OpSymId{"Zero"}, OpDecl{exp, Arity{}}},
      {OpSymId{"Plus"}, OpDecl{exp, Arity{{{0, exp}, {1, exp}}, {}}}},
  };
  for (const std::string& c : channels) {
    raw.ops.push_back(
        {OpSymId{"Inp_" + c}, OpDecl{proc, Arity{{}, {{0, {varexp, proc}}}}}});
    raw.ops.push_back(
        {OpSymId{"Out_" + c}, OpDecl{proc, Arity{{{0, exp}, {1, proc}}, {}}}});
  }
  for (const std::set<unsigned>& indices : sum_index_sets) {
    Arity a;
    for (unsigned i : indices) a.free.emplace(i, proc);
    raw.ops.push_back({OpSymId{sum_op_name(indices)}, OpDecl{proc, std::move(a)}});
  }
  sig = must_validate(raw, "CcsKit");
}

CcsKit CcsKit::standard() {
  return CcsKit({"a", "b", "c"}, {{}, {0, 1}});
}

std::string CcsKit::sum_op_name(const std::set<unsigned>& indices) {
  std::string name = "Sum";
  for (unsigned i : indices) name += "_" + std::to_string(i);
  return name;
}

Term CcsKit::var(const std::string& name) const {
  return Term::var(varexp, VarName::user(name));
}

Term CcsKit::zero() const { return Term::op(OpSymId{"Zero"}, {}, {}); }

Term CcsKit::plus(Term a, Term b) const {
  return Term::op(OpSymId{"Plus"}, {{0, std::move(a)}, {1, std::move(b)}}, {});
}

namespace {

void require_channel(const std::vector<std::string>& channels,
                     const std::string& channel) {
  for (const std::string& c : channels) {
    if (c == channel) return;
  }
  throw std::invalid_argument("CcsKit: unknown channel '" + channel + "'");
}

}  // namespace

Term CcsKit::inp(const std::string& channel, const std::string& binder,
                 Term body) const {
  require_channel(channels, channel);
  return Term::op(OpSymId{"Inp_" + channel}, {},
                  {{0, Abs{varexp, VarName::user(binder), std::move(body)}}});
}

Term CcsKit::out(const std::string& channel, Term value, Term body) const {
  require_channel(channels, channel);
  return Term::op(OpSymId{"Out_" + channel},
                  {{0, std::move(value)}, {1, std::move(body)}}, {});
}

Term CcsKit::sum(const std::set<unsigned>& indices,
                 const std::map<unsigned, Term>& alternatives) const {
  std::map<unsigned, Term> inputs;
  for (unsigned i : indices) {
    auto it = alternatives.find(i);
    if (it == alternatives.end()) {
      throw std::invalid_argument("CcsKit::sum: missing alternative " +
                                  std::to_string(i));
    }
    inputs.emplace(i, it->second);
  }
  return Term::op(OpSymId{sum_op_name(indices)}, std::move(inputs), {});
}

}  // namespace termbind
