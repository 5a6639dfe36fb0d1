#include "termbind/io.hpp"

#include <fstream>
#include <sstream>

#include "termbind/errors.hpp"

namespace termbind {

namespace {

[[noreturn]] void fail(const SExpr& at, const std::string& msg) {
  throw ParseError(msg, at.line, at.col);
}

const std::string& atom_of(const SExpr& e, const char* what) {
  if (!e.is_atom()) fail(e, std::string("expected ") + what + ", got a list");
  return e.atom();
}

std::string identifier_of(const SExpr& e, const char* what) {
  const std::string& a = atom_of(e, what);
  if (!is_valid_identifier(a)) {
    fail(e, std::string("invalid ") + what + " '" + a + "'");
  }
  return a;
}

VarName var_name_of(const SExpr& e) {
  const std::string& a = atom_of(e, "variable name");
  std::optional<VarName> name = VarName::parse(a);
  if (!name) fail(e, "invalid variable name '" + a + "'");
  return *name;
}

unsigned index_of(const SExpr& e) {
  const std::string& a = atom_of(e, "index");
  if (a.empty()) fail(e, "empty index");
  unsigned long value = 0;
  for (char c : a) {
    if (c < '0' || c > '9') fail(e, "invalid index '" + a + "'");
    value = value * 10 + static_cast<unsigned long>(c - '0');
    if (value > 0xffffffffUL) fail(e, "index out of range '" + a + "'");
  }
  return static_cast<unsigned>(value);
}

const std::vector<SExpr>& list_of(const SExpr& e, const char* what) {
  if (!e.is_list()) fail(e, std::string("expected ") + what + ", got an atom");
  return e.list();
}

bool headed(const SExpr& e, const char* head) {
  return e.is_list() && !e.list().empty() && e.list()[0].is_atom() &&
         e.list()[0].atom() == head;
}

Term term_of(const SExpr& e);

Abs abs_of(const SExpr& e) {
  const std::vector<SExpr>& items = list_of(e, "abstraction");
  if (items.size() != 4 || !items[0].is_atom() || items[0].atom() != "abs") {
    fail(e, "expected (abs VARSORT NAME TERM)");
  }
  VarSortId vs{identifier_of(items[1], "varsort")};
  VarName name = var_name_of(items[2]);
  return Abs{std::move(vs), std::move(name), term_of(items[3])};
}

Term term_of(const SExpr& e) {
  const std::vector<SExpr>& items = list_of(e, "term");
  if (items.empty() || !items[0].is_atom()) {
    fail(e, "expected (v ...) or (op ...)");
  }
  const std::string& head = items[0].atom();
  if (head == "v") {
    if (items.size() != 3) fail(e, "expected (v VARSORT NAME)");
    VarSortId vs{identifier_of(items[1], "varsort")};
    return Term::var(std::move(vs), var_name_of(items[2]));
  }
  if (head == "op") {
    if (items.size() != 4) {
      fail(e, "expected (op OPSYM FREE-INPUTS BOUND-INPUTS)");
    }
    OpSymId op{identifier_of(items[1], "opsym")};
    std::map<unsigned, Term> inputs;
    for (const SExpr& entry : list_of(items[2], "free inputs")) {
      const std::vector<SExpr>& pair = list_of(entry, "free input");
      if (pair.size() != 2) fail(entry, "expected (INDEX TERM)");
      unsigned i = index_of(pair[0]);
      if (!inputs.emplace(i, term_of(pair[1])).second) {
        fail(pair[0], "duplicate free input index " + std::to_string(i));
      }
    }
    std::map<unsigned, Abs> bound;
    for (const SExpr& entry : list_of(items[3], "bound inputs")) {
      const std::vector<SExpr>& pair = list_of(entry, "bound input");
      if (pair.size() != 2) fail(entry, "expected (INDEX ABS)");
      unsigned j = index_of(pair[0]);
      if (!bound.emplace(j, abs_of(pair[1])).second) {
        fail(pair[0], "duplicate bound input index " + std::to_string(j));
      }
    }
    return Term::op(std::move(op), std::move(inputs), std::move(bound));
  }
  fail(items[0], "unknown term head '" + head + "'");
}

}  // namespace

Term parse_term(std::string_view text) { return term_of(parse_sexpr(text)); }

Abs parse_abs(std::string_view text) { return abs_of(parse_sexpr(text)); }

std::string print_abs(const Abs& a) {
  return "(abs " + a.sort.name + " " + a.name.str() + " " +
         print_term(a.body) + ")";
}

std::string print_term(const Term& t) {
  if (t.is_var()) {
    const Var& v = t.as_var();
    return "(v " + v.sort.name + " " + v.name.str() + ")";
  }
  const OpApp& o = t.as_op();
  std::string out = "(op " + o.op.name + " (";
  bool first = true;
  for (const auto& [i, sub] : o.inputs) {
    if (!first) out += " ";
    first = false;
    out += "(" + std::to_string(i) + " " + print_term(sub) + ")";
  }
  out += ") (";
  first = true;
  for (const auto& [j, abs] : o.bound_inputs) {
    if (!first) out += " ";
    first = false;
    out += "(" + std::to_string(j) + " " + print_abs(abs) + ")";
  }
  out += "))";
  return out;
}

namespace {

RawSignature signature_of(const SExpr& e) {
  const std::vector<SExpr>& items = list_of(e, "signature");
  if (items.size() < 3 || !items[0].is_atom() ||
      items[0].atom() != "signature" || !headed(items[1], "sorts") ||
      !headed(items[2], "varsorts")) {
    fail(e, "expected (signature (sorts ...) (varsorts ...) OPS...)");
  }
  RawSignature raw;
  const std::vector<SExpr>& sorts = items[1].list();
  for (std::size_t k = 1; k < sorts.size(); ++k) {
    raw.sorts.push_back(SortId{identifier_of(sorts[k], "sort")});
  }
  const std::vector<SExpr>& varsorts = items[2].list();
  for (std::size_t k = 1; k < varsorts.size(); ++k) {
    const std::vector<SExpr>& pair = list_of(varsorts[k], "varsort entry");
    if (pair.size() != 2) fail(varsorts[k], "expected (VARSORT SORT)");
    raw.varsorts.push_back({VarSortId{identifier_of(pair[0], "varsort")},
                            SortId{identifier_of(pair[1], "sort")}});
  }
  for (std::size_t k = 3; k < items.size(); ++k) {
    const std::vector<SExpr>& op = list_of(items[k], "op declaration");
    if (op.size() != 5 || !op[0].is_atom() || op[0].atom() != "op" ||
        !headed(op[2], "result") || !headed(op[3], "free") ||
        !headed(op[4], "bound")) {
      fail(items[k],
           "expected (op NAME (result SORT) (free ...) (bound ...))");
    }
    OpSymId name{identifier_of(op[1], "opsym")};
    const std::vector<SExpr>& result = op[2].list();
    if (result.size() != 2) fail(op[2], "expected (result SORT)");
    OpDecl decl;
    decl.result = SortId{identifier_of(result[1], "sort")};
    const std::vector<SExpr>& free = op[3].list();
    for (std::size_t f = 1; f < free.size(); ++f) {
      const std::vector<SExpr>& pair = list_of(free[f], "free arity entry");
      if (pair.size() != 2) fail(free[f], "expected (INDEX SORT)");
      unsigned i = index_of(pair[0]);
      if (!decl.arity.free
               .emplace(i, SortId{identifier_of(pair[1], "sort")})
               .second) {
        fail(pair[0], "duplicate free arity index " + std::to_string(i));
      }
    }
    const std::vector<SExpr>& bound = op[4].list();
    for (std::size_t b = 1; b < bound.size(); ++b) {
      const std::vector<SExpr>& triple = list_of(bound[b], "bound arity entry");
      if (triple.size() != 3) fail(bound[b], "expected (INDEX VARSORT SORT)");
      unsigned j = index_of(triple[0]);
      if (!decl.arity.bound
               .emplace(j, std::pair{VarSortId{identifier_of(triple[1],
                                                             "varsort")},
                                     SortId{identifier_of(triple[2], "sort")}})
               .second) {
        fail(triple[0], "duplicate bound arity index " + std::to_string(j));
      }
    }
    raw.ops.push_back({std::move(name), std::move(decl)});
  }
  return raw;
}

std::string print_op_decl(const OpSymId& op, const OpDecl& decl) {
  std::string out = "(op " + op.name + " (result " + decl.result.name + ")";
  out += " (free";
  for (const auto& [i, s] : decl.arity.free) {
    out += " (" + std::to_string(i) + " " + s.name + ")";
  }
  out += ") (bound";
  for (const auto& [j, pair] : decl.arity.bound) {
    out += " (" + std::to_string(j) + " " + pair.first.name + " " +
           pair.second.name + ")";
  }
  out += "))";
  return out;
}

}  // namespace

RawSignature parse_signature(std::string_view text) {
  return signature_of(parse_sexpr(text));
}

std::string print_signature(const Signature& sig) {
  std::string out = "(signature (sorts";
  for (const SortId& s : sig.sorts()) out += " " + s.name;
  out += ") (varsorts";
  for (const auto& [vs, s] : sig.as_sort_map()) {
    out += " (" + vs.name + " " + s.name + ")";
  }
  out += ")";
  for (const auto& [op, decl] : sig.ops()) {
    out += " " + print_op_decl(op, decl);
  }
  out += ")";
  return out;
}

std::string print_signature(const RawSignature& raw) {
  std::string out = "(signature (sorts";
  for (const SortId& s : raw.sorts) out += " " + s.name;
  out += ") (varsorts";
  for (const auto& [vs, s] : raw.varsorts) {
    out += " (" + vs.name + " " + s.name + ")";
  }
  out += ")";
  for (const auto& [op, decl] : raw.ops) {
    out += " " + print_op_decl(op, decl);
  }
  out += ")";
  return out;
}

Env parse_env(std::string_view text) {
  SExpr e = parse_sexpr(text);
  const std::vector<SExpr>& items = list_of(e, "env");
  if (items.size() != 2 || !items[0].is_atom() || items[0].atom() != "env") {
    fail(e, "expected (env (ENTRY ...))");
  }
  Env env;
  for (const SExpr& entry : list_of(items[1], "env entries")) {
    const std::vector<SExpr>& triple = list_of(entry, "env entry");
    if (triple.size() != 3) fail(entry, "expected (VARSORT NAME TERM)");
    VarRef key{VarSortId{identifier_of(triple[0], "varsort")},
               var_name_of(triple[1])};
    if (!env.map.emplace(std::move(key), term_of(triple[2])).second) {
      fail(entry, "duplicate env entry");
    }
  }
  return env;
}

std::string print_env(const Env& env) {
  std::string out = "(env (";
  bool first = true;
  for (const auto& [ref, t] : env.map) {
    if (!first) out += " ";
    first = false;
    out += "(" + ref.sort.name + " " + ref.name.str() + " " + print_term(t) +
           ")";
  }
  out += "))";
  return out;
}

FiniteModel parse_model(std::string_view text) {
  SExpr e = parse_sexpr(text);
  const std::vector<SExpr>& items = list_of(e, "model");
  if (items.size() < 2 || !items[0].is_atom() || items[0].atom() != "model" ||
      !headed(items[1], "carrier")) {
    fail(e, "expected (model (carrier ...) SECTIONS...)");
  }
  FiniteModel model;
  const std::vector<SExpr>& carrier = items[1].list();
  for (std::size_t k = 1; k < carrier.size(); ++k) {
    model.carrier.push_back(identifier_of(carrier[k], "carrier element"));
  }
  for (std::size_t k = 2; k < items.size(); ++k) {
    const std::vector<SExpr>& section = list_of(items[k], "model section");
    if (section.size() < 2 || !section[0].is_atom()) {
      fail(items[k], "expected (fun ...) or (pred ...)");
    }
    const std::string& head = section[0].atom();
    if (head == "fun") {
      std::string name = identifier_of(section[1], "function symbol");
      auto [it, fresh_sym] = model.funs.emplace(
          name, std::map<std::vector<std::string>, std::string>());
      if (!fresh_sym) fail(section[1], "duplicate function section '" + name + "'");
      for (std::size_t r = 2; r < section.size(); ++r) {
        const std::vector<SExpr>& row = list_of(section[r], "function row");
        if (row.size() != 3 || !row[0].is_list() || !row[1].is_atom() ||
            row[1].atom() != "->") {
          fail(section[r], "expected ((ARGS ...) -> RESULT)");
        }
        std::vector<std::string> args;
        for (const SExpr& a : row[0].list()) {
          args.push_back(identifier_of(a, "carrier element"));
        }
        std::string result = identifier_of(row[2], "carrier element");
        if (!it->second.emplace(std::move(args), std::move(result)).second) {
          fail(section[r], "duplicate row in function '" + name + "'");
        }
      }
    } else if (head == "pred") {
      std::string name = identifier_of(section[1], "predicate symbol");
      auto [it, fresh_sym] =
          model.preds.emplace(name, std::set<std::vector<std::string>>());
      if (!fresh_sym) fail(section[1], "duplicate predicate section '" + name + "'");
      for (std::size_t r = 2; r < section.size(); ++r) {
        std::vector<std::string> tuple;
        for (const SExpr& a : list_of(section[r], "predicate tuple")) {
          tuple.push_back(identifier_of(a, "carrier element"));
        }
        if (!it->second.insert(std::move(tuple)).second) {
          fail(section[r], "duplicate tuple in predicate '" + name + "'");
        }
      }
    } else {
      fail(section[0], "unknown model section '" + head + "'");
    }
  }
  return model;
}

std::string print_model(const FiniteModel& model) {
  std::string out = "(model (carrier";
  for (const std::string& c : model.carrier) out += " " + c;
  out += ")";
  for (const auto& [name, table] : model.funs) {
    out += " (fun " + name;
    for (const auto& [args, result] : table) {
      out += " ((";
      bool first = true;
      for (const std::string& a : args) {
        if (!first) out += " ";
        first = false;
        out += a;
      }
      out += ") -> " + result + ")";
    }
    out += ")";
  }
  for (const auto& [name, tuples] : model.preds) {
    out += " (pred " + name;
    for (const std::vector<std::string>& tuple : tuples) {
      out += " (";
      bool first = true;
      for (const std::string& a : tuple) {
        if (!first) out += " ";
        first = false;
        out += a;
      }
      out += ")";
    }
    out += ")";
  }
  out += ")";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace termbind
