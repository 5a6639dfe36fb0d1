// termbind: sort-check, compare and transform terms over binding signatures.
//
// Exit codes: 0 for success or a positive verdict, 1 for a negative verdict
// (not alpha-equivalent, not fresh, ill-sorted input to `check`, formula
// false, no normal form within fuel), 2 for unusable input (unparsable or
// invalid files, unknown names, terms that fail the entry sort-check).

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "termbind/alpha.hpp"
#include "termbind/errors.hpp"
#include "termbind/instances.hpp"
#include "termbind/io.hpp"
#include "termbind/recursion.hpp"
#include "termbind/sorting.hpp"
#include "termbind/subst.hpp"

namespace tb = termbind;

namespace {

struct UsableInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

tb::Signature load_signature(const std::string& path) {
  auto v = tb::validate_signature(tb::parse_signature(tb::read_file(path)));
  if (auto* errs = std::get_if<std::vector<tb::ValidationError>>(&v)) {
    std::string msg = "invalid signature " + path + ":";
    for (const tb::ValidationError& e : *errs) msg += "\n  " + e.detail;
    throw UsableInputError(msg);
  }
  return std::get<tb::Signature>(v);
}

tb::Term load_term(const std::string& path) {
  return tb::parse_term(tb::read_file(path));
}

// Terms fed to every command except `check` must sort-check up front.
tb::SortId require_sorted(const tb::Signature& sig, const tb::Term& t,
                          const std::string& what) {
  tb::SortReport r = infer_sort(sig, t);
  if (!r.is_sorted()) {
    throw UsableInputError(what + " does not sort-check: " +
                           (r.is_failure() ? r.failure().detail
                                           : std::string("not a plain term")));
  }
  return r.sorted().sort;
}

tb::VarName parse_var(const std::string& s) {
  std::optional<tb::VarName> n = tb::VarName::parse(s);
  if (!n) throw UsableInputError("invalid variable name '" + s + "'");
  return *n;
}

tb::VarSortId parse_varsort(const tb::Signature& sig, const std::string& s) {
  tb::VarSortId vs{s};
  if (!sig.has_varsort(vs)) {
    throw UsableInputError("undeclared varsort '" + s + "'");
  }
  return vs;
}

std::string render_failure(const tb::SortFailure& f) {
  std::string out = "(fail (path";
  for (const tb::PathStep& step : f.path) {
    switch (step.kind) {
      case tb::PathStep::Kind::Free:
        out += " (free " + std::to_string(step.index) + ")";
        break;
      case tb::PathStep::Kind::Bound:
        out += " (bound " + std::to_string(step.index) + ")";
        break;
      case tb::PathStep::Kind::AbsBody:
        out += " abs-body";
        break;
    }
  }
  out += ") ";
  out += tb::sort_error_name(f.reason);
  out += ")";
  return out;
}

int run_check(const tb::Signature& sig, const std::string& term_file,
              const std::string& expect_sort) {
  tb::Term t = load_term(term_file);
  tb::SortReport r = infer_sort(sig, t);
  if (r.is_failure()) {
    std::cout << render_failure(r.failure()) << "\n";
    return 1;
  }
  const tb::SortId& s = r.sorted().sort;
  std::cout << "(sorted " << s.name << ")\n";
  if (!expect_sort.empty() && s.name != expect_sort) return 1;
  return 0;
}

int run_alpha(const tb::Signature& sig,
              const std::vector<std::string>& term_files) {
  tb::Term a = load_term(term_files[0]);
  tb::Term b = load_term(term_files[1]);
  require_sorted(sig, a, "first term");
  require_sorted(sig, b, "second term");
  bool eq = alpha_eq(a, b);
  std::cout << (eq ? "true" : "false") << "\n";
  return eq ? 0 : 1;
}

int run_subst(const tb::Signature& sig, const std::string& term_file,
              const std::string& by_file, const std::string& var,
              const std::string& varsort) {
  tb::Term x = load_term(term_file);
  tb::Term y = load_term(by_file);
  require_sorted(sig, x, "term");
  tb::VarSortId vs = parse_varsort(sig, varsort);
  if (!wls(sig, sig.sort_of_var(vs), y)) {
    throw UsableInputError("replacement does not sort at '" +
                           sig.sort_of_var(vs).name + "'");
  }
  std::cout << tb::print_term(tb::subst(x, y, parse_var(var), vs)) << "\n";
  return 0;
}

int run_psubst(const tb::Signature& sig, const std::string& term_file,
               const std::string& env_file) {
  tb::Term x = load_term(term_file);
  require_sorted(sig, x, "term");
  tb::Env env = tb::parse_env(tb::read_file(env_file));
  for (const auto& [ref, t] : env.map) {
    if (!sig.has_varsort(ref.sort)) {
      throw UsableInputError("environment uses undeclared varsort '" +
                             ref.sort.name + "'");
    }
    if (!wls(sig, sig.sort_of_var(ref.sort), t)) {
      throw UsableInputError("environment entry for " + ref.name.str() +
                             " does not sort at '" +
                             sig.sort_of_var(ref.sort).name + "'");
    }
  }
  std::cout << tb::print_term(tb::psubst(x, env)) << "\n";
  return 0;
}

int run_swap(const tb::Signature& sig, const std::string& term_file,
             const std::vector<std::string>& vars,
             const std::string& varsort) {
  tb::Term x = load_term(term_file);
  require_sorted(sig, x, "term");
  tb::VarSortId vs = parse_varsort(sig, varsort);
  std::cout << tb::print_term(
                   swap(x, parse_var(vars[0]), parse_var(vars[1]), vs))
            << "\n";
  return 0;
}

int run_fresh(const tb::Signature& sig, const std::string& term_file,
              const std::string& var, const std::string& varsort) {
  tb::Term x = load_term(term_file);
  require_sorted(sig, x, "term");
  tb::VarSortId vs = parse_varsort(sig, varsort);
  bool f = tb::fresh(vs, parse_var(var), x);
  std::cout << (f ? "true" : "false") << "\n";
  return f ? 0 : 1;
}

int run_freevars(const tb::Signature& sig, const std::string& term_file) {
  tb::Term x = load_term(term_file);
  require_sorted(sig, x, "term");
  std::string out = "(";
  bool first = true;
  for (const tb::VarRef& v : free_vars(x)) {
    if (!first) out += " ";
    first = false;
    out += "(" + v.sort.name + " " + v.name.str() + ")";
  }
  out += ")";
  std::cout << out << "\n";
  return 0;
}

int run_skel(const tb::Signature& sig, const std::string& term_file) {
  tb::Term x = load_term(term_file);
  require_sorted(sig, x, "term");
  std::cout << skel(x).str() << "\n";
  return 0;
}

tb::LambdaKit require_lambda(const tb::Signature& sig) {
  std::optional<tb::LambdaKit> kit = tb::LambdaKit::from_signature(sig);
  if (!kit) {
    throw UsableInputError(
        "signature is not lambda-shaped (one binary operation and one "
        "unary binder over a single sort)");
  }
  return *kit;
}

int run_beta(const tb::Signature& sig, const std::string& term_file) {
  tb::LambdaKit kit = require_lambda(sig);
  tb::Term x = load_term(term_file);
  require_sorted(sig, x, "term");
  std::optional<tb::Term> s = beta_step(kit, x);
  if (!s) {
    // Already a normal form: echo it with a negative verdict.
    std::cout << tb::print_term(x) << "\n";
    return 1;
  }
  std::cout << tb::print_term(*s) << "\n";
  return 0;
}

int run_normalize(const tb::Signature& sig, const std::string& term_file,
                  unsigned fuel) {
  tb::LambdaKit kit = require_lambda(sig);
  tb::Term x = load_term(term_file);
  require_sorted(sig, x, "term");
  std::optional<tb::Term> v = normalize(kit, x, fuel);
  if (!v) {
    std::cerr << "no normal form within " << fuel << " steps\n";
    return 1;
  }
  std::cout << tb::print_term(*v) << "\n";
  return 0;
}

int run_eval_fol(const tb::Signature& sig, const std::string& term_file,
                 const std::string& model_file, const std::string& val_file) {
  std::optional<tb::FolKit> kit = tb::FolKit::from_signature(sig);
  if (!kit) {
    throw UsableInputError(
        "signature is not first-order-logic-shaped (And/Not/All plus "
        "function and predicate symbols)");
  }
  tb::Term t = load_term(term_file);
  tb::SortId s = require_sorted(sig, t, "term");

  tb::FiniteModel model = tb::parse_model(tb::read_file(model_file));
  std::vector<std::string> problems = validate_model(*kit, model);
  if (!problems.empty()) {
    std::string msg = "invalid model " + model_file + ":";
    for (const std::string& p : problems) msg += "\n  " + p;
    throw UsableInputError(msg);
  }

  // The valuation file is an environment of closed terms; each is evaluated
  // in the model to a carrier element.
  std::map<tb::VarRef, tb::FolValue> valuation;
  if (!val_file.empty()) {
    tb::Env env = tb::parse_env(tb::read_file(val_file));
    for (const auto& [ref, bound] : env.map) {
      if (!(ref.sort == kit->vtrm)) {
        throw UsableInputError("valuation uses undeclared varsort '" +
                               ref.sort.name + "'");
      }
      if (!wls(sig, kit->trm, bound) || !free_vars(bound).empty()) {
        throw UsableInputError("valuation entry for " + ref.name.str() +
                               " must be a closed term");
      }
      valuation.emplace(ref, eval_fol(*kit, model, {}, bound));
    }
  }

  tb::FolValue v = [&] {
    try {
      return eval_fol(*kit, model, valuation, t);
    } catch (const tb::ValuationUndefined& e) {
      throw UsableInputError(e.what());
    }
  }();
  std::cout << tb::fol_value_str(v) << "\n";
  if (s == kit->fml) return std::get<bool>(v) ? 0 : 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Terms over binding signatures: sorting, alpha-equivalence, "
      "substitution and evaluation"};
  app.require_subcommand(1);

  std::string sig_file;
  std::string term_file, by_file, env_file, model_file, val_file;
  std::string var, varsort, expect_sort;
  std::vector<std::string> term_files, vars;
  unsigned fuel = 100;

  auto add_sig = [&](CLI::App* cmd) {
    cmd->add_option("--sig", sig_file, "signature file")->required();
  };
  auto add_term = [&](CLI::App* cmd) {
    cmd->add_option("--term", term_file, "term file")->required();
  };

  CLI::App* check = app.add_subcommand("check", "infer a term's sort");
  add_sig(check);
  add_term(check);
  check->add_option("--sort", expect_sort, "require this sort");

  CLI::App* alpha =
      app.add_subcommand("alpha", "test two terms for alpha-equivalence");
  add_sig(alpha);
  alpha->add_option("--term", term_files, "term file (give twice)")
      ->required()
      ->expected(2);

  CLI::App* subst = app.add_subcommand(
      "subst", "capture-avoidingly substitute a term for a variable");
  add_sig(subst);
  add_term(subst);
  subst->add_option("--by", by_file, "replacement term file")->required();
  subst->add_option("--var", var, "variable name")->required();
  subst->add_option("--varsort", varsort, "variable's varsort")->required();

  CLI::App* psubst =
      app.add_subcommand("psubst", "apply a parallel substitution");
  add_sig(psubst);
  add_term(psubst);
  psubst->add_option("--env", env_file, "environment file")->required();

  CLI::App* swap_cmd =
      app.add_subcommand("swap", "exchange two variable names everywhere");
  add_sig(swap_cmd);
  add_term(swap_cmd);
  swap_cmd->add_option("--var", vars, "variable name (give twice)")
      ->required()
      ->expected(2);
  swap_cmd->add_option("--varsort", varsort, "the names' varsort")->required();

  CLI::App* fresh_cmd =
      app.add_subcommand("fresh", "test whether a variable is fresh");
  add_sig(fresh_cmd);
  add_term(fresh_cmd);
  fresh_cmd->add_option("--var", var, "variable name")->required();
  fresh_cmd->add_option("--varsort", varsort, "variable's varsort")
      ->required();

  CLI::App* freevars =
      app.add_subcommand("freevars", "list a term's free variables");
  add_sig(freevars);
  add_term(freevars);

  CLI::App* skel_cmd =
      app.add_subcommand("skel", "print a term's binding-less skeleton");
  add_sig(skel_cmd);
  add_term(skel_cmd);

  CLI::App* beta =
      app.add_subcommand("beta", "one normal-order reduction step");
  add_sig(beta);
  add_term(beta);

  CLI::App* norm = app.add_subcommand(
      "normalize", "reduce to normal form within a step budget");
  add_sig(norm);
  add_term(norm);
  norm->add_option("--fuel", fuel, "maximum reduction steps");

  CLI::App* eval = app.add_subcommand(
      "eval-fol", "evaluate a formula or term in a finite model");
  add_sig(eval);
  add_term(eval);
  eval->add_option("--model", model_file, "model file")->required();
  eval->add_option("--val", val_file,
                   "environment of closed terms for the free variables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message
    return 2;
  }

  try {
    tb::Signature sig = load_signature(sig_file);
    if (app.got_subcommand(check)) {
      return run_check(sig, term_file, expect_sort);
    }
    if (app.got_subcommand(alpha)) return run_alpha(sig, term_files);
    if (app.got_subcommand(subst)) {
      return run_subst(sig, term_file, by_file, var, varsort);
    }
    if (app.got_subcommand(psubst)) {
      return run_psubst(sig, term_file, env_file);
    }
    if (app.got_subcommand(swap_cmd)) {
      return run_swap(sig, term_file, vars, varsort);
    }
    if (app.got_subcommand(fresh_cmd)) {
      return run_fresh(sig, term_file, var, varsort);
    }
    if (app.got_subcommand(freevars)) return run_freevars(sig, term_file);
    if (app.got_subcommand(skel_cmd)) return run_skel(sig, term_file);
    if (app.got_subcommand(beta)) return run_beta(sig, term_file);
    if (app.got_subcommand(norm)) {
      return run_normalize(sig, term_file, fuel);
    }
    if (app.got_subcommand(eval)) {
      return run_eval_fol(sig, term_file, model_file, val_file);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable: a subcommand is required
}
