// Acceptance gate: one line per criterion, PASS or FAIL, nonzero exit on any
// failure. Runs the library against its independent oracles at fixed seeds
// and case counts, and drives the command-line tool end to end (set
// TERMBIND_CLI to its path).

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <sys/wait.h>

#include "termbind/alpha.hpp"
#include "termbind/errors.hpp"
#include "termbind/instances.hpp"
#include "termbind/io.hpp"
#include "termbind/recursion.hpp"
#include "termbind/sorting.hpp"
#include "termbind/subst.hpp"
#include "termbind/testkit.hpp"

namespace tb = termbind;

namespace {

// ---------------------------------------------------------------- plumbing

struct Failure {
  std::string detail;
};

#define EXPECT(cond, msg)                         \
  do {                                            \
    if (!(cond)) throw Failure{std::string(msg)}; \
  } while (0)

std::string data_path(const std::string& rel) {
  return std::string(TERMBIND_DATA_DIR) + "/" + rel;
}

std::string read_trimmed(const std::string& path) {
  std::string s = tb::read_file(path);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

tb::Term gen_at(const tb::GenConfig& cfg, std::uint64_t salt) {
  tb::GenConfig c = cfg;
  c.seed = cfg.seed ^ (salt * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL);
  return tb::gen_term(c);
}

// One generation context per bundled signature, rotated for coverage.
struct Ctx {
  tb::Signature sig;
  tb::SortId sort;
  tb::VarSortId vs;
  tb::GenConfig cfg;
};

std::vector<Ctx> contexts(unsigned max_depth, std::uint64_t seed) {
  tb::LambdaKit lk = tb::LambdaKit::standard();
  tb::FolKit fk({{"c", 0}, {"f", 1}, {"g", 2}}, {{"P", 1}, {"Q", 2}, {"R", 0}});
  tb::CcsKit ck = tb::CcsKit::standard();
  std::vector<Ctx> out;
  out.push_back({lk.sig, lk.lam_sort, lk.vlam,
                 tb::make_gen_config(lk.sig, lk.lam_sort, max_depth, seed)});
  out.push_back({fk.sig, fk.fml, fk.vtrm,
                 tb::make_gen_config(fk.sig, fk.fml, max_depth, seed + 1)});
  out.push_back({ck.sig, ck.proc, ck.varexp,
                 tb::make_gen_config(ck.sig, ck.proc, max_depth, seed + 2)});
  return out;
}

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const char* cli = std::getenv("TERMBIND_CLI");
  EXPECT(cli != nullptr, "TERMBIND_CLI is not set to the tool's path");
  std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  EXPECT(pipe != nullptr, "failed to launch the tool");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  while (!out.empty() && (out.back() == '\n' || out.back() == '\r'))
    out.pop_back();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// ----------------------------------------------------------- the criteria

// Alpha-equivalence is a congruent equivalence relation distinguishing
// bound from free occurrences. 500 generated cases across three signatures.
void alpha_equivalence_laws() {
  std::vector<Ctx> ctxs = contexts(6, 11);
  tb::Rng rng(12);
  for (std::uint64_t i = 0; i < 500; ++i) {
    Ctx& c = ctxs[i % 3];
    tb::Term x = gen_at(c.cfg, i);
    tb::Term v1 = tb::alpha_variant(x, c.cfg, rng);
    tb::Term v2 = tb::alpha_variant(v1, c.cfg, rng);
    EXPECT(alpha_eq(x, x), "reflexivity failed: " + tb::print_term(x));
    EXPECT(alpha_eq(x, v1) && alpha_eq(v1, x),
           "symmetry failed: " + tb::print_term(x));
    EXPECT(alpha_eq(x, v2),
           "transitivity along a variant chain failed: " + tb::print_term(x));
  }

  tb::LambdaKit lk = tb::LambdaKit::standard();
  EXPECT(alpha_eq(lk.lam("x", lk.var("x")), lk.lam("y", lk.var("y"))),
         "identity terms under different binder names must identify");
  EXPECT(!alpha_eq(lk.lam("x", lk.var("x")), lk.lam("y", lk.var("x"))),
         "a bound occurrence must not identify with a free one");
  EXPECT(!alpha_eq(lk.var("x"), lk.var("y")),
         "distinct free variables must not identify");
}

// The one-fresh-witness comparison agrees with the sampled universal one
// for every sample >= 1. 500 mixed (equivalent and independent) pairs.
void alpha_exists_equals_forall() {
  std::vector<Ctx> ctxs = contexts(6, 21);
  tb::Rng rng(22);
  for (std::uint64_t i = 0; i < 500; ++i) {
    Ctx& c = ctxs[i % 3];
    tb::Term x = gen_at(c.cfg, i);
    tb::Term y = (i % 2 == 0) ? tb::alpha_variant(x, c.cfg, rng)
                              : gen_at(c.cfg, 100000 + i);
    bool base = alpha_eq(x, y);
    EXPECT(tb::alpha_eq_forall(x, y, 1) == base,
           "sample-1 disagreement on " + tb::print_term(x));
    EXPECT(tb::alpha_eq_forall(x, y, 3) == base,
           "sample-3 disagreement on " + tb::print_term(x));
  }
  bool threw = false;
  try {
    tb::LambdaKit lk = tb::LambdaKit::standard();
    (void)tb::alpha_eq_forall(lk.var("x"), lk.var("x"), 0);
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  EXPECT(threw, "sample 0 must be rejected");
}

// Independent oracles: nameless canonical forms decide alpha-equivalence,
// and freshen-then-graft substitution agrees with the real one. 500 each.
void oracle_equivalences() {
  std::vector<Ctx> ctxs = contexts(6, 31);
  tb::Rng rng(32);
  for (std::uint64_t i = 0; i < 500; ++i) {
    Ctx& c = ctxs[i % 3];
    tb::Term x = gen_at(c.cfg, i);
    tb::Term v = tb::alpha_variant(x, c.cfg, rng);
    EXPECT(to_canonical(x) == to_canonical(v),
           "canonical form not alpha-invariant: " + tb::print_term(x));
    tb::Term y = gen_at(c.cfg, 200000 + i);
    EXPECT(alpha_eq(x, y) == (to_canonical(x) == to_canonical(y)),
           "canonical equality differs from alpha-equivalence: " +
               tb::print_term(x) + " vs " + tb::print_term(y));
  }

  for (std::uint64_t i = 0; i < 500; ++i) {
    Ctx& c = ctxs[i % 3];
    tb::GenConfig ycfg = c.cfg;
    ycfg.sort = c.sig.sort_of_var(c.vs);
    tb::Term x = gen_at(c.cfg, 300000 + i);
    tb::Term y = gen_at(ycfg, 400000 + i);
    tb::VarName yvar = c.cfg.var_pool.at(c.vs)[i % 3];
    tb::Term direct = tb::subst(x, y, yvar, c.vs);
    tb::Term via_oracle = tb::oracle_subst(x, y, yvar, c.vs);
    EXPECT(alpha_eq(direct, via_oracle),
           "substitution disagrees with the freshen-and-graft oracle on " +
               tb::print_term(x));
  }
}

// Equality of abstractions: same-binder comparison reduces to the bodies,
// an explicit fresh rename is an equality, and the witness choice is
// irrelevant. 200 cases each.
void abs_equality_lemmas() {
  std::vector<Ctx> ctxs = contexts(6, 41);
  tb::Rng rng(42);
  for (std::uint64_t i = 0; i < 200; ++i) {
    Ctx& c = ctxs[i % 3];
    tb::Term b1 = gen_at(c.cfg, i);
    tb::Term b2 = (i % 2 == 0) ? tb::alpha_variant(b1, c.cfg, rng)
                               : gen_at(c.cfg, 500000 + i);
    tb::VarName x = c.cfg.var_pool.at(c.vs)[i % 3];
    tb::Abs a1{c.vs, x, b1};
    tb::Abs a2{c.vs, x, b2};
    EXPECT(alpha_eq(a1, a2) == alpha_eq(b1, b2),
           "same-binder abstraction equality must mirror the bodies");

    // Abs x B == Abs y (B[y/x]) for fresh y.
    tb::VarName y = tb::fresh_var(c.vs, free_vars(a1));
    tb::Abs renamed{c.vs, y, tb::vsubst(b1, y, x, c.vs)};
    EXPECT(alpha_eq(a1, renamed), "explicit fresh rename must be an equality");

    // Any fresh witness decides equality the same way: compare via a
    // deliberately different witness than the minimal one alpha_eq picks.
    std::set<tb::VarRef> avoid = free_vars(a1);
    for (const tb::VarRef& r : free_vars(a2)) avoid.insert(r);
    avoid.insert({c.vs, a1.name});
    avoid.insert({c.vs, a2.name});
    std::uint64_t k = 0;
    while (avoid.count({c.vs, tb::VarName::generated(k)}) > 0) ++k;
    tb::VarName far = tb::VarName::generated(k + 7);
    bool via_far = alpha_eq(swap(a1.body, a1.name, far, c.vs),
                            swap(a2.body, a2.name, far, c.vs));
    EXPECT(via_far == alpha_eq(a1, a2),
           "equality must not depend on the chosen fresh witness");
  }
}

// fresh y X => X[Y/y] == X, X[y/y] == X, and freshness propagates through
// substitution. 500 cases.
void freshness_simplification_laws() {
  std::vector<Ctx> ctxs = contexts(6, 51);
  for (std::uint64_t i = 0; i < 500; ++i) {
    Ctx& c = ctxs[i % 3];
    tb::GenConfig ycfg = c.cfg;
    ycfg.sort = c.sig.sort_of_var(c.vs);
    tb::Term x = gen_at(c.cfg, i);
    tb::Term y = gen_at(ycfg, 600000 + i);
    tb::VarName v = c.cfg.var_pool.at(c.vs)[i % 3];

    tb::VarName f = tb::fresh_var(c.vs, free_vars(x));
    EXPECT(alpha_eq(tb::subst(x, y, f, c.vs), x),
           "substitution for a fresh variable must be the identity");
    EXPECT(alpha_eq(tb::subst(x, tb::Term::var(c.vs, v), v, c.vs), x),
           "substituting a variable for itself must be the identity");

    tb::Term r = tb::subst(x, y, v, c.vs);
    if (tb::fresh(c.vs, v, y)) {
      EXPECT(tb::fresh(c.vs, v, r),
             "the substituted variable must be gone unless reintroduced");
    }
    if (tb::fresh(c.vs, f, y)) {
      EXPECT(tb::fresh(c.vs, f, r),
             "freshness in both sides must survive substitution");
    }
  }
}

// The five interaction laws between swapping, substitution and parallel
// substitution. 200 cases each.
void operator_interaction_laws() {
  std::vector<Ctx> ctxs = contexts(6, 61);
  for (std::uint64_t i = 0; i < 200; ++i) {
    Ctx& c = ctxs[i % 3];
    tb::GenConfig ycfg = c.cfg;
    ycfg.sort = c.sig.sort_of_var(c.vs);
    const auto& pool = c.cfg.var_pool.at(c.vs);
    tb::VarName yvar = pool[i % 3];
    tb::VarName z1 = pool[(i + 1) % 3];
    tb::VarName z2 = pool[(i + 2) % 3];

    tb::Term x = gen_at(c.cfg, i);
    tb::Term y = gen_at(ycfg, 700000 + i);
    tb::Term z = gen_at(ycfg, 800000 + i);

    // (1) Swapping distributes over substitution.
    auto transposed = [&](const tb::VarName& n) {
      if (n == z1) return z2;
      if (n == z2) return z1;
      return n;
    };
    EXPECT(alpha_eq(swap(tb::subst(x, y, yvar, c.vs), z1, z2, c.vs),
                    tb::subst(swap(x, z1, z2, c.vs), swap(y, z1, z2, c.vs),
                              transposed(yvar), c.vs)),
           "swapping must distribute over substitution");

    // (2) Same-variable substitutions compose inside the replacement.
    EXPECT(alpha_eq(tb::subst(tb::subst(x, y, yvar, c.vs), z, yvar, c.vs),
                    tb::subst(x, tb::subst(y, z, yvar, c.vs), yvar, c.vs)),
           "same-variable substitution composition failed");

    // (3) Distinct-variable substitutions commute when y is fresh in Z.
    tb::VarName zvar = pool[(i + 1) % 3];
    tb::Term z_clean = tb::vsubst(z, tb::VarName::user("u"), yvar, c.vs);
    EXPECT(alpha_eq(
               tb::subst(tb::subst(x, y, yvar, c.vs), z_clean, zvar, c.vs),
               tb::subst(tb::subst(x, z_clean, zvar, c.vs),
                         tb::subst(y, z_clean, zvar, c.vs), yvar, c.vs)),
           "distinct-variable substitution commutation failed");

    // (4) Renaming is substitution by a variable.
    EXPECT(alpha_eq(tb::vsubst(x, z1, yvar, c.vs),
                    tb::subst(x, tb::Term::var(c.vs, z1), yvar, c.vs)),
           "variable renaming must agree with variable substitution");

    // (5) Environment composition is substitution composition.
    tb::Env r1, r2;
    r1.map.emplace(tb::VarRef{c.vs, pool[i % 3]}, gen_at(ycfg, 900000 + i));
    r2.map.emplace(tb::VarRef{c.vs, pool[(i + 1) % 3]},
                   gen_at(ycfg, 910000 + i));
    if (i % 2 == 0) {
      r2.map.emplace(tb::VarRef{c.vs, pool[i % 3]}, gen_at(ycfg, 920000 + i));
    }
    EXPECT(alpha_eq(tb::psubst(x, tb::env_comp(r1, r2)),
                    tb::psubst(tb::psubst(x, r1), r2)),
           "environment composition must match sequential application");
  }
}

// The bundled examples sort as documented, and the operations preserve
// sorting. 200 generated cases plus the fixed examples.
void sorting_examples_and_preservation() {
  tb::CcsKit ck = tb::CcsKit::standard();
  tb::Term q = tb::parse_term(read_trimmed(data_path("examples/q.trm")));
  tb::SortReport rq = infer_sort(ck.sig, q);
  EXPECT(rq.is_sorted() && rq.sorted().sort == ck.proc,
         "the bundled process example must sort at proc");
  tb::Term qbad = tb::parse_term(read_trimmed(data_path("examples/qbad.trm")));
  tb::SortReport rb = infer_sort(ck.sig, qbad);
  const std::vector<tb::PathStep> first_free{{tb::PathStep::Kind::Free, 0}};
  EXPECT(rb.is_failure() &&
             rb.failure().reason == tb::SortErrorKind::ChildSortMismatch &&
             rb.failure().path == first_free,
         "the argument-swapped process example must fail at free input 0");

  tb::LambdaKit lk = tb::LambdaKit::standard();
  EXPECT(wls(lk.sig, lk.lam_sort,
             tb::parse_term(read_trimmed(data_path("examples/omega.trm")))),
         "the bundled loop term must sort");

  std::vector<Ctx> ctxs = contexts(6, 71);
  tb::Rng rng(72);
  for (std::uint64_t i = 0; i < 200; ++i) {
    Ctx& c = ctxs[i % 3];
    tb::GenConfig ycfg = c.cfg;
    ycfg.sort = c.sig.sort_of_var(c.vs);
    const auto& pool = c.cfg.var_pool.at(c.vs);
    tb::Term x = gen_at(c.cfg, i);
    tb::Term y = gen_at(ycfg, 930000 + i);

    EXPECT(infer_sort(c.sig, x) ==
               infer_sort(c.sig, tb::alpha_variant(x, c.cfg, rng)),
           "sorting must be alpha-invariant");
    EXPECT(wls(c.sig, c.sort, tb::subst(x, y, pool[i % 3], c.vs)),
           "substitution must preserve the sort");
    EXPECT(wls(c.sig, c.sort, swap(x, pool[i % 3], pool[(i + 1) % 3], c.vs)),
           "swapping must preserve the sort");
    EXPECT(wls(c.sig, c.sort,
               tb::vsubst(x, pool[(i + 1) % 3], pool[i % 3], c.vs)),
           "renaming must preserve the sort");
    tb::Env rho;
    rho.map.emplace(tb::VarRef{c.vs, pool[i % 3]}, y);
    EXPECT(wls(c.sig, c.sort, tb::psubst(x, rho)),
           "parallel substitution must preserve the sort");
  }
}

// Structural recursion: folds satisfy their laws on healthy models, the law
// harness rejects broken ones, and the sorted fold enforces its contracts.
void recursion_model_laws() {
  using VarSet = std::set<tb::VarRef>;
  tb::LambdaKit lk = tb::LambdaKit::standard();
  tb::GenConfig cfg = tb::make_gen_config(lk.sig, lk.lam_sort, 6, 81);
  auto gen = [&](std::uint64_t i) { return gen_at(cfg, i); };

  tb::FsModel<VarSet, VarSet> fv;
  fv.var = [](const tb::VarSortId& vs, const tb::VarName& n) {
    return VarSet{{vs, n}};
  };
  fv.op = [](const tb::OpSymId&, const std::map<unsigned, VarSet>& in,
             const std::map<unsigned, VarSet>& bnd) {
    VarSet out;
    for (const auto& [i, s] : in) out.insert(s.begin(), s.end());
    for (const auto& [j, s] : bnd) out.insert(s.begin(), s.end());
    return out;
  };
  fv.abs = [](const tb::VarSortId& vs, const tb::VarName& n,
              const VarSet& body) {
    VarSet out = body;
    out.erase(tb::VarRef{vs, n});
    return out;
  };
  fv.subst = [](const VarSet& tx, const VarSet& ty, const tb::VarName& y,
                const tb::VarSortId& ys) {
    if (tx.count(tb::VarRef{ys, y}) == 0) return tx;
    VarSet out = tx;
    out.erase(tb::VarRef{ys, y});
    out.insert(ty.begin(), ty.end());
    return out;
  };
  fv.fresh = [](const tb::VarSortId& vs, const tb::VarName& n,
                const VarSet& s) { return s.count(tb::VarRef{vs, n}) == 0; };
  fv.eq = [](const VarSet& a, const VarSet& b) { return a == b; };

  for (std::uint64_t i = 0; i < 500; ++i) {
    tb::Term t = gen(i);
    EXPECT(fold_fs(fv, t) == free_vars(t),
           "the free-variable fold must compute the free variables");
  }
  EXPECT(tb::check_model_laws(fv, gen, 200).passed(),
         "the free-variable model must satisfy the model laws");

  // Negative control: forgetting to remove the binder breaks the laws.
  tb::FsModel<VarSet, VarSet> broken = fv;
  broken.abs = [](const tb::VarSortId&, const tb::VarName&,
                  const VarSet& body) { return body; };
  EXPECT(!tb::check_model_laws(broken, gen, 200).passed(),
         "the law harness must reject a binder-ignoring model");

  // Negative control: a wrong substitution equation breaks the laws.
  tb::FsModel<VarSet, VarSet> wrong_subst = fv;
  wrong_subst.subst = [](const VarSet& tx, const VarSet&, const tb::VarName&,
                         const tb::VarSortId&) { return tx; };
  EXPECT(
      !tb::check_model_laws(wrong_subst, gen, 200).passed(),
      "the law harness must reject a substitution-ignoring model");

  // The swapping variant of the laws, with its own negative control.
  tb::SwapModel<VarSet, VarSet> sw;
  sw.var = fv.var;
  sw.op = fv.op;
  sw.abs = fv.abs;
  sw.swap = [](const VarSet& s, const tb::VarName& z1, const tb::VarName& z2,
               const tb::VarSortId& zs) {
    VarSet out;
    for (tb::VarRef v : s) {
      if (v == tb::VarRef{zs, z1}) v.name = z2;
      else if (v == tb::VarRef{zs, z2}) v.name = z1;
      out.insert(v);
    }
    return out;
  };
  sw.fresh = fv.fresh;
  sw.eq = fv.eq;
  EXPECT(tb::check_model_laws(sw, gen, 200).passed(),
         "the free-variable swap model must satisfy the swap laws");
  tb::SwapModel<VarSet, VarSet> sw_broken = sw;
  sw_broken.swap = [](const VarSet& s, const tb::VarName&, const tb::VarName&,
                      const tb::VarSortId&) { return s; };
  EXPECT(!tb::check_model_laws(sw_broken, gen, 200).passed(),
         "the law harness must reject a swap-ignoring model");

  // The sorted fold: identity rebuild under per-node sort checks.
  tb::CcsKit ck = tb::CcsKit::standard();
  tb::SortedFsModel<tb::Term, tb::Abs> sorted;
  sorted.base.var = [](const tb::VarSortId& vs, const tb::VarName& n) {
    return tb::Term::var(vs, n);
  };
  sorted.base.op = [](const tb::OpSymId& op,
                      const std::map<unsigned, tb::Term>& in,
                      const std::map<unsigned, tb::Abs>& bnd) {
    return tb::Term::op(op, in, bnd);
  };
  sorted.base.abs = [](const tb::VarSortId& vs, const tb::VarName& n,
                       const tb::Term& body) { return tb::Abs{vs, n, body}; };
  sorted.base.eq = [](const tb::Term& a, const tb::Term& b) {
    return alpha_eq(a, b);
  };
  sorted.wls_t = [&ck](const tb::SortId& s, const tb::Term& t) {
    return wls(ck.sig, s, t);
  };
  sorted.wls_abs_t = [&ck](const tb::VarSortId& vs, const tb::SortId& s,
                           const tb::Abs& a) {
    return check_abs(ck.sig, a) == tb::SortReport{tb::AbsSorted{vs, s}};
  };
  tb::GenConfig ccfg = tb::make_gen_config(ck.sig, ck.proc, 6, 82);
  for (std::uint64_t i = 0; i < 200; ++i) {
    tb::Term t = gen_at(ccfg, i);
    EXPECT(eq_raw(fold_fs_sorted(ck.sig, sorted, t), t),
           "the sorted identity fold must rebuild the term");
  }
  bool illsorted_thrown = false;
  try {
    (void)fold_fs_sorted(ck.sig, sorted,
                         tb::Term::op({"Out_c"}, {{0, ck.zero()}}, {}));
  } catch (const tb::IllSorted&) {
    illsorted_thrown = true;
  }
  EXPECT(illsorted_thrown, "ill-sorted input to the sorted fold must throw");
  bool violation_thrown = false;
  tb::SortedFsModel<tb::Term, tb::Abs> cheat = sorted;
  cheat.base.var = [&ck](const tb::VarSortId&, const tb::VarName&) {
    return ck.sum({}, {});
  };
  try {
    (void)fold_fs_sorted(ck.sig, cheat, ck.plus(ck.var("v"), ck.zero()));
  } catch (const tb::SortViolation&) {
    violation_thrown = true;
  }
  EXPECT(violation_thrown,
         "a sort-contract-breaking model value must throw at the node");
}

// Environment-passing interpretation: alpha-invariant and commuting with
// substitution, both for an arbitrary arithmetic domain and for evaluation
// of formulas in a finite model. 200 cases each.
void interpretation_lemmas() {
  tb::LambdaKit lk = tb::LambdaKit::standard();
  using Dt = long;
  using Da = std::function<Dt(Dt)>;
  tb::SemDomain<Dt, Da> dom;
  dom.op = [](const tb::OpSymId& op, const std::map<unsigned, Dt>& in,
              const std::map<unsigned, Da>& bnd) {
    if (op.name == "App") return in.at(0) * 31 + in.at(1) + 7;
    return bnd.at(0)(5) + 11;
  };
  dom.abs = [](const tb::VarSortId&, const std::function<Dt(Dt)>& f) {
    return Da(f);
  };
  auto val = tb::Valuation<Dt>::total(
      [](const tb::VarRef& v) { return long(v.name.str().size()) + 2; });

  tb::GenConfig cfg = tb::make_gen_config(lk.sig, lk.lam_sort, 6, 91);
  tb::Rng rng(92);
  const auto& pool = cfg.var_pool.at(lk.vlam);
  for (std::uint64_t i = 0; i < 200; ++i) {
    tb::Term x = gen_at(cfg, i);
    EXPECT(interpret(dom, val, x) ==
               interpret(dom, val, tb::alpha_variant(x, cfg, rng)),
           "interpretation must be alpha-invariant");
    tb::Term y = gen_at(cfg, 940000 + i);
    tb::VarName yvar = pool[i % 3];
    Dt lhs = interpret(dom, val, tb::subst(x, y, yvar, lk.vlam));
    Dt rhs = interpret(
        dom, val.updated(tb::VarRef{lk.vlam, yvar}, interpret(dom, val, y)),
        x);
    EXPECT(lhs == rhs, "interpretation must commute with substitution");
  }

  // The same two lemmas for formula evaluation in a finite model.
  tb::FolKit fk({{"c", 0}, {"f", 1}, {"g", 2}}, {{"P", 1}, {"Q", 2}, {"R", 0}});
  tb::FiniteModel model =
      tb::parse_model(read_trimmed(data_path("examples/p_all.model")));
  std::map<tb::VarRef, tb::FolValue> fval{
      {{fk.vtrm, tb::VarName::user("x")}, std::string("d0")},
      {{fk.vtrm, tb::VarName::user("y")}, std::string("d1")},
      {{fk.vtrm, tb::VarName::user("z")}, std::string("d0")}};
  tb::GenConfig fcfg = tb::make_gen_config(fk.sig, fk.fml, 5, 93);
  tb::GenConfig tcfg = fcfg;
  tcfg.sort = fk.trm;
  tb::Rng frng(94);
  for (std::uint64_t i = 0; i < 200; ++i) {
    tb::Term phi = gen_at(fcfg, i);
    EXPECT(eval_fol(fk, model, fval, phi) ==
               eval_fol(fk, model, fval, tb::alpha_variant(phi, fcfg, frng)),
           "formula evaluation must be alpha-invariant");
    tb::Term t = gen_at(tcfg, 950000 + i);
    tb::VarName xvar = fcfg.var_pool.at(fk.vtrm)[i % 3];
    std::map<tb::VarRef, tb::FolValue> updated = fval;
    updated[tb::VarRef{fk.vtrm, xvar}] = eval_fol(fk, model, fval, t);
    EXPECT(eval_fol(fk, model, fval, tb::subst(phi, t, xvar, fk.vtrm)) ==
               eval_fol(fk, model, updated, phi),
           "formula evaluation must commute with substitution");
  }
}

// Skeletons forget exactly the variables: invariant under renaming-like
// operations, strictly less informative than the term. 200 cases.
void skeleton_invariances() {
  std::vector<Ctx> ctxs = contexts(6, 101);
  tb::Rng rng(102);
  for (std::uint64_t i = 0; i < 200; ++i) {
    Ctx& c = ctxs[i % 3];
    const auto& pool = c.cfg.var_pool.at(c.vs);
    tb::Term x = gen_at(c.cfg, i);
    tb::Tree base = skel(x);
    EXPECT(skel(tb::alpha_variant(x, c.cfg, rng)) == base,
           "skeletons must be alpha-invariant");
    EXPECT(skel(tb::refresh_binders(x, {})) == base,
           "skeletons must survive binder refreshing");
    EXPECT(skel(swap(x, pool[i % 3], pool[(i + 1) % 3], c.vs)) == base,
           "skeletons must be swap-invariant");
    EXPECT(skel(tb::vsubst(x, pool[(i + 1) % 3], pool[i % 3], c.vs)) == base,
           "skeletons must be rename-invariant");
  }
  tb::LambdaKit lk = tb::LambdaKit::standard();
  EXPECT(!(skel(tb::subst(lk.var("x"), lk.lam("y", lk.var("y")),
                          tb::VarName::user("x"), lk.vlam)) ==
           skel(lk.var("x"))),
         "substitution by a non-variable must be able to change the skeleton");
}

// The lambda and logic instances behave on the bundled corpus: reduction,
// normalization with fuel, and model evaluation.
void instance_demos() {
  tb::LambdaKit lk = tb::LambdaKit::standard();
  tb::Term plus23 =
      tb::parse_term(read_trimmed(data_path("examples/plus23.trm")));
  std::optional<tb::Term> five = normalize(lk, plus23, 100);
  EXPECT(five.has_value() && alpha_eq(*five, lk.church(5)),
         "2 + 3 must normalize to the numeral 5 within 100 steps");

  tb::Term omega = tb::parse_term(read_trimmed(data_path("examples/omega.trm")));
  EXPECT(!normalize(lk, omega, 10).has_value(),
         "the self-application loop must exhaust its fuel");
  std::optional<tb::Term> looped = beta_step(lk, omega);
  EXPECT(looped.has_value() && alpha_eq(*looped, omega),
         "one step of the loop must reproduce it");

  tb::Term id = lk.lam("x", lk.var("x"));
  std::optional<tb::Term> same = normalize(lk, id, 0);
  EXPECT(same.has_value() && eq_raw(*same, id),
         "a normal form must come back unchanged even at fuel 0");

  bool illsorted = false;
  try {
    (void)beta_step(lk, tb::Term::op(lk.app_op, {{0, lk.var("x")}}, {}));
  } catch (const tb::IllSorted&) {
    illsorted = true;
  }
  EXPECT(illsorted, "stepping an ill-sorted term must throw");

  tb::FolKit fk({{"c", 0}, {"f", 1}, {"g", 2}}, {{"P", 1}, {"Q", 2}, {"R", 0}});
  tb::Term allp = tb::parse_term(read_trimmed(data_path("examples/allp.trm")));
  tb::FiniteModel all_model =
      tb::parse_model(read_trimmed(data_path("examples/p_all.model")));
  tb::FiniteModel some_model =
      tb::parse_model(read_trimmed(data_path("examples/p_some.model")));
  EXPECT(validate_model(fk, all_model).empty() &&
             validate_model(fk, some_model).empty(),
         "the bundled models must validate");
  EXPECT(eval_fol(fk, all_model, {}, allp) == tb::FolValue{true},
         "the universal formula must hold in the saturated model");
  EXPECT(eval_fol(fk, some_model, {}, allp) == tb::FolValue{false},
         "the universal formula must fail in the partial model");
}

// The command-line tool: every subcommand and all three exit codes against
// the bundled corpus.
void cli_end_to_end() {
  const std::string sig = " --sig " + data_path("lambda.sig");
  const std::string ccs = " --sig " + data_path("ccs.sig");
  const std::string fol = " --sig " + data_path("fol.sig");
  auto ex = [](const std::string& f) { return data_path("examples/" + f); };

  CliResult r = run_cli("check" + sig + " --term " + ex("y.trm"));
  EXPECT(r.exit_code == 0 && r.out == "(sorted lam)",
         "check must report (sorted lam) with exit 0, got '" + r.out + "'");

  r = run_cli("check" + ccs + " --term " + ex("qbad.trm"));
  EXPECT(r.exit_code == 1 &&
             r.out == "(fail (path (free 0)) ChildSortMismatch)",
         "check must report the failure path with exit 1, got '" + r.out +
             "'");

  r = run_cli("check" + ccs + " --term " + ex("q.trm") + " --sort exp");
  EXPECT(r.exit_code == 1, "a sort mismatch must exit 1");

  r = run_cli("alpha" + sig + " --term " + ex("a.trm") + " --term " +
              ex("b.trm"));
  EXPECT(r.exit_code == 0 && r.out == "true",
         "equivalent terms must print true with exit 0");
  r = run_cli("alpha" + sig + " --term " + ex("a.trm") + " --term " +
              ex("free_x.trm"));
  EXPECT(r.exit_code == 1 && r.out == "false",
         "inequivalent terms must print false with exit 1");

  r = run_cli("subst" + sig + " --term " + ex("capture.trm") + " --by " +
              ex("x.trm") + " --var y --varsort vlam");
  EXPECT(r.exit_code == 0 &&
             r.out == "(op Lam () ((0 (abs vlam g$0 (v vlam x)))))",
         "the capture case must rename the binder to g$0, got '" + r.out +
             "'");

  r = run_cli("psubst" + sig + " --term " + ex("x.trm") + " --env " +
              ex("sub.env"));
  EXPECT(r.exit_code == 0 &&
             r.out == "(op Lam () ((0 (abs vlam y (v vlam y)))))",
         "parallel substitution must graft the identity");

  r = run_cli("swap" + sig + " --term " + ex("capture.trm") +
              " --var x --var y --varsort vlam");
  EXPECT(r.exit_code == 0 &&
             r.out == "(op Lam () ((0 (abs vlam y (v vlam x)))))",
         "swapping must exchange binder and free occurrence");

  r = run_cli("fresh" + sig + " --term " + ex("a.trm") +
              " --var x --varsort vlam");
  EXPECT(r.exit_code == 0 && r.out == "true", "bound-only means fresh");
  r = run_cli("fresh" + sig + " --term " + ex("free_x.trm") +
              " --var x --varsort vlam");
  EXPECT(r.exit_code == 1 && r.out == "false", "free means not fresh");

  r = run_cli("freevars" + sig + " --term " + ex("free_x.trm"));
  EXPECT(r.exit_code == 0 && r.out == "((vlam x))",
         "freevars must list the one free variable");

  r = run_cli("skel" + sig + " --term " + ex("y.trm"));
  EXPECT(r.exit_code == 0 &&
             r.out == "(branch () ((0 (branch ((0 (branch () ()))) ()))))",
         "skel must print the branch tree");

  r = run_cli("beta" + sig + " --term " + ex("id_redex.trm"));
  EXPECT(r.exit_code == 0 && r.out == "(v vlam y)",
         "the identity redex must step to its argument");
  r = run_cli("beta" + sig + " --term " + ex("a.trm"));
  EXPECT(r.exit_code == 1, "a normal form must exit 1 from beta");

  r = run_cli("normalize" + sig + " --term " + ex("plus23.trm") +
              " --fuel 100");
  EXPECT(r.exit_code == 0, "2 + 3 must normalize within fuel 100");
  tb::LambdaKit lk = tb::LambdaKit::standard();
  EXPECT(alpha_eq(tb::parse_term(r.out), lk.church(5)),
         "the printed normal form must be the numeral 5");
  r = run_cli("normalize" + sig + " --term " + ex("omega.trm") + " --fuel 10");
  EXPECT(r.exit_code == 1 && r.out.empty(),
         "fuel exhaustion must exit 1 with no result");

  r = run_cli("eval-fol" + fol + " --term " + ex("allp.trm") + " --model " +
              ex("p_all.model"));
  EXPECT(r.exit_code == 0 && r.out == "true",
         "the universal formula must evaluate true in the saturated model");
  r = run_cli("eval-fol" + fol + " --term " + ex("allp.trm") + " --model " +
              ex("p_some.model"));
  EXPECT(r.exit_code == 1 && r.out == "false",
         "the universal formula must evaluate false in the partial model");
  r = run_cli("eval-fol" + fol + " --term " + ex("px.trm") + " --model " +
              ex("p_some.model") + " --val " + ex("val.env"));
  EXPECT(r.exit_code == 0 && r.out == "true",
         "the valuation file must supply the free variable");

  // Exit 2: unusable inputs of every flavor.
  r = run_cli("beta" + ccs + " --term " + ex("q.trm"));
  EXPECT(r.exit_code == 2, "a non-lambda signature must exit 2 from beta");
  r = run_cli("eval-fol" + sig + " --term " + ex("a.trm") + " --model " +
              ex("p_all.model"));
  EXPECT(r.exit_code == 2, "a non-logic signature must exit 2 from eval");
  r = run_cli("alpha" + sig + " --term " + ex("q.trm") + " --term " +
              ex("a.trm"));
  EXPECT(r.exit_code == 2, "an ill-sorted input term must exit 2");
  r = run_cli("check" + sig + " --term " + data_path("lambda.sig"));
  EXPECT(r.exit_code == 2, "an unparsable term file must exit 2");
  r = run_cli("check --sig " + ex("a.trm") + " --term " + ex("a.trm"));
  EXPECT(r.exit_code == 2, "an unparsable signature file must exit 2");
  r = run_cli("check");
  EXPECT(r.exit_code == 2, "a missing required flag must exit 2");
  r = run_cli("eval-fol" + fol + " --term " + ex("px.trm") + " --model " +
              ex("p_all.model"));
  EXPECT(r.exit_code == 2, "an uncovered free variable must exit 2");
}

// Printing and parsing are mutually inverse: byte-identical round-trips on
// the corpus, identity round-trips on 500 generated terms.
void round_trips() {
  const char* files[] = {"examples/a.trm",        "examples/b.trm",
                         "examples/free_x.trm",   "examples/x.trm",
                         "examples/y.trm",        "examples/capture.trm",
                         "examples/id_redex.trm", "examples/omega.trm",
                         "examples/plus23.trm",   "examples/five.trm",
                         "examples/px.trm",       "examples/allp.trm",
                         "examples/q.trm",        "examples/qbad.trm"};
  for (const char* f : files) {
    std::string text = read_trimmed(data_path(f));
    EXPECT(tb::print_term(tb::parse_term(text)) == text,
           std::string("bundled term must round-trip byte-for-byte: ") + f);
  }
  for (const char* f : {"lambda.sig", "fol.sig", "ccs.sig"}) {
    std::string text = read_trimmed(data_path(f));
    auto v = tb::validate_signature(tb::parse_signature(text));
    EXPECT(std::holds_alternative<tb::Signature>(v),
           std::string("bundled signature must validate: ") + f);
    EXPECT(tb::print_signature(std::get<tb::Signature>(v)) == text,
           std::string("bundled signature must round-trip: ") + f);
  }
  for (const char* f : {"examples/sub.env", "examples/val.env"}) {
    std::string text = read_trimmed(data_path(f));
    EXPECT(tb::print_env(tb::parse_env(text)) == text,
           std::string("bundled environment must round-trip: ") + f);
  }
  for (const char* f : {"examples/p_all.model", "examples/p_some.model"}) {
    std::string text = read_trimmed(data_path(f));
    EXPECT(tb::print_model(tb::parse_model(text)) == text,
           std::string("bundled model must round-trip: ") + f);
  }

  std::vector<Ctx> ctxs = contexts(6, 111);
  for (std::uint64_t i = 0; i < 500; ++i) {
    Ctx& c = ctxs[i % 3];
    tb::Term t = gen_at(c.cfg, i);
    EXPECT(eq_raw(tb::parse_term(tb::print_term(t)), t),
           "generated term must survive print-then-parse: " +
               tb::print_term(t));
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    void (*run)();
  };
  const Criterion criteria[] = {
      {"alpha-equivalence laws", alpha_equivalence_laws},
      {"one-witness vs sampled-universal alpha agreement",
       alpha_exists_equals_forall},
      {"independent oracle equivalences", oracle_equivalences},
      {"abstraction equality lemmas", abs_equality_lemmas},
      {"freshness simplification laws", freshness_simplification_laws},
      {"operator interaction laws", operator_interaction_laws},
      {"sorting examples and preservation", sorting_examples_and_preservation},
      {"recursion model laws and negative controls", recursion_model_laws},
      {"interpretation lemmas", interpretation_lemmas},
      {"skeleton invariances", skeleton_invariances},
      {"instance demos", instance_demos},
      {"command-line tool end to end", cli_end_to_end},
      {"print/parse round-trips", round_trips},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    try {
      c.run();
      std::cout << "PASS: " << c.name << "\n";
    } catch (const Failure& f) {
      ++failures;
      std::cout << "FAIL: " << c.name << " -- " << f.detail << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL: " << c.name << " -- unexpected error: " << e.what()
                << "\n";
    }
  }
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
