#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "termbind/signature.hpp"
#include "termbind/term.hpp"

namespace termbind {

// Tiny deterministic generator (splitmix64). Identical seeds give identical
// streams on every platform, which the standard distributions don't
// guarantee.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform-ish value in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

struct GenConfig {
  Signature sig;
  SortId sort;
  unsigned max_depth = 4;
  // Names to draw variables and binders from. Small pools (the default
  // supplies three names per varsort) force shadowing and capture.
  std::map<VarSortId, std::vector<VarName>> var_pool;
  std::uint64_t seed = 0;
};

// A config with x/y/z pools for every varsort of sig.
GenConfig make_gen_config(const Signature& sig, const SortId& sort,
                          unsigned max_depth, std::uint64_t seed);

// Generates a term that sorts at cfg.sort, structurally bounded by
// cfg.max_depth (overshooting only where reaching ground demands it).
// Deterministic in cfg.seed. Throws UninhabitedSort if no finite term of
// the requested sort exists, std::invalid_argument on an empty pool for a
// reachable varsort.
Term gen_term(const GenConfig& cfg);

// Reference substitution used as the oracle for subst: rename every binder
// in x to a globally fresh name (fresh for everything in sight), then graft
// y at the free occurrences of (ys, yvar) with no further checks. Capture
// is impossible by construction, so agreement with subst up to alpha is the
// correctness criterion.
Term oracle_subst(const Term& x, const Term& y, const VarName& yvar,
                  const VarSortId& ys);

// A random alpha-equivalent variant of t: each binder is (possibly) renamed
// to a variable fresh for the body, drawn from the pool or generated.
Term alpha_variant(const Term& t, const GenConfig& cfg, Rng& rng);

}  // namespace termbind
