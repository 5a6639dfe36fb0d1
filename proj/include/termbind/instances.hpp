#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "termbind/model.hpp"
#include "termbind/recursion.hpp"
#include "termbind/signature.hpp"
#include "termbind/term.hpp"

namespace termbind {

// Untyped lambda calculus: one sort, one varsort, application and
// abstraction.
struct LambdaKit {
  Signature sig;
  SortId lam_sort{"lam"};
  VarSortId vlam{"vlam"};
  OpSymId app_op{"App"};
  OpSymId lam_op{"Lam"};

  static LambdaKit standard();

  // Recognizes any signature with the same shape (names may differ):
  // a binary free operation and a unary binding operation over one sort.
  static std::optional<LambdaKit> from_signature(const Signature& s);

  Term var(const std::string& name) const;
  Term app(Term fun, Term arg) const;
  Term lam(const std::string& binder, Term body) const;

  // church(n) = \f. \x. f (f ... (f x)): numerals as iteration.
  Term church(unsigned n) const;
  // \m. \n. \f. \x. m f (n f x)
  Term plus() const;
};

// One leftmost-outermost (normal order) beta step, or nullopt when t is a
// normal form. Throws IllSorted unless t sorts at the kit's term sort.
std::optional<Term> beta_step(const LambdaKit& kit, const Term& t);

// Iterates beta_step at most `fuel` times; nullopt if no normal form was
// reached within the budget. A normal form returns itself even at fuel 0.
std::optional<Term> normalize(const LambdaKit& kit, const Term& t,
                              unsigned fuel);

// First-order logic over user-chosen function and predicate symbols, with
// And/Not/All as the fixed connectives (the rest are definable from them).
struct FolKit {
  Signature sig;
  SortId trm{"trm"};
  SortId fml{"fml"};
  VarSortId vtrm{"vtrm"};
  OpSymId and_op{"And"};
  OpSymId not_op{"Not"};
  OpSymId all_op{"All"};
  std::map<OpSymId, unsigned> funs;   // symbol -> arity
  std::map<OpSymId, unsigned> preds;  // symbol -> arity

  FolKit(const std::map<std::string, unsigned>& fun_decls,
         const std::map<std::string, unsigned>& pred_decls);

  // Recognizes a FOL-shaped signature: fixed And/Not/All plus operations
  // whose inputs are all term-sorted, classified by result sort.
  static std::optional<FolKit> from_signature(const Signature& s);

  Term var(const std::string& name) const;
  Term fun(const std::string& symbol, const std::vector<Term>& args) const;
  Term pred(const std::string& symbol, const std::vector<Term>& args) const;
  Term conj(Term a, Term b) const;
  Term neg(Term a) const;
  Term all(const std::string& binder, Term body) const;
};

// Checks a model against a kit: nonempty carrier of distinct elements,
// every function symbol backed by a total table into the carrier, predicate
// extensions within carrier tuples of the right width. Returns all problems.
std::vector<std::string> validate_model(const FolKit& kit,
                                        const FiniteModel& model);

// Evaluates a term (to a carrier element) or formula (to a truth value) in
// a finite model. All is finite conjunction over the carrier. Throws
// IllSorted for inputs that do not sort at trm or fml, ValuationUndefined
// for uncovered free variables, EvalError for invalid models or arguments
// outside the carrier.
FolValue eval_fol(const FolKit& kit, const FiniteModel& model,
                  const std::map<VarRef, FolValue>& valuation, const Term& t);

// Value-passing process calculus: expressions and processes, input prefixes
// binding an expression variable, and finitely-indexed sums.
struct CcsKit {
  Signature sig;
  SortId exp{"exp"};
  SortId proc{"proc"};
  VarSortId varexp{"varexp"};
  std::vector<std::string> channels;
  std::vector<std::set<unsigned>> sum_index_sets;

  CcsKit(std::vector<std::string> channels,
         std::vector<std::set<unsigned>> sum_index_sets);

  // Channels a, b, c; the empty sum (inaction) and the binary sum.
  static CcsKit standard();

  // "Sum" for the empty index set, else "Sum_i_j_...".
  static std::string sum_op_name(const std::set<unsigned>& indices);

  Term var(const std::string& name) const;
  Term zero() const;
  Term plus(Term a, Term b) const;
  Term inp(const std::string& channel, const std::string& binder,
           Term body) const;
  Term out(const std::string& channel, Term value, Term body) const;
  Term sum(const std::set<unsigned>& indices,
           const std::map<unsigned, Term>& alternatives) const;
};

}  // namespace termbind
