"""Terms over many-sorted binding signatures.

Alpha-equivalence, capture-avoiding (parallel) substitution, sort checking,
structural folds and finite-model evaluation, backed by the C++ core.
"""

from ._termbind import (
    CcsKit,
    EvalError,
    FiniteModel,
    FolKit,
    IllSorted,
    LambdaKit,
    ParseError,
    Signature,
    Term,
    ValuationUndefined,
    alpha_eq,
    alpha_eq_forall,
    beta_step,
    canonical_str,
    eval_fol,
    free_vars,
    fresh,
    fresh_var,
    gen_term,
    infer_sort,
    normalize,
    parse_model,
    parse_signature,
    parse_term,
    print_term,
    psubst,
    refresh_binders,
    skel_str,
    subst,
    swap,
    validate_model,
    var,
    vsubst,
    wls,
)

__all__ = [
    "CcsKit",
    "EvalError",
    "FiniteModel",
    "FolKit",
    "IllSorted",
    "LambdaKit",
    "ParseError",
    "Signature",
    "Term",
    "ValuationUndefined",
    "alpha_eq",
    "alpha_eq_forall",
    "beta_step",
    "canonical_str",
    "eval_fol",
    "free_vars",
    "fresh",
    "fresh_var",
    "gen_term",
    "infer_sort",
    "normalize",
    "parse_model",
    "parse_signature",
    "parse_term",
    "print_term",
    "psubst",
    "refresh_binders",
    "skel_str",
    "subst",
    "swap",
    "validate_model",
    "var",
    "vsubst",
    "wls",
]

__version__ = "0.1.0"
