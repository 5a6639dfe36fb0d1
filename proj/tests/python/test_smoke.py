# Smoke tests for the python bindings. The heavy property testing lives in
# the C++ suites; this just proves each exposed operation works end to end.

import pytest

import termbind as tb

ID_X = "(op Lam () ((0 (abs vlam x (v vlam x)))))"
ID_Y = "(op Lam () ((0 (abs vlam y (v vlam y)))))"
CAPTURE = "(op Lam () ((0 (abs vlam x (v vlam y)))))"

FLIP_MODEL = (
    "(model (carrier d0 d1)"
    " (fun c (() -> d0))"
    " (fun f ((d0) -> d1) ((d1) -> d0))"
    " (pred P (d0) (d1)))"
)


def test_parse_print_round_trip():
    t = tb.parse_term(ID_X)
    assert str(t) == ID_X
    assert tb.print_term(t) == ID_X
    with pytest.raises(ValueError):
        tb.parse_term("(op Lam ()")


def test_alpha_equivalence_and_hashing():
    a, b = tb.parse_term(ID_X), tb.parse_term(ID_Y)
    assert tb.alpha_eq(a, b)
    assert tb.alpha_eq_forall(a, b) and tb.alpha_eq_forall(a, b, sample=1)
    assert not tb.alpha_eq(a, tb.parse_term(CAPTURE))
    assert a != b  # == stays raw equality
    assert hash(a) == hash(b)  # hashing goes through the canonical form
    assert tb.canonical_str(a) == tb.canonical_str(b)


def test_capture_avoiding_subst():
    t = tb.parse_term(CAPTURE)
    r = tb.subst(t, tb.var("vlam", "x"), "y", "vlam")
    assert str(r) == "(op Lam () ((0 (abs vlam g$0 (v vlam x)))))"
    assert tb.free_vars(r) == [("vlam", "x")]
    assert tb.fresh("vlam", "y", r)
    assert not tb.fresh("vlam", "x", r)


def test_rename_swap_and_parallel_subst():
    t = tb.parse_term(CAPTURE)
    assert str(tb.swap(t, "x", "y", "vlam")) == \
        "(op Lam () ((0 (abs vlam y (v vlam x)))))"
    grafted = tb.psubst(tb.var("vlam", "y"), {("vlam", "y"): tb.parse_term(ID_X)})
    assert tb.alpha_eq(grafted, tb.parse_term(ID_Y))
    assert str(tb.vsubst(t, "z", "y", "vlam")) == \
        "(op Lam () ((0 (abs vlam x (v vlam z)))))"
    assert tb.fresh_var("vlam", [("vlam", "g$0")]) == "g$1"


def test_sorting():
    kit = tb.LambdaKit.standard()
    t = tb.parse_term(ID_X)
    assert tb.infer_sort(kit.sig, t) == "lam"
    assert tb.wls(kit.sig, "lam", t)
    broken = tb.parse_term("(op App ((0 (v vlam x))) ())")
    assert not tb.wls(kit.sig, "lam", broken)
    with pytest.raises(ValueError):
        tb.infer_sort(kit.sig, broken)
    assert kit.sig.sort_of_var("vlam") == "lam"
    assert kit.sig.is_in_bar("vlam", "lam")


def test_refresh_and_skeleton():
    t = tb.parse_term(ID_X)
    refreshed = tb.refresh_binders(t)
    assert str(refreshed) == "(op Lam () ((0 (abs vlam g$0 (v vlam g$0)))))"
    assert str(tb.refresh_binders(t, avoid=[("vlam", "g$0")])) == \
        "(op Lam () ((0 (abs vlam g$1 (v vlam g$1)))))"
    assert tb.skel_str(t) == tb.skel_str(refreshed)
    assert tb.skel_str(tb.var("vlam", "x")) == "(branch () ())"


def test_church_arithmetic():
    kit = tb.LambdaKit.standard()
    two_plus_three = kit.app(kit.app(kit.plus(), kit.church(2)), kit.church(3))
    five = tb.normalize(kit, two_plus_three)
    assert five is not None and tb.alpha_eq(five, kit.church(5))
    assert tb.beta_step(kit, kit.church(0)) is None
    omega_half = kit.lam("x", kit.app(kit.var("x"), kit.var("x")))
    assert tb.normalize(kit, kit.app(omega_half, omega_half), fuel=10) is None
    with pytest.raises(ValueError):
        tb.beta_step(kit, tb.parse_term("(op App ((0 (v vlam x))) ())"))


def test_fol_evaluation():
    kit = tb.FolKit({"c": 0, "f": 1}, {"P": 1})
    model = tb.parse_model(FLIP_MODEL)
    assert tb.validate_model(kit, model) == []
    everywhere = kit.all("x", kit.pred("P", [kit.var("x")]))
    assert tb.eval_fol(kit, model, {}, everywhere) is True
    flipped = kit.pred("P", [kit.fun("f", [kit.var("x")])])
    assert tb.eval_fol(kit, model, {("vtrm", "x"): "d0"}, flipped) is True
    assert tb.eval_fol(kit, model, {("vtrm", "x"): "d0"},
                       kit.fun("f", [kit.var("x")])) == "d1"
    with pytest.raises(KeyError):
        tb.eval_fol(kit, model, {}, flipped)


def test_ccs_and_generation():
    kit = tb.CcsKit.standard()
    stop = kit.sum(set(), {})
    p = kit.inp("a", "x", kit.out("b", kit.var("x"), stop))
    assert tb.infer_sort(kit.sig, p) == "proc"
    assert tb.infer_sort(kit.sig, kit.plus(kit.var("x"), kit.zero())) == "exp"
    for seed in range(5):
        t = tb.gen_term(kit.sig, "proc", max_depth=4, seed=seed)
        assert tb.wls(kit.sig, "proc", t)
    assert str(tb.gen_term(kit.sig, "proc", seed=7)) == \
        str(tb.gen_term(kit.sig, "proc", seed=7))


def test_signature_parsing():
    sig = tb.parse_signature(str(tb.LambdaKit.standard().sig))
    assert sig.sorts() == ["lam"]
    assert sig.varsorts() == ["vlam"]
    with pytest.raises(ValueError):
        tb.parse_signature("(signature (sorts s) (varsorts (v ghost)))")
