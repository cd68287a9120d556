from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from whqlab.dsl import (
    Braid,
    Compose,
    Ident,
    Name,
    Tensor,
    check_identity,
    comodule_context,
    eval_expr,
    infer,
    parse_expr,
    to_classical,
    to_text,
    whq_context,
)
from whqlab.errors import ArityMismatch, ExprSyntaxError, UnknownName
from whqlab.galois import ComoduleMagma
from whqlab.generators import groupoid_algebra, pair_groupoid
from whqlab.tensor import compose_all, identity, swap, tensor

T, C = tensor, compose_all

# -- parse / print round trip ---------------------------------------------------------

names = st.sampled_from(["mu", "delta", "eta", "lambda", "f", "g'", "x1", "x", "λ", "Π"])
space_lists = st.lists(st.sampled_from(["H", "A", "B"]), max_size=3).map(tuple)
leaves = st.one_of(
    names.map(Name),
    space_lists.map(Ident),
    st.tuples(space_lists, space_lists).map(lambda lr: Braid(*lr)),
)


def _nodes(children):
    parts = st.lists(children, min_size=2, max_size=3).map(tuple)
    return st.one_of(parts.map(Compose), parts.map(Tensor))


exprs = st.recursive(leaves, _nodes, max_leaves=10)


@settings(max_examples=300)
@given(exprs, st.booleans())
def test_print_then_parse_is_identity(e, ascii):
    assert parse_expr(to_text(e, ascii=ascii)) == e


def test_parse_examples():
    e = parse_expr("(delta (x) delta) ; (id[H] (x) c[H,H] (x) id[H]) ; (mu (x) mu)")
    assert isinstance(e, Compose) and len(e.parts) == 3
    assert e.parts[1] == Tensor((Ident(("H",)), Braid(("H",), ("H",)), Ident(("H",))))
    assert parse_expr("id[K]") == Ident(())
    assert parse_expr("id[H ⊗ K ⊗ A]") == Ident(("H", "A"))
    assert parse_expr("a ; b ; c") == Compose((Name("a"), Name("b"), Name("c")))
    assert parse_expr("a ⊗ b ; c") == Compose((Tensor((Name("a"), Name("b"))), Name("c")))
    # "(x)" is the ASCII tensor sign; a morphism named x needs spaces inside parentheses
    assert parse_expr("( x )") == Name("x")
    with pytest.raises(ExprSyntaxError):
        parse_expr("(x)")


def test_classical_printer_reverses_composition():
    assert to_classical(parse_expr("mu ; delta")) == "delta ∘ mu"
    assert to_classical(parse_expr("(a ⊗ b) ; c")) == "c ∘ (a ⊗ b)"


@pytest.mark.parametrize(
    "src, line, column",
    [
        ("mu ;", 1, 5),
        ("mu ; ; delta", 1, 6),
        ("(mu", 1, 4),
        ("mu\n  ; delta )", 2, 11),
        ("id[H", 1, 5),
        ("c[H H]", 1, 5),
        ("mu # delta", 1, 4),
    ],
)
def test_syntax_errors_carry_positions(src, line, column):
    with pytest.raises(ExprSyntaxError) as exc:
        parse_expr(src)
    assert (exc.value.line, exc.value.column) == (line, column)
    assert f"line {line}, column {column}" in str(exc.value)


# -- evaluation ------------------------------------------------------------------------


def test_a1_both_sides_agree(c2):
    ctx = whq_context(c2)
    assert eval_expr("mu ; delta", ctx) == C(c2.delta, c2.mu)
    res = check_identity("mu ; delta", "(delta (x) delta) ; (id[H] (x) c[H,H] (x) id[H]) ; (mu (x) mu)", ctx, "a1")
    assert res.passed and res.name == "a1"


def test_target_antipode_identity_on_loopoid(loopoid48):
    ctx = whq_context(loopoid48)
    assert check_identity("delta ; (lambda ⊗ piL) ; mu", "lambda", ctx).passed
    bad = ctx.with_morphisms({"lambda": loopoid48.id})
    res = check_identity("delta ; (lambda ⊗ piL) ; mu", "lambda", bad)
    assert not res.passed and set(res.witness) >= {"input", "output"}


def test_identity_composition(c2):
    assert check_identity("id[H] ; id[H]", "id[H]", whq_context(c2)).passed


def test_greek_aliases(s3):
    ctx = whq_context(s3)
    assert eval_expr("δ ; (λ ⊗ id[H]) ; μ", ctx) == eval_expr("delta ; (lambda (x) id[H]) ; mu", ctx)


def test_arity_mismatch_reports_both_signatures(c2):
    ctx = whq_context(c2)
    with pytest.raises(ArityMismatch) as exc:
        eval_expr("eps ; mu", ctx)
    assert exc.value.left == () and exc.value.right == c2.H + c2.H
    with pytest.raises(ArityMismatch):
        check_identity("mu", "id[H]", ctx)


def test_unknown_names_are_located(c2):
    ctx = whq_context(c2)
    with pytest.raises(UnknownName) as exc:
        eval_expr("mu ;\n nope", ctx)
    assert (exc.value.line, exc.value.column) == (2, 2)
    with pytest.raises(UnknownName):
        eval_expr("id[Q]", ctx)


def test_comodule_context_names(pair3):
    cm = ComoduleMagma.of_whq(pair3)
    ctx = comodule_context(cm)
    assert eval_expr("rho ; (id[H] ⊗ eps)", ctx) == pair3.id
    assert infer(parse_expr("etaA ; rho"), ctx) == ((), pair3.H + pair3.H)


# -- compositional semantics ---------------------------------------------------------

ENDOS = ["lambda", "piL", "piR", "piLbar", "piRbar"]
PAIR2 = groupoid_algebra(pair_groupoid(2))


def _direct(e, H):
    """Evaluate a tree by recursion on the LinMap operations."""
    table = {"lambda": H.lam, "piL": H.piL, "piR": H.piR, "piLbar": H.piLbar, "piRbar": H.piRbar}
    if isinstance(e, Name):
        return table[e.name]
    if isinstance(e, Ident):
        return identity(H.H * len(e.spaces), H.field)
    if isinstance(e, Braid):
        return swap(H.H * len(e.left), H.H * len(e.right), H.field)
    if isinstance(e, Tensor):
        return tensor(*(_direct(p, H) for p in e.parts))
    return compose_all(*(_direct(p, H) for p in reversed(e.parts)))


@st.composite
def typed(draw, arity=None, depth=0):
    """An endomorphism expression on ``H^arity``."""
    arity = arity or draw(st.integers(1, 2))
    choice = draw(st.integers(0, 3 if depth < 3 else 1))
    if choice == 0:
        if arity == 1:
            return Name(draw(st.sampled_from(ENDOS)))
        return Ident(("H",) * arity)
    if choice == 1:
        if arity == 2:
            return Braid(("H",), ("H",))
        return Ident(("H",))
    if choice == 2 and arity == 2:
        return Tensor((draw(typed(1, depth + 1)), draw(typed(1, depth + 1))))
    parts = tuple(draw(typed(arity, depth + 1)) for _ in range(draw(st.integers(2, 3))))
    return Compose(parts)


@settings(max_examples=60, deadline=None)
@given(typed())
def test_evaluation_is_compositional(e):
    assert eval_expr(to_text(e), whq_context(PAIR2)) == _direct(e, PAIR2)
