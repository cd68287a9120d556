"""A small expression language for morphisms.

Grammar (composition is diagrammatic: ``f ; g`` means ``g∘f``)::

    expr  := term (";" term)*
    term  := atom (("⊗" | "(x)") atom)*
    atom  := name | "id[" spaces "]" | "c[" spaces "," spaces "]" | "(" expr ")"
    spaces := space (("⊗" | "(x)") space)*        # "K" is the unit object

The token ``(x)`` is always the ASCII tensor sign, so a morphism called ``x``
must be parenthesized with spaces: ``( x )``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Mapping, Union

from .errors import ArityMismatch, ExprSyntaxError, UnknownName
from .field import QQ, FieldSpec
from .report import CheckResult, check_equal
from .tensor import LinMap, SpaceSig, compose_all, identity, sig_str, swap, tensor

UNIT = "K"


# -- syntax tree ------------------------------------------------------------------


@dataclass(frozen=True)
class Name:
    name: str
    pos: tuple = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Ident:
    spaces: tuple
    pos: tuple = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Braid:
    left: tuple
    right: tuple
    pos: tuple = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Compose:
    """``parts[0] ; parts[1] ; ...`` (apply ``parts[0]`` first)."""

    parts: tuple
    pos: tuple = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Tensor:
    parts: tuple
    pos: tuple = field(default=(0, 0), compare=False, repr=False)


Expr = Union[Name, Ident, Braid, Compose, Tensor]


# -- tokenizer --------------------------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<tensor>⊗|\(x\))
  | (?P<semi>;)
  | (?P<lpar>\()
  | (?P<rpar>\))
  | (?P<lbr>\[)
  | (?P<rbr>\])
  | (?P<comma>,)
  | (?P<name>[^\W\d]\w*'*)
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(src: str) -> list[Token]:
    out = []
    line, line_start, i = 1, 0, 0
    while i < len(src):
        m = _TOKEN.match(src, i)
        if m is None:
            raise ExprSyntaxError(f"unexpected character {src[i]!r}", line, i - line_start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line, line_start = line + 1, m.end()
        elif kind != "ws":
            out.append(Token(kind, m.group(), line, i - line_start + 1))
        i = m.end()
    out.append(Token("end", "", line, i - line_start + 1))
    return out


# -- parser -----------------------------------------------------------------------


class _Parser:
    def __init__(self, src: str):
        self.toks = tokenize(src)
        self.k = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.k]

    def take(self, kind: str, what: str) -> Token:
        t = self.tok
        if t.kind != kind:
            found = "end of input" if t.kind == "end" else repr(t.text)
            raise ExprSyntaxError(f"expected {what}, found {found}", t.line, t.col)
        self.k += 1
        return t

    def expr(self) -> Expr:
        start = self.tok
        parts = [self.term()]
        while self.tok.kind == "semi":
            self.k += 1
            parts.append(self.term())
        return parts[0] if len(parts) == 1 else Compose(tuple(parts), (start.line, start.col))

    def term(self) -> Expr:
        start = self.tok
        parts = [self.atom()]
        while self.tok.kind == "tensor":
            self.k += 1
            parts.append(self.atom())
        return parts[0] if len(parts) == 1 else Tensor(tuple(parts), (start.line, start.col))

    def atom(self) -> Expr:
        t = self.tok
        pos = (t.line, t.col)
        if t.kind == "lpar":
            self.k += 1
            e = self.expr()
            self.take("rpar", "')'")
            return e
        if t.kind == "name":
            self.k += 1
            if t.text == "id" and self.tok.kind == "lbr":
                self.k += 1
                sp = self.spaces()
                self.take("rbr", "']'")
                return Ident(sp, pos)
            if t.text == "c" and self.tok.kind == "lbr":
                self.k += 1
                left = self.spaces()
                self.take("comma", "','")
                right = self.spaces()
                self.take("rbr", "']'")
                return Braid(left, right, pos)
            return Name(t.text, pos)
        found = "end of input" if t.kind == "end" else repr(t.text)
        raise ExprSyntaxError(f"expected a morphism, found {found}", t.line, t.col)

    def spaces(self) -> tuple:
        names = [self.take("name", "a space name").text]
        while self.tok.kind == "tensor":
            self.k += 1
            names.append(self.take("name", "a space name").text)
        return tuple(n for n in names if n != UNIT)


def parse_expr(src: str) -> Expr:
    """Parse ``src``; raises :class:`ExprSyntaxError` with line and column."""
    p = _Parser(src)
    e = p.expr()
    if p.tok.kind != "end":
        raise ExprSyntaxError(f"unexpected {p.tok.text!r}", p.tok.line, p.tok.col)
    return e


# -- printers -----------------------------------------------------------------------


def _spaces_text(sp: tuple, tsign: str) -> str:
    return tsign.join(sp) if sp else UNIT


def to_text(e: Expr, ascii: bool = False) -> str:
    """Diagrammatic form; re-parses to an equal tree."""
    tsign = "(x)" if ascii else "⊗"
    if isinstance(e, Name):
        return e.name
    if isinstance(e, Ident):
        return f"id[{_spaces_text(e.spaces, tsign)}]"
    if isinstance(e, Braid):
        return f"c[{_spaces_text(e.left, tsign)},{_spaces_text(e.right, tsign)}]"
    if isinstance(e, Compose):
        return " ; ".join(_wrap(p, (Compose, Tensor), ascii) for p in e.parts)
    return f" {tsign} ".join(_wrap(p, (Compose, Tensor), ascii) for p in e.parts)


def _wrap(e: Expr, kinds: tuple, ascii: bool) -> str:
    s = to_text(e, ascii)
    return f"({s})" if isinstance(e, kinds) else s


def to_classical(e: Expr) -> str:
    """Conventional form with ``∘``, rightmost factor applied first."""
    if isinstance(e, Compose):
        return " ∘ ".join(_classical_wrap(p, (Compose, Tensor)) for p in reversed(e.parts))
    if isinstance(e, Tensor):
        return " ⊗ ".join(_classical_wrap(p, (Compose, Tensor)) for p in e.parts)
    return to_text(e)


def _classical_wrap(e: Expr, kinds: tuple) -> str:
    s = to_classical(e)
    return f"({s})" if isinstance(e, kinds) else s


# -- typing and evaluation ----------------------------------------------------------


@dataclass
class EvalContext:
    """Named spaces (with dimensions) and named morphisms over one field."""

    spaces: dict[str, int]
    morphisms: dict[str, LinMap]
    field: FieldSpec = QQ

    def space_sig(self, names: tuple, pos: tuple = (None, None)) -> SpaceSig:
        out = []
        for n in names:
            if n not in self.spaces:
                raise UnknownName(n, *pos)
            out.append((n, self.spaces[n]))
        return tuple(out)

    def with_morphisms(self, extra: Mapping[str, LinMap]) -> EvalContext:
        return EvalContext(dict(self.spaces), {**self.morphisms, **extra}, self.field)


def infer(e: Expr, ctx: EvalContext) -> tuple[SpaceSig, SpaceSig]:
    """``(dom, cod)`` of ``e``; raises :class:`ArityMismatch` or :class:`UnknownName`."""
    if isinstance(e, Name):
        f = ctx.morphisms.get(e.name)
        if f is None:
            raise UnknownName(e.name, *e.pos)
        return f.dom, f.cod
    if isinstance(e, Ident):
        s = ctx.space_sig(e.spaces, e.pos)
        return s, s
    if isinstance(e, Braid):
        a, b = ctx.space_sig(e.left, e.pos), ctx.space_sig(e.right, e.pos)
        return a + b, b + a
    if isinstance(e, Tensor):
        sigs = [infer(p, ctx) for p in e.parts]
        return tuple(x for d, _ in sigs for x in d), tuple(x for _, c in sigs for x in c)
    sigs = [infer(p, ctx) for p in e.parts]
    for (p, (_, cod)), (q, (dom, _)) in zip(zip(e.parts, sigs), zip(e.parts[1:], sigs[1:])):
        if cod != dom:
            raise ArityMismatch(
                f"cannot compose {to_text(p)} : ... -> {sig_str(cod)} with {to_text(q)} : {sig_str(dom)} -> ...",
                left=cod,
                right=dom,
            )
    return sigs[0][0], sigs[-1][1]


def eval_expr(e: Expr | str, ctx: EvalContext) -> LinMap:
    if isinstance(e, str):
        e = parse_expr(e)
    infer(e, ctx)
    return _eval(e, ctx)


def _eval(e: Expr, ctx: EvalContext) -> LinMap:
    if isinstance(e, Name):
        return ctx.morphisms[e.name]
    if isinstance(e, Ident):
        return identity(ctx.space_sig(e.spaces), ctx.field)
    if isinstance(e, Braid):
        return swap(ctx.space_sig(e.left), ctx.space_sig(e.right), ctx.field)
    if isinstance(e, Tensor):
        return tensor(*(_eval(p, ctx) for p in e.parts))
    return compose_all(*(_eval(p, ctx) for p in reversed(e.parts)))


def check_identity(lhs: Expr | str, rhs: Expr | str, ctx: EvalContext, name: str | None = None) -> CheckResult:
    """Exact comparison of two expressions with matching signatures."""
    lhs = parse_expr(lhs) if isinstance(lhs, str) else lhs
    rhs = parse_expr(rhs) if isinstance(rhs, str) else rhs
    ls, rs = infer(lhs, ctx), infer(rhs, ctx)
    if ls != rs:
        raise ArityMismatch(
            f"sides have different signatures: {sig_str(ls[0])} -> {sig_str(ls[1])} "
            f"and {sig_str(rs[0])} -> {sig_str(rs[1])}",
            left=ls,
            right=rs,
        )
    label = name or f"{to_text(lhs)} = {to_text(rhs)}"
    return check_equal(label, _eval(lhs, ctx), _eval(rhs, ctx))


# -- standard contexts --------------------------------------------------------------

_ALIASES = {"η": "eta", "μ": "mu", "ε": "eps", "δ": "delta", "λ": "lambda", "lam": "lambda"}


def whq_context(H, extra: Mapping[str, LinMap] | None = None) -> EvalContext:
    """Names ``eta mu eps delta lambda piL piR piLbar piRbar`` (plus Greek
    aliases) for a :class:`~whqlab.whq.Whq`, and its space."""
    ms = {
        "eta": H.eta,
        "mu": H.mu,
        "eps": H.eps,
        "delta": H.delta,
        "lambda": H.lam,
        "piL": H.piL,
        "piR": H.piR,
        "piLbar": H.piLbar,
        "piRbar": H.piRbar,
    }
    for alias, target in _ALIASES.items():
        ms[alias] = ms[target]
    spaces = {name: dim for name, dim in H.H}
    ctx = EvalContext(spaces, ms, H.field)
    return ctx.with_morphisms(extra or {})


def comodule_context(cm, extra: Mapping[str, LinMap] | None = None) -> EvalContext:
    """:func:`whq_context` plus ``etaA muA rho`` and the space of ``A``."""
    ctx = whq_context(cm.H)
    for name, dim in cm.Asig:
        ctx.spaces[name] = dim
    ctx.morphisms.update(etaA=cm.A.eta, muA=cm.A.mu, rho=cm.rho)
    return ctx.with_morphisms(extra or {})


__all__ = [
    "Braid",
    "Compose",
    "EvalContext",
    "Expr",
    "Ident",
    "Name",
    "Tensor",
    "check_identity",
    "comodule_context",
    "eval_expr",
    "infer",
    "parse_expr",
    "to_classical",
    "to_text",
    "tokenize",
    "whq_context",
]
