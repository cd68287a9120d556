"""Typed sparse linear maps between tensor products of named spaces.

A :data:`SpaceSig` is a tuple of ``(name, dim)`` factors; the empty tuple is
the unit object K.  Tensor products are always flattened, so the monoidal
structure is strict: ``tensor(identity(()), f) == f``.

Basis vectors of a product space are enumerated row-major over the factor
sequence (the last factor varies fastest), i.e. ``e_i ⊗ e_j`` of an
``m``-by-``n`` product has index ``i * n + j``.  Every formula in the package
relies on this one convention.

A :class:`LinMap` stores one ``{row: value}`` dict per column.  Column dicts
are treated as immutable and may be shared between maps; this is what makes
composition with permutation-like maps (swaps, group-like coproducts) cheap.
"""

from __future__ import annotations

from math import prod
from typing import Iterable, Iterator, Sequence

from .errors import FieldMismatch, SignatureMismatch
from .field import QQ, FieldSpec, Scalar

SpaceSig = tuple  # tuple[tuple[str, int], ...]

K: SpaceSig = ()

_EMPTY: dict = {}


def space(name: str, dim: int) -> SpaceSig:
    if dim < 1:
        raise ValueError(f"space {name!r} must have dimension >= 1 (got {dim})")
    return ((name, dim),)


def sig_dim(sig: SpaceSig) -> int:
    return prod(d for _, d in sig)


def sig_str(sig: SpaceSig) -> str:
    if not sig:
        return "K"
    return "⊗".join(name for name, _ in sig)


def multi_index(sig: SpaceSig, index: int) -> tuple:
    """Split a flat basis index into per-factor indices (row-major)."""
    out = []
    for _, d in reversed(sig):
        index, r = divmod(index, d)
        out.append(r)
    return tuple(reversed(out))


def flat_index(sig: SpaceSig, multi: Sequence[int]) -> int:
    index = 0
    for (_, d), i in zip(sig, multi):
        index = index * d + i
    return index


class LinMap:
    """A linear map ``dom -> cod`` with exact sparse entries."""

    __slots__ = ("dom", "cod", "_cols", "field", "_factors", "_memo")

    def __init__(self, dom: SpaceSig, cod: SpaceSig, cols: Sequence[dict], field: FieldSpec = QQ):
        self.dom = tuple(dom)
        self.cod = tuple(cod)
        self._cols = tuple(cols)
        self.field = field
        self._factors = None
        self._memo = None

    @classmethod
    def _kronecker(cls, maps: Sequence[LinMap]) -> LinMap:
        """A Kronecker product whose columns are computed on demand."""
        out = cls.__new__(cls)
        out.dom = tuple(x for f in maps for x in f.dom)
        out.cod = tuple(x for f in maps for x in f.cod)
        out.field = maps[0].field
        out._cols = None
        out._factors = tuple((f, sig_dim(f.dom), sig_dim(f.cod)) for f in maps)
        out._memo = {}
        return out

    @property
    def cols(self) -> tuple:
        if self._cols is None:
            out = self._factors[0][0]
            for g, _, _ in self._factors[1:]:
                out = _tensor2(out, g)
            self._cols = out._cols
            self._factors = self._memo = None
        return self._cols

    def column(self, j: int) -> dict:
        """Column ``j`` without materializing a lazy Kronecker product."""
        if self._cols is not None:
            return self._cols[j]
        col = self._memo.get(j)
        if col is None:
            col = self._memo[j] = _kronecker_column(self._factors, j, self.field)
        return col

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_entries(cls, dom, cod, entries, field: FieldSpec = QQ) -> LinMap:
        """Build from ``{(row, col): value}`` or an iterable of triples."""
        items = entries.items() if isinstance(entries, dict) else ((r, c, v) for r, c, v in entries)
        n, m = sig_dim(dom), sig_dim(cod)
        cols = [dict() for _ in range(n)]
        for item in items:
            if isinstance(entries, dict):
                (r, c), v = item
            else:
                r, c, v = item
            if not (0 <= r < m and 0 <= c < n):
                raise IndexError(f"entry ({r}, {c}) outside {m}x{n}")
            v = field.normalize(cols[c].get(r, 0) + field.normalize(v))
            if v:
                cols[c][r] = v
            else:
                cols[c].pop(r, None)
        return cls(dom, cod, cols, field)

    @classmethod
    def from_dense(cls, dom, cod, rows: Sequence[Sequence], field: FieldSpec = QQ) -> LinMap:
        entries = {}
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                if v:
                    entries[(r, c)] = v
        out = cls.from_entries(dom, cod, entries, field)
        if len(rows) != sig_dim(cod) or any(len(row) != sig_dim(dom) for row in rows):
            raise ValueError("dense matrix does not match the signatures")
        return out

    @classmethod
    def from_function(cls, dom, cod, fn, field: FieldSpec = QQ) -> LinMap:
        """``fn(col_index) -> {row: value}`` for every basis vector of ``dom``."""
        cols = []
        for j in range(sig_dim(dom)):
            col = {r: field.normalize(v) for r, v in fn(j).items()}
            cols.append({r: v for r, v in col.items() if v})
        return cls(dom, cod, cols, field)

    # -- basic properties -------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (sig_dim(self.cod), sig_dim(self.dom))

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def entries(self) -> Iterator[tuple[int, int, Scalar]]:
        """Triples ``(row, col, value)`` in column-major order."""
        for j, col in enumerate(self.cols):
            for r in sorted(col):
                yield r, j, col[r]

    def entry(self, row: int, col: int) -> Scalar:
        return self.cols[col].get(row, 0)

    def to_dense(self) -> list[list]:
        rows, ncols = self.shape
        out = [[0] * ncols for _ in range(rows)]
        for r, c, v in self.entries():
            out[r][c] = v
        return out

    def rows(self) -> list[dict]:
        out = [dict() for _ in range(sig_dim(self.cod))]
        for j, col in enumerate(self.cols):
            for r, v in col.items():
                out[r][j] = v
        return out

    def transpose(self) -> LinMap:
        return LinMap(self.cod, self.dom, self.rows(), self.field)

    def apply(self, vec: dict) -> dict:
        acc: dict = {}
        for k, v in vec.items():
            for r, w in self.cols[k].items():
                acc[r] = acc.get(r, 0) + v * w
        return _clean(acc, self.field)

    def retype(self, dom: SpaceSig | None = None, cod: SpaceSig | None = None) -> LinMap:
        """Same matrix, new signatures (total dimensions must agree)."""
        dom = self.dom if dom is None else tuple(dom)
        cod = self.cod if cod is None else tuple(cod)
        if sig_dim(dom) != sig_dim(self.dom) or sig_dim(cod) != sig_dim(self.cod):
            raise SignatureMismatch("retype changes dimensions", dom, cod)
        return LinMap(dom, cod, self.cols, self.field)

    def is_zero(self) -> bool:
        return not any(self.cols)

    # -- operators --------------------------------------------------------

    def __matmul__(self, other: LinMap) -> LinMap:
        return compose(self, other)

    def __add__(self, other: LinMap) -> LinMap:
        return lincomb([(1, self), (1, other)])

    def __sub__(self, other: LinMap) -> LinMap:
        return lincomb([(1, self), (-1, other)])

    def __neg__(self) -> LinMap:
        return lincomb([(-1, self)])

    def scale(self, c) -> LinMap:
        return lincomb([(c, self)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinMap):
            return NotImplemented
        return equals(self, other)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        rows, cols = self.shape
        return f"LinMap({sig_str(self.dom)} -> {sig_str(self.cod)}, {rows}x{cols}, nnz={self.nnz}, {self.field})"


def _clean(acc: dict, field: FieldSpec) -> dict:
    if field.p is None:
        out = {}
        for r, v in acc.items():
            if v:
                out[r] = v if type(v) is int else field.normalize(v)
        return out
    p = field.p
    out = {}
    for r, v in acc.items():
        v %= p
        if v:
            out[r] = v
    return out


def _same_field(f: LinMap, g: LinMap) -> FieldSpec:
    if f.field != g.field:
        raise FieldMismatch(f"cannot mix {f.field} and {g.field}")
    return f.field


# -- constructors -------------------------------------------------------------


def identity(sig: SpaceSig, field: FieldSpec = QQ) -> LinMap:
    n = sig_dim(sig)
    return LinMap(sig, sig, [{j: 1} for j in range(n)], field)


def zero(dom: SpaceSig, cod: SpaceSig, field: FieldSpec = QQ) -> LinMap:
    return LinMap(dom, cod, [_EMPTY] * sig_dim(dom), field)


def swap(m: SpaceSig, n: SpaceSig, field: FieldSpec = QQ) -> LinMap:
    """The symmetry ``c_{M,N}: M⊗N -> N⊗M``, ``e_i⊗e_j ↦ e_j⊗e_i``."""
    dm, dn = sig_dim(m), sig_dim(n)
    cols = [None] * (dm * dn)
    for i in range(dm):
        for j in range(dn):
            cols[i * dn + j] = {j * dm + i: 1}
    return LinMap(tuple(m) + tuple(n), tuple(n) + tuple(m), cols, field)


def scalar_map(value, field: FieldSpec = QQ) -> LinMap:
    """A scalar as a 1x1 map ``K -> K``."""
    v = field.normalize(value)
    return LinMap(K, K, [{0: v} if v else _EMPTY], field)


def vector(cod: SpaceSig, coords: dict, field: FieldSpec = QQ) -> LinMap:
    """A vector of ``cod`` as a map ``K -> cod``."""
    col = {r: field.normalize(v) for r, v in coords.items()}
    return LinMap(K, cod, [{r: v for r, v in col.items() if v}], field)


def covector(dom: SpaceSig, coords: dict, field: FieldSpec = QQ) -> LinMap:
    cols = [_EMPTY] * sig_dim(dom)
    for j, v in coords.items():
        v = field.normalize(v)
        if v:
            cols[j] = {0: v}
    return LinMap(dom, K, cols, field)


# -- operations ---------------------------------------------------------------


def compose(f: LinMap, g: LinMap) -> LinMap:
    """``f ∘ g`` (apply ``g`` first)."""
    if f.dom != g.cod:
        raise SignatureMismatch(
            f"cannot compose: dom(f) = {sig_str(f.dom)} {f.dom} but cod(g) = {sig_str(g.cod)} {g.cod}",
            f.dom,
            g.cod,
        )
    field = _same_field(f, g)
    fcols = f._cols if f._cols is not None else _LazyColumns(f)
    out = []
    append = out.append
    p = field.p
    for col in g.cols:
        if not col:
            append(_EMPTY)
            continue
        if len(col) == 1:
            for k, v in col.items():
                fk = fcols[k]
                if v == 1 or not fk:
                    append(fk)
                elif p is None:
                    append({r: _norm_q(v * w) for r, w in fk.items()})
                else:
                    append({r: (v * w) % p for r, w in fk.items()})
            continue
        acc: dict = {}
        get = acc.get
        for k, v in col.items():
            for r, w in fcols[k].items():
                acc[r] = get(r, 0) + v * w
        append(_clean(acc, field))
    return LinMap(g.dom, f.cod, out, field)


def _norm_q(x):
    if type(x) is int:
        return x
    if x.denominator == 1:
        return int(x.numerator)
    return x


def compose_all(*maps: LinMap) -> LinMap:
    """``compose_all(f, g, h) == f ∘ g ∘ h``."""
    if not maps:
        raise ValueError("compose_all needs at least one map")
    out = maps[-1]
    for f in reversed(maps[:-1]):
        out = compose(f, out)
    return out


def _tensor2(f: LinMap, g: LinMap) -> LinMap:
    field = _same_field(f, g)
    m = sig_dim(g.cod)
    gcols = g.cols
    out = []
    append = out.append
    p = field.p
    # columns of g with at most one entry: (row, value) or None
    g_single = [next(iter(c.items())) if c else None for c in gcols] if all(len(c) <= 1 for c in gcols) else None
    g_unit = g_single is not None and all(s is None or s[1] == 1 for s in g_single)
    for c1 in f.cols:
        if not c1:
            out.extend([_EMPTY] * len(gcols))
            continue
        if g_single is not None and len(c1) == 1:
            ((r1, v1),) = c1.items()
            base = r1 * m
            if g_unit:
                out.extend([{base + s[0]: v1} if s else _EMPTY for s in g_single])
            elif p is None:
                out.extend([{base + s[0]: _norm_q(v1 * s[1])} if s else _EMPTY for s in g_single])
            else:
                out.extend([{base + s[0]: (v1 * s[1]) % p} if s else _EMPTY for s in g_single])
            continue
        for c2 in gcols:
            if not c2:
                append(_EMPTY)
                continue
            col = {}
            for r1, v1 in c1.items():
                base = r1 * m
                for r2, v2 in c2.items():
                    v = v1 * v2
                    col[base + r2] = v if p is None and type(v) is int else (v % p if p else _norm_q(v))
            append(col)
    return LinMap(f.dom + g.dom, f.cod + g.cod, out, field)


class _LazyColumns:
    __slots__ = ("column",)

    def __init__(self, f: LinMap):
        self.column = f.column

    def __getitem__(self, j: int) -> dict:
        return self.column(j)


def _kronecker_column(factors: Sequence[tuple], j: int, field: FieldSpec) -> dict:
    """Column ``j`` of a Kronecker product of ``(map, dom_dim, cod_dim)``."""
    cols = []
    for f, n, _ in reversed(factors):
        j, r = divmod(j, n)
        c = f.column(r)
        if not c:
            return _EMPTY
        cols.append(c)
    cols.reverse()
    p = field.p
    col = cols[0]
    for (_, _, m), c in zip(factors[1:], cols[1:]):
        nxt = {}
        for r1, v1 in col.items():
            base = r1 * m
            for r2, v2 in c.items():
                v = v1 * v2
                nxt[base + r2] = v if type(v) is int and p is None else (v % p if p else _norm_q(v))
        col = nxt
    return col


def tensor(*maps: LinMap) -> LinMap:
    """Kronecker product ``f ⊗ g ⊗ ...`` in the row-major convention.

    The result is lazy: composing it on the left of a sparse map only
    computes the columns that are hit.  Any other use materializes it.
    """
    if not maps:
        return identity(K)
    for g in maps[1:]:
        _same_field(maps[0], g)
    # the unit scalar on K is the monoidal unit and is absorbed
    maps = tuple(f for f in maps if f.dom or f.cod or f.column(0) != {0: 1}) or maps[:1]
    if len(maps) == 1:
        return maps[0]
    return LinMap._kronecker(maps)


def lincomb(terms: Iterable[tuple]) -> LinMap:
    """Exact sum of ``(scalar, LinMap)`` terms sharing dom and cod."""
    terms = list(terms)
    if not terms:
        raise ValueError("lincomb needs at least one term")
    first = terms[0][1]
    field = first.field
    for _, f in terms[1:]:
        if f.dom != first.dom or f.cod != first.cod:
            raise SignatureMismatch(
                f"lincomb: {sig_str(f.dom)} -> {sig_str(f.cod)} vs {sig_str(first.dom)} -> {sig_str(first.cod)}",
                (first.dom, first.cod),
                (f.dom, f.cod),
            )
        _same_field(first, f)
    n = len(first.cols)
    out = []
    for j in range(n):
        acc: dict = {}
        for c, f in terms:
            c = field.normalize(c)
            if not c:
                continue
            for r, v in f.cols[j].items():
                acc[r] = acc.get(r, 0) + c * v
        out.append(_clean(acc, field) if acc else _EMPTY)
    return LinMap(first.dom, first.cod, out, field)


def equals(f: LinMap, g: LinMap) -> bool:
    """Exact equality of signatures and entries."""
    return f.dom == g.dom and f.cod == g.cod and f.field == g.field and f.cols == g.cols


def first_difference(f: LinMap, g: LinMap) -> dict | None:
    """The lexicographically first basis position where ``f`` and ``g`` differ.

    Returns ``None`` when they are equal.  Positions are ordered by input
    multi-index, then output multi-index; both are reported.
    """
    if f.dom != g.dom or f.cod != g.cod:
        raise SignatureMismatch(
            f"cannot compare {sig_str(f.dom)} -> {sig_str(f.cod)} with {sig_str(g.dom)} -> {sig_str(g.cod)}",
            (f.dom, f.cod),
            (g.dom, g.cod),
        )
    for j, (cf, cg) in enumerate(zip(f.cols, g.cols)):
        if cf == cg:
            continue
        for r in sorted(set(cf) | set(cg)):
            a, b = cf.get(r, 0), cg.get(r, 0)
            if a != b:
                return {
                    "input": multi_index(f.dom, j),
                    "output": multi_index(f.cod, r),
                    "lhs": a,
                    "rhs": b,
                }
    return None


__all__ = [
    "K",
    "LinMap",
    "SpaceSig",
    "compose",
    "compose_all",
    "covector",
    "equals",
    "first_difference",
    "flat_index",
    "identity",
    "lincomb",
    "multi_index",
    "scalar_map",
    "sig_dim",
    "sig_str",
    "space",
    "swap",
    "tensor",
    "vector",
    "zero",
]
