"""Deterministic example families.

* group and I.P.-loop algebras (Hopf algebras and Hopf quasigroups),
* groupoid algebras (weak Hopf algebras),
* loopoid algebras: basis ``X × L × X`` for a finite set ``X`` and an I.P.
  loop ``L``, with ``(x,a,y)(y,b,z) = (x,ab,z)`` and 0 when the middle
  objects differ.  For ``|X| ≥ 2`` and nonassociative ``L`` these are weak
  Hopf quasigroups that are neither weak Hopf algebras nor Hopf quasigroups.

Every basis element is group-like: ``δ(g) = g⊗g`` and ``ε(g) = 1``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from importlib import resources
from typing import Sequence

from .errors import AssociativityFailure, AxiomVerificationFailed, InvalidGroupoid, IPVerificationFailed, NotALoop
from .field import QQ, FieldSpec
from .tensor import LinMap, space
from .whq import Whq, check_axioms

# -- Cayley tables --------------------------------------------------------------


@dataclass(frozen=True)
class CayleyTable:
    """Multiplication table on ``range(order)``: ``table[a][b] = a·b``."""

    table: tuple
    identity_index: int
    labels: tuple = ()

    def __post_init__(self):
        n = len(self.table)
        object.__setattr__(self, "table", tuple(tuple(row) for row in self.table))
        if self.labels:
            object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
            if len(self.labels) != n:
                raise ValueError(f"{len(self.labels)} labels for a table of order {n}")
        if any(len(row) != n for row in self.table):
            raise NotALoop("table is not square")
        if any(not (0 <= v < n) for row in self.table for v in row):
            raise NotALoop("table entry out of range")
        if not (0 <= self.identity_index < n):
            raise NotALoop("identity index out of range")

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    def associator_witness(self) -> tuple | None:
        """First triple with ``(ab)c ≠ a(bc)``."""
        t = self.table
        for a, b, c in itertools.product(range(self.order), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                return (a, b, c)
        return None

    @property
    def is_associative(self) -> bool:
        return self.associator_witness() is None

    @property
    def is_commutative(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def to_json(self) -> dict:
        out = {"identity": self.identity_index, "table": [list(r) for r in self.table]}
        if self.labels:
            out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_json(cls, data: dict) -> CayleyTable:
        return cls(tuple(tuple(r) for r in data["table"]), int(data["identity"]), tuple(data.get("labels", ())))


def find_identity(table: Sequence[Sequence[int]]) -> int:
    n = len(table)
    for e in range(n):
        if all(table[e][a] == a and table[a][e] == a for a in range(n)):
            return e
    raise NotALoop("no two-sided identity element")


@dataclass(frozen=True)
class IPResult:
    is_ip: bool
    inverse: tuple
    witness: dict | None = None


def ip_check(t: CayleyTable) -> IPResult:
    """Whether ``t`` is an inverse-property loop.

    Raises :class:`NotALoop` if ``t`` has no identity or a row/column is not
    a permutation.  Otherwise returns the inverse map and, on failure, the
    first pair ``(x, y)`` violating ``x⁻¹(xy) = y = (yx)x⁻¹``.
    """
    n, T, e = t.order, t.table, t.identity_index
    full = set(range(n))
    for a in range(n):
        if T[e][a] != a or T[a][e] != a:
            raise NotALoop(f"element {t.label(e)} is not a two-sided identity", witness={"element": a})
        if set(T[a]) != full:
            raise NotALoop(f"row {t.label(a)} is not a permutation", witness={"row": a})
        if {T[b][a] for b in range(n)} != full:
            raise NotALoop(f"column {t.label(a)} is not a permutation", witness={"column": a})
    inverse = []
    for a in range(n):
        right = T[a].index(e)
        left = next(b for b in range(n) if T[b][a] == e)
        if left != right:
            return IPResult(False, (), {"element": a, "left_inverse": left, "right_inverse": right})
        inverse.append(right)
    for x, y in itertools.product(range(n), repeat=2):
        xi = inverse[x]
        if T[xi][T[x][y]] != y or T[T[y][x]][xi] != y:
            return IPResult(False, tuple(inverse), {"pair": (x, y)})
    return IPResult(True, tuple(inverse), None)


def cyclic_table(n: int) -> CayleyTable:
    return CayleyTable(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)), 0, tuple(f"g{a}" for a in range(n)))


def symmetric_table(k: int = 3) -> CayleyTable:
    """``S_k`` with permutations in lexicographic order; ``(στ)(i) = σ(τ(i))``."""
    perms = list(itertools.permutations(range(k)))
    pos = {p: i for i, p in enumerate(perms)}
    table = tuple(tuple(pos[tuple(s[t[i]] for i in range(k))] for t in perms) for s in perms)
    labels = tuple("".join(str(i + 1) for i in p) for p in perms)
    return CayleyTable(table, 0, labels)


def load_table(name: str) -> CayleyTable:
    """A shipped table fixture: ``c2``, ``c3`` or ``s3``."""
    try:
        text = resources.files("whqlab").joinpath("data", f"{name}.json").read_text(encoding="utf-8")
    except FileNotFoundError as exc:
        raise ValueError(f"no table fixture named {name!r}") from exc
    return CayleyTable.from_json(json.loads(text))


def chein_double(G: CayleyTable) -> CayleyTable:
    """The Moufang loop ``M(G, 2)`` on ``G ∪ Gu``.

    Elements ``0..n-1`` are ``g`` and ``n..2n-1`` are ``gu``; the product is
    ``g·h = gh``, ``g·(hu) = (hg)u``, ``(gu)·h = (gh⁻¹)u``, ``(gu)(hu) = h⁻¹g``.
    """
    res = ip_check(G)
    wit = G.associator_witness()
    if wit is not None:
        raise AssociativityFailure("the Chein double needs a group", witness={"triple": wit})
    inv, T, n = res.inverse, G.table, G.order
    table = [[0] * (2 * n) for _ in range(2 * n)]
    for g in range(n):
        for h in range(n):
            table[g][h] = T[g][h]
            table[g][n + h] = n + T[h][g]
            table[n + g][h] = n + T[g][inv[h]]
            table[n + g][n + h] = T[inv[h]][g]
    labels = tuple(G.label(g) for g in range(n)) + tuple(f"{G.label(g)}u" for g in range(n))
    out = CayleyTable(tuple(map(tuple, table)), G.identity_index, labels)
    check = ip_check(out)
    if not check.is_ip:
        raise IPVerificationFailed("Chein double failed the inverse-property check", witness=check.witness)
    if (out.associator_witness() is None) != G.is_commutative:
        raise IPVerificationFailed("Chein double associativity does not match commutativity of G")
    return out


def non_ip_loop(n: int = 5) -> CayleyTable:
    """The first loop of order ``n`` (identity ``0``, lexicographic backtracking
    over Latin squares) that fails the inverse property."""
    if n < 5:
        raise ValueError("every loop of order below 5 is a group")
    rows = [list(range(n))] + [[r] + [None] * (n - 1) for r in range(1, n)]

    def cells():
        return [(r, c) for r in range(1, n) for c in range(1, n)]

    order = cells()

    def search(k: int):
        if k == len(order):
            t = CayleyTable(tuple(tuple(row) for row in rows), 0)
            return t if not ip_check(t).is_ip else None
        r, c = order[k]
        used = set(rows[r][:c]) | {rows[x][c] for x in range(r)}
        for v in range(n):
            if v not in used:
                rows[r][c] = v
                found = search(k + 1)
                if found is not None:
                    return found
        rows[r][c] = None
        return None

    found = search(0)
    if found is None:
        raise NotALoop(f"no loop of order {n} fails the inverse property")
    return found


# -- group-like structures ----------------------------------------------------


def _grouplike_whq(
    name: str,
    n: int,
    unit: dict,
    product,
    inverse: Sequence[int],
    labels: Sequence[str],
    field: FieldSpec,
) -> Whq:
    H = space(name, n)
    eta = LinMap(
        (),
        H,
        [{k: field.normalize(v) for k, v in unit.items()}],
        field,
    )
    mu_cols = []
    for a in range(n):
        for b in range(n):
            ab = product(a, b)
            mu_cols.append({ab: 1} if ab is not None else {})
    mu = LinMap(H + H, H, mu_cols, field)
    eps = LinMap(H, (), [{0: 1} for _ in range(n)], field)
    delta = LinMap(H, H + H, [{a * n + a: 1} for a in range(n)], field)
    lam = LinMap(H, H, [{inverse[a]: 1} for a in range(n)], field)
    return Whq(eta, mu, eps, delta, lam, tuple(labels))


def loop_algebra(t: CayleyTable, field: FieldSpec = QQ, name: str = "H") -> Whq:
    """The algebra of an I.P. loop (a Hopf quasigroup)."""
    res = ip_check(t)
    if not res.is_ip:
        raise NotALoop("table is not an inverse-property loop", witness=res.witness)
    labels = tuple(t.label(a) for a in range(t.order))
    return _grouplike_whq(name, t.order, {t.identity_index: 1}, t.mul, res.inverse, labels, field)


def group_algebra(t: CayleyTable, field: FieldSpec = QQ, name: str = "H") -> Whq:
    wit = t.associator_witness()
    if wit is not None:
        raise AssociativityFailure("group_algebra needs an associative table", witness={"triple": wit})
    return loop_algebra(t, field, name)


# -- groupoids ----------------------------------------------------------------


@dataclass(frozen=True)
class GroupoidPresentation:
    """A finite groupoid.

    ``source[f]`` and ``target[f]`` index ``objects``; ``compose[(g, f)]`` is
    ``g∘f`` and is defined exactly when ``source[g] == target[f]``.
    """

    objects: tuple
    morphisms: tuple
    source: tuple
    target: tuple
    compose: dict
    identities: tuple
    inverse: tuple

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        nm, no = len(self.morphisms), len(self.objects)
        if not (len(self.source) == len(self.target) == len(self.inverse) == nm and len(self.identities) == no):
            raise InvalidGroupoid("inconsistent lengths in groupoid presentation")
        s, t, comp = self.source, self.target, self.compose
        for g, f in itertools.product(range(nm), repeat=2):
            if s[g] == t[f]:
                h = comp.get((g, f))
                if h is None or s[h] != s[f] or t[h] != t[g]:
                    raise InvalidGroupoid(f"composite {g}∘{f} missing or mistyped", witness={"pair": (g, f)})
            elif (g, f) in comp:
                raise InvalidGroupoid(f"composite {g}∘{f} of non-composable pair", witness={"pair": (g, f)})
        for x, ix in enumerate(self.identities):
            if s[ix] != x or t[ix] != x:
                raise InvalidGroupoid(f"identity of object {x} has wrong endpoints")
        for f in range(nm):
            if comp[(self.identities[t[f]], f)] != f or comp[(f, self.identities[s[f]])] != f:
                raise InvalidGroupoid(f"identity law fails for morphism {f}", witness={"morphism": f})
            fi = self.inverse[f]
            if comp.get((f, fi)) != self.identities[t[f]] or comp.get((fi, f)) != self.identities[s[f]]:
                raise InvalidGroupoid(f"morphism {f} has no inverse", witness={"morphism": f})
        for h, g, f in itertools.product(range(nm), repeat=3):
            if s[h] == t[g] and s[g] == t[f]:
                if comp[(comp[(h, g)], f)] != comp[(h, comp[(g, f)])]:
                    raise InvalidGroupoid("composition is not associative", witness={"triple": (h, g, f)})

    def label(self, f: int) -> str:
        return str(self.morphisms[f])

    def to_json(self) -> dict:
        return {
            "objects": [str(x) for x in self.objects],
            "morphisms": [str(m) for m in self.morphisms],
            "source": list(self.source),
            "target": list(self.target),
            "compose": [[g, f, h] for (g, f), h in sorted(self.compose.items())],
            "identities": list(self.identities),
            "inverse": list(self.inverse),
        }

    @classmethod
    def from_json(cls, data: dict) -> GroupoidPresentation:
        return cls(
            tuple(data["objects"]),
            tuple(data["morphisms"]),
            tuple(data["source"]),
            tuple(data["target"]),
            {(g, f): h for g, f, h in data["compose"]},
            tuple(data["identities"]),
            tuple(data["inverse"]),
        )


def pair_groupoid(n: int) -> GroupoidPresentation:
    """Objects ``0..n-1`` with one arrow ``(x, y): y -> x`` for every pair."""
    if n < 1:
        raise InvalidGroupoid("a pair groupoid needs at least one object")
    pairs = [(x, y) for x in range(n) for y in range(n)]
    pos = {p: k for k, p in enumerate(pairs)}
    comp = {}
    for (x, y), (y2, z) in itertools.product(pairs, repeat=2):
        if y == y2:
            comp[(pos[(x, y)], pos[(y2, z)])] = pos[(x, z)]
    return GroupoidPresentation(
        tuple(range(n)),
        tuple(f"({x},{y})" for x, y in pairs),
        tuple(y for _, y in pairs),
        tuple(x for x, _ in pairs),
        comp,
        tuple(pos[(x, x)] for x in range(n)),
        tuple(pos[(y, x)] for x, y in pairs),
    )


def group_as_groupoid(t: CayleyTable) -> GroupoidPresentation:
    res = ip_check(t)
    wit = t.associator_witness()
    if not res.is_ip or wit is not None:
        raise InvalidGroupoid("a one-object groupoid needs a group table")
    n = t.order
    return GroupoidPresentation(
        ("*",),
        tuple(t.label(a) for a in range(n)),
        (0,) * n,
        (0,) * n,
        {(a, b): t.mul(a, b) for a in range(n) for b in range(n)},
        (t.identity_index,),
        res.inverse,
    )


def disjoint_union(P: GroupoidPresentation, Q: GroupoidPresentation) -> GroupoidPresentation:
    no, nm = len(P.objects), len(P.morphisms)
    comp = dict(P.compose)
    comp.update({(g + nm, f + nm): h + nm for (g, f), h in Q.compose.items()})
    return GroupoidPresentation(
        tuple(f"0:{x}" for x in P.objects) + tuple(f"1:{x}" for x in Q.objects),
        tuple(f"0:{m}" for m in P.morphisms) + tuple(f"1:{m}" for m in Q.morphisms),
        P.source + tuple(x + no for x in Q.source),
        P.target + tuple(x + no for x in Q.target),
        comp,
        P.identities + tuple(i + nm for i in Q.identities),
        P.inverse + tuple(i + nm for i in Q.inverse),
    )


def groupoid_algebra(P: GroupoidPresentation, field: FieldSpec = QQ, name: str = "H") -> Whq:
    """Product ``g·f = g∘f`` when composable and 0 otherwise; unit ``Σ 1_x``."""
    return _grouplike_whq(
        name,
        len(P.morphisms),
        {i: 1 for i in P.identities},
        lambda g, f: P.compose.get((g, f)),
        P.inverse,
        tuple(P.label(f) for f in range(len(P.morphisms))),
        field,
    )


# -- loopoids -----------------------------------------------------------------


def loopoid_algebra(
    objects: int | Sequence,
    L: CayleyTable,
    field: FieldSpec = QQ,
    name: str = "H",
    verify: bool = True,
) -> Whq:
    """Basis ``(x, a, y)`` in lexicographic order over ``X × L × X``.

    With ``verify`` the full axiom check runs and a failure raises
    :class:`AxiomVerificationFailed`.
    """
    X = list(range(objects)) if isinstance(objects, int) else list(objects)
    if not X:
        raise ValueError("a loopoid needs at least one object")
    res = ip_check(L)
    if not res.is_ip:
        raise NotALoop("loop table is not an inverse-property loop", witness=res.witness)
    nx, nl = len(X), L.order

    def idx(x, a, y):
        return (x * nl + a) * nx + y

    def product(u, v):
        x, rest = divmod(u, nl * nx)
        a, y = divmod(rest, nx)
        y2, rest = divmod(v, nl * nx)
        b, z = divmod(rest, nx)
        return idx(x, L.mul(a, b), z) if y == y2 else None

    inverse = [idx(y, res.inverse[a], x) for x in range(nx) for a in range(nl) for y in range(nx)]
    labels = [f"({X[x]},{L.label(a)},{X[y]})" for x in range(nx) for a in range(nl) for y in range(nx)]
    unit = {idx(x, L.identity_index, x): 1 for x in range(nx)}
    H = _grouplike_whq(name, nx * nl * nx, unit, product, inverse, labels, field)
    if verify:
        report = check_axioms(H)
        bad = report.first_failure
        if bad is not None:
            raise AxiomVerificationFailed(f"loopoid axiom {bad.name} fails", witness=bad.witness)
    return H


__all__ = [
    "CayleyTable",
    "GroupoidPresentation",
    "IPResult",
    "chein_double",
    "cyclic_table",
    "disjoint_union",
    "find_identity",
    "group_algebra",
    "group_as_groupoid",
    "groupoid_algebra",
    "ip_check",
    "load_table",
    "loop_algebra",
    "loopoid_algebra",
    "non_ip_loop",
    "pair_groupoid",
    "symmetric_table",
]
