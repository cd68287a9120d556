"""Idempotent splitting, equalizers, coequalizers and exact inversion.

Everything rests on one sparse exact row reduction, :func:`rref`.  Pivots are
chosen by first nonzero column and the result is fully reduced, so every
image, kernel and cokernel basis produced here is the canonical
reduced-echelon basis of its subspace: the same subspace always yields the
same matrices, bit for bit.

Bases are still arbitrary from the algebraic point of view.  Callers should
compare composites (``i ∘ p``, ``s ∘ r``), never raw ``i`` or ``p`` matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DoesNotCoequalize, DoesNotEqualize, NotIdempotent, NotInvertible, SignatureMismatch
from .field import FieldSpec
from .tensor import LinMap, SpaceSig, compose, first_difference, identity, sig_dim, sig_str, space, tensor

_EMPTY: dict = {}


def rref(rows, field: FieldSpec) -> dict[int, dict]:
    """Reduced row echelon form of sparse ``rows``.

    Returns ``{pivot_column: row}`` where each row has a 1 at its pivot and
    zeros at every other pivot column.
    """
    p = field.p
    norm = field.normalize
    pivots: dict[int, dict] = {}
    for row in rows:
        if not row:
            continue
        r = dict(row)
        while True:
            hits = [c for c in r if c in pivots]
            if not hits:
                break
            c = min(hits)
            factor = r[c]
            for k, v in pivots[c].items():
                x = r.get(k, 0) - factor * v
                x = x % p if p else (x if type(x) is int else norm(x))
                if x:
                    r[k] = x
                else:
                    r.pop(k, None)
        if not r:
            continue
        lead = min(r)
        lv = r[lead]
        if lv != 1:
            inv = field.inv(lv)
            r = {k: norm(v * inv) for k, v in r.items()}
        pivots[lead] = r
    for c in sorted(pivots, reverse=True):
        r = pivots[c]
        others = sorted(k for k in r if k != c and k in pivots)
        if not others:
            continue
        r = dict(r)
        for k in others:
            factor = r.get(k, 0)
            if not factor:
                continue
            for kk, v in pivots[k].items():
                x = r.get(kk, 0) - factor * v
                x = x % p if p else (x if type(x) is int else norm(x))
                if x:
                    r[kk] = x
                else:
                    r.pop(kk, None)
        pivots[c] = r
    return dict(sorted(pivots.items()))


def rank(f: LinMap) -> int:
    return len(rref(f.cols, f.field))


def _kernel_vectors(rows, ncols: int, field: FieldSpec) -> tuple[list[int], list[dict]]:
    """Free columns and the matching reduced-echelon kernel basis."""
    piv = rref(rows, field)
    free = [j for j in range(ncols) if j not in piv]
    hits: dict[int, list] = {}
    for c, row in piv.items():
        for k, v in row.items():
            if k != c:
                hits.setdefault(k, []).append((c, v))
    basis = []
    for j in free:
        vec = {j: 1}
        for c, v in hits.get(j, ()):
            vec[c] = field.normalize(-v)
        basis.append(vec)
    return free, basis


# -- splitting ----------------------------------------------------------------


@dataclass(frozen=True)
class SplitPair:
    """``e = i ∘ p`` with ``p ∘ i = id``; ``i: Z -> Y``, ``p: Y -> Z``."""

    image_dim: int
    i: LinMap
    p: LinMap


def split_idempotent(e: LinMap, name: str = "Z") -> SplitPair:
    """Split an idempotent through its image (named ``name``).

    A zero idempotent splits through a zero-dimensional image; the image is
    then represented by the signature ``((name, 0),)``.
    """
    if e.dom != e.cod:
        raise SignatureMismatch(f"split_idempotent: {sig_str(e.dom)} -> {sig_str(e.cod)} is not an endomorphism")
    ee = compose(e, e)
    diff = first_difference(ee, e)
    if diff is not None:
        raise NotIdempotent(f"e∘e ≠ e at basis vector {diff['input']}", witness=diff)
    field = e.field
    piv = rref(e.cols, field)
    order = list(piv)
    pos = {c: k for k, c in enumerate(order)}
    img = _object_sig(name, len(order))
    i = LinMap(img, e.cod, [piv[c] for c in order], field)
    pcols = []
    for col in e.cols:
        pcols.append({pos[c]: v for c, v in col.items() if c in pos} if col else _EMPTY)
    p = LinMap(e.dom, img, pcols, field)
    return SplitPair(len(order), i, p)


def _object_sig(name: str, dim: int) -> SpaceSig:
    # zero-dimensional objects are allowed for degenerate universal constructions
    return ((name, dim),) if dim == 0 else space(name, dim)


# -- equalizers ---------------------------------------------------------------


@dataclass(frozen=True)
class EqualizerData:
    """Injection ``arrow: E -> X`` with ``f ∘ arrow = g ∘ arrow``.

    ``retraction`` is a left inverse of ``arrow`` (projection onto the free
    coordinates of the reduced-echelon kernel basis).
    """

    object_dim: int
    arrow: LinMap
    retraction: LinMap
    f: LinMap
    g: LinMap


def equalizer(f: LinMap, g: LinMap, name: str = "E") -> EqualizerData:
    if f.dom != g.dom or f.cod != g.cod:
        raise SignatureMismatch(
            f"equalizer: {sig_str(f.dom)} -> {sig_str(f.cod)} vs {sig_str(g.dom)} -> {sig_str(g.cod)}",
            (f.dom, f.cod),
            (g.dom, g.cod),
        )
    field = f.field
    diff = f - g
    n = sig_dim(f.dom)
    free, basis = _kernel_vectors(diff.rows(), n, field)
    obj = _object_sig(name, len(free))
    arrow = LinMap(obj, f.dom, basis, field)
    pos = {j: k for k, j in enumerate(free)}
    retraction = LinMap(f.dom, obj, [{pos[j]: 1} if j in pos else _EMPTY for j in range(n)], field)
    return EqualizerData(len(free), arrow, retraction, f, g)


def factor_through_equalizer(eq: EqualizerData, t: LinMap) -> LinMap:
    """The unique ``u`` with ``eq.arrow ∘ u = t``."""
    if t.cod != eq.arrow.cod:
        raise SignatureMismatch(
            f"factor_through_equalizer: cod(t) = {sig_str(t.cod)} but the equalizer lives in {sig_str(eq.arrow.cod)}"
        )
    diff = first_difference(compose(eq.f, t), compose(eq.g, t))
    if diff is not None:
        raise DoesNotEqualize(f"f∘t ≠ g∘t at input {diff['input']}", witness=diff)
    u = compose(eq.retraction, t)
    check = first_difference(compose(eq.arrow, u), t)
    if check is not None:  # pragma: no cover - guarded by the kernel construction
        raise DoesNotEqualize("lift does not re-substitute", witness=check)
    return u


# -- coequalizers -------------------------------------------------------------


@dataclass(frozen=True)
class CoequalizerData:
    """Surjection ``arrow: Y -> Q`` with ``arrow ∘ f = arrow ∘ g``.

    ``section`` is a right inverse of ``arrow`` (inclusion of the non-pivot
    coordinates).
    """

    object_dim: int
    arrow: LinMap
    section: LinMap
    f: LinMap
    g: LinMap


def coequalizer(f: LinMap, g: LinMap, name: str = "Q") -> CoequalizerData:
    if f.dom != g.dom or f.cod != g.cod:
        raise SignatureMismatch(
            f"coequalizer: {sig_str(f.dom)} -> {sig_str(f.cod)} vs {sig_str(g.dom)} -> {sig_str(g.cod)}",
            (f.dom, f.cod),
            (g.dom, g.cod),
        )
    field = f.field
    diff = f - g
    piv = rref(diff.cols, field)
    m = sig_dim(f.cod)
    keep = [j for j in range(m) if j not in piv]
    pos = {j: k for k, j in enumerate(keep)}
    obj = _object_sig(name, len(keep))
    cols = []
    for j in range(m):
        if j in pos:
            cols.append({pos[j]: 1})
        else:
            row = piv[j]
            cols.append({pos[k]: field.normalize(-v) for k, v in row.items() if k != j})
    arrow = LinMap(f.cod, obj, cols, field)
    section = LinMap(obj, f.cod, [{j: 1} for j in keep], field)
    return CoequalizerData(len(keep), arrow, section, f, g)


def tensor_coequalizer(left: LinMap, q: CoequalizerData) -> CoequalizerData:
    """``X ⊗ q`` for ``left = id_X``, again a coequalizer (⊗ is exact over a field)."""
    return CoequalizerData(
        sig_dim(left.cod) * q.object_dim,
        tensor(left, q.arrow),
        tensor(left, q.section),
        tensor(left, q.f),
        tensor(left, q.g),
    )


def factor_through_coequalizer(q: CoequalizerData, t: LinMap, section: LinMap | None = None) -> LinMap:
    """The unique ``u`` with ``u ∘ q.arrow = t``.

    ``section`` may override the right inverse used; by uniqueness the
    result does not depend on it.
    """
    if t.dom != q.arrow.dom:
        raise SignatureMismatch(
            f"factor_through_coequalizer: dom(t) = {sig_str(t.dom)} but the coequalizer starts at {sig_str(q.arrow.dom)}"
        )
    diff = first_difference(compose(t, q.f), compose(t, q.g))
    if diff is not None:
        raise DoesNotCoequalize(f"t∘f ≠ t∘g at input {diff['input']}", witness=diff)
    u = compose(t, q.section if section is None else section)
    check = first_difference(compose(u, q.arrow), t)
    if check is not None:
        raise DoesNotCoequalize("factorization does not re-substitute (bad section?)", witness=check)
    return u


def alternative_section(q: CoequalizerData) -> LinMap:
    """Another right inverse of ``q.arrow``: the canonical one shifted by
    a vector of ``im(f - g)`` in every column."""
    diff = q.f - q.g
    shift = next((c for c in diff.cols if c), None)
    if shift is None:
        return q.section
    field = q.arrow.field
    cols = []
    for col in q.section.cols:
        acc = dict(col)
        for r, v in shift.items():
            acc[r] = field.normalize(acc.get(r, 0) + v)
        cols.append({r: v for r, v in acc.items() if v})
    return LinMap(q.section.dom, q.section.cod, cols, field)


# -- inversion ----------------------------------------------------------------


def invert(f: LinMap) -> LinMap:
    """Exact two-sided inverse of a square (after flattening) map."""
    n, m = f.shape
    if n != m:
        raise NotInvertible(f"{sig_str(f.dom)} -> {sig_str(f.cod)} is not square ({n}x{m})", rank=rank(f), dim=max(n, m))
    field = f.field
    rows = f.rows()
    aug = []
    for k, row in enumerate(rows):
        r = dict(row)
        r[n + k] = 1
        aug.append(r)
    piv = rref(aug, field)
    left = [c for c in piv if c < n]
    if len(left) < n:
        raise NotInvertible(
            f"{sig_str(f.dom)} -> {sig_str(f.cod)} has rank {len(left)} < {n}", rank=len(left), dim=n
        )
    cols = [dict() for _ in range(n)]
    for c in range(n):
        for k, v in piv[c].items():
            if k >= n:
                cols[k - n][c] = v
    inv = LinMap(f.cod, f.dom, cols, field)
    if compose(inv, f) != identity(f.dom, field) or compose(f, inv) != identity(f.cod, field):
        raise NotInvertible("inverse failed re-substitution", rank=len(left), dim=n)  # pragma: no cover
    return inv


def same_subspace(a: LinMap, b: LinMap) -> bool:
    """Whether two injections into the same space have the same image."""
    if a.cod != b.cod:
        return False
    ra, rb = rank(a), rank(b)
    if ra != rb:
        return False
    return len(rref(list(a.cols) + list(b.cols), a.field)) == ra
