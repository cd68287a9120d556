from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from whqlab.errors import DoesNotCoequalize, DoesNotEqualize, NotIdempotent, NotInvertible
from whqlab.factorization import (
    alternative_section,
    coequalizer,
    equalizer,
    factor_through_coequalizer,
    factor_through_equalizer,
    invert,
    rank,
    same_subspace,
    split_idempotent,
)
from whqlab.field import GF
from whqlab.galois import ComoduleMagma, canonical_gamma, coinvariants, gamma_inv_formula, nabla, tensor_over_coinvariants
from whqlab.tensor import LinMap, compose, compose_all, identity, space, tensor, zero

T, C = tensor, compose_all


def dense_rank(rows):
    """Textbook Gaussian elimination over Fractions."""
    m = [[Fraction(x) for x in r] for r in rows]
    r = 0
    for c in range(len(m[0]) if m else 0):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                factor = m[i][c] / m[r][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def M(rows, dom="X", cod="Y"):
    return LinMap.from_dense(space(dom, len(rows[0])), space(cod, len(rows)), rows)


small = st.integers(-3, 3)


@st.composite
def square(draw, n=None):
    n = n or draw(st.integers(1, 4))
    return draw(st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n))


@st.composite
def idempotent(draw):
    """``S D S⁻¹`` with ``S`` unitriangular-product invertible and ``D`` a 0/1 diagonal."""
    n = draw(st.integers(1, 4))
    up = [[1 if i == j else (draw(small) if j > i else 0) for j in range(n)] for i in range(n)]
    lo = [[1 if i == j else (draw(small) if j < i else 0) for j in range(n)] for i in range(n)]
    d = [draw(st.integers(0, 1)) for _ in range(n)]
    S = compose(M(up, "X", "X"), M(lo, "X", "X"))
    D = M([[d[i] if i == j else 0 for j in range(n)] for i in range(n)], "X", "X")
    return C(S, D, invert(S)), sum(d)


# -- splitting ----------------------------------------------------------------


def test_split_identity_and_diagonal():
    sp = split_idempotent(identity(space("X", 3)))
    assert sp.image_dim == 3 and sp.i.to_dense() == identity(space("Z", 3)).to_dense()
    sp = split_idempotent(M([[1, 0], [0, 0]], "X", "X"))
    assert sp.image_dim == 1
    assert sp.i.to_dense() == [[1], [0]] and sp.p.to_dense() == [[1, 0]]


def test_split_half_matrix():
    h = Fraction(1, 2)
    e = M([[h, h], [h, h]], "X", "X")
    sp = split_idempotent(e)
    assert sp.image_dim == 1
    assert compose(sp.i, sp.p) == e


def test_split_rejects_non_idempotent():
    with pytest.raises(NotIdempotent) as exc:
        split_idempotent(M([[2, 0], [0, 1]], "X", "X"))
    assert exc.value.witness is not None


def test_split_zero_idempotent():
    sp = split_idempotent(zero(space("X", 2), space("X", 2)))
    assert sp.image_dim == 0
    assert compose(sp.i, sp.p).is_zero()


@settings(max_examples=60, deadline=None)
@given(idempotent())
def test_split_properties(data):
    e, r = data
    sp = split_idempotent(e)
    assert sp.image_dim == r == rank(e)
    assert compose(sp.i, sp.p) == e
    assert compose(sp.p, sp.i) == identity(sp.i.dom)


def test_split_is_canonical():
    e, _ = (C(M([[1, 1], [0, 1]], "X", "X"), M([[1, 0], [0, 0]], "X", "X"), M([[1, -1], [0, 1]], "X", "X")), 1)
    a, b = split_idempotent(e), split_idempotent(e)
    assert a.i == b.i and a.p == b.p


# -- equalizers and coequalizers ------------------------------------------------


def test_equalizer_trivial_cases():
    X = space("X", 2)
    assert equalizer(identity(X), identity(X)).object_dim == 2
    assert equalizer(identity(X), zero(X, X)).object_dim == 0
    assert coequalizer(identity(X), identity(X)).object_dim == 2
    assert coequalizer(identity(X), zero(X, X)).object_dim == 0


@settings(max_examples=60, deadline=None)
@given(square(), st.data())
def test_equalizer_and_coequalizer_dimensions(f_rows, data):
    n = len(f_rows)
    g_rows = data.draw(square(n))
    f, g = M(f_rows, "X", "X"), M(g_rows, "X", "X")
    r = dense_rank([[a - b for a, b in zip(x, y)] for x, y in zip(f_rows, g_rows)])
    eq = equalizer(f, g)
    assert eq.object_dim == n - r
    assert compose(f, eq.arrow) == compose(g, eq.arrow)
    assert compose(eq.retraction, eq.arrow) == identity(eq.arrow.dom)
    q = coequalizer(f, g)
    assert q.object_dim == n - r
    assert compose(q.arrow, f) == compose(q.arrow, g)
    assert compose(q.arrow, q.section) == identity(q.arrow.cod)


def test_equalizer_universal_property():
    X = space("X", 3)
    f = M([[1, 0, 0], [0, 1, 0], [0, 0, 0]], "X", "X")
    eq = equalizer(f, zero(X, X))
    t = M([[0], [0], [5]], "K1", "X")
    u = factor_through_equalizer(eq, t)
    assert compose(eq.arrow, u) == t
    assert factor_through_equalizer(eq, eq.arrow) == identity(eq.arrow.dom)
    with pytest.raises(DoesNotEqualize):
        factor_through_equalizer(eq, M([[1], [0], [0]], "K1", "X"))


def test_coequalizer_universal_property_and_section_independence():
    X = space("X", 3)
    f = M([[1, 0, 0], [1, 0, 0], [0, 0, 0]], "X", "X")
    q = coequalizer(f, zero(X, X))
    assert factor_through_coequalizer(q, q.arrow) == identity(q.arrow.cod)
    t = M([[1, -1, 7]], "X", "Y")
    u = factor_through_coequalizer(q, t)
    assert compose(u, q.arrow) == t
    assert factor_through_coequalizer(q, t, alternative_section(q)) == u
    z = zero(X, space("Y", 1))
    assert factor_through_coequalizer(q, z).is_zero()
    with pytest.raises(DoesNotCoequalize):
        factor_through_coequalizer(q, M([[1, 0, 0]], "X", "Y"))


def test_hl_equalizer_and_coequalizer_on_pair_groupoid(pair3):
    H = pair3
    I = H.id
    eq = equalizer(H.delta, C(T(I, H.piL), H.delta))
    assert eq.object_dim == 3
    assert same_subspace(eq.arrow, split_idempotent(H.piL).i)
    q = coequalizer(H.mu, C(H.mu, T(I, H.piL)))
    assert q.object_dim == 3
    invert(compose(q.arrow, split_idempotent(H.piL).i))


# -- inversion ------------------------------------------------------------------


def test_invert_identity_and_singular():
    X = space("X", 3)
    assert invert(identity(X)) == identity(X)
    with pytest.raises(NotInvertible) as exc:
        invert(M([[1, 2], [2, 4]], "X", "X"))
    assert exc.value.rank == 1


@settings(max_examples=60, deadline=None)
@given(square())
def test_invert_matches_rank_oracle(rows):
    f = M(rows, "X", "X")
    if dense_rank(rows) < len(rows):
        with pytest.raises(NotInvertible):
            invert(f)
    else:
        g = invert(f)
        assert compose(g, f) == identity(f.dom) and compose(f, g) == identity(f.cod)


def test_invert_over_prime_field():
    F = GF(5)
    f = LinMap.from_dense(space("X", 2), space("X", 2), [[2, 1], [1, 1]], F)
    assert compose(invert(f), f) == identity(space("X", 2), F)


def test_canonical_gamma_inverse_on_c2(c2):
    cm = ComoduleMagma.of_whq(c2)
    coinv = coinvariants(cm)
    nab = nabla(cm)
    toc = tensor_over_coinvariants(cm, coinv)
    gd = canonical_gamma(cm, coinv, nab, toc)
    assert compose(gd.gamma, toc.n.arrow) == gd.gamma_bar
    assert invert(gd.gamma) == gamma_inv_formula(cm, toc, nab)
