from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from whqlab.errors import AssociativityFailure, InvalidGroupoid, NotALoop
from whqlab.generators import (
    CayleyTable,
    GroupoidPresentation,
    chein_double,
    cyclic_table,
    ip_check,
    load_table,
    loop_algebra,
    loopoid_algebra,
    non_ip_loop,
    pair_groupoid,
    symmetric_table,
)


def reduced_latin_squares(n):
    """All loops on ``range(n)`` with identity 0, by plain backtracking."""
    rows = [list(range(n))] + [[r] + [None] * (n - 1) for r in range(1, n)]
    cells = [(r, c) for r in range(1, n) for c in range(1, n)]

    def go(k):
        if k == len(cells):
            yield tuple(tuple(r) for r in rows)
            return
        r, c = cells[k]
        for v in range(n):
            if v not in rows[r][:c] and all(rows[x][c] != v for x in range(r)):
                rows[r][c] = v
                yield from go(k + 1)
        rows[r][c] = None

    yield from go(0)


def ip_oracle(T):
    n = len(T)
    for x in range(n):
        inv = [y for y in range(n) if T[x][y] == 0 and T[y][x] == 0]
        if len(inv) != 1:
            return False
        xi = inv[0]
        if any(T[xi][T[x][y]] != y or T[T[y][x]][xi] != y for y in range(n)):
            return False
    return True


def is_associative(T):
    n = range(len(T))
    return all(T[T[a][b]][c] == T[a][T[b][c]] for a in n for b in n for c in n)


# -- inverse property ------------------------------------------------------------


def test_ip_check_agrees_with_oracle_on_every_loop_of_order_five():
    squares = list(reduced_latin_squares(5))
    assert len(squares) == 56
    for T in squares:
        assert ip_check(CayleyTable(T, 0)).is_ip == ip_oracle(T)


def test_groups_are_ip():
    assert ip_check(cyclic_table(2)).is_ip
    assert ip_check(symmetric_table(3)).is_ip


def test_non_ip_loop_is_deterministic_and_fails_ip():
    t = non_ip_loop(5)
    assert t.table == ((0, 1, 2, 3, 4), (1, 0, 3, 4, 2), (2, 3, 4, 0, 1), (3, 4, 1, 2, 0), (4, 2, 0, 1, 3))
    res = ip_check(t)
    assert not res.is_ip
    assert res.witness == {"element": 2, "left_inverse": 4, "right_inverse": 3}
    assert not ip_oracle(t.table)
    with pytest.raises(ValueError):
        non_ip_loop(4)


def test_ip_check_rejects_non_loops():
    with pytest.raises(NotALoop):
        ip_check(CayleyTable(((0, 1), (1, 1)), 0))
    with pytest.raises(NotALoop):
        ip_check(CayleyTable(((1, 0), (0, 1)), 0))


def test_loop_algebra_requires_ip():
    with pytest.raises(NotALoop):
        loop_algebra(non_ip_loop(5))


# -- Chein doubles -------------------------------------------------------------------


@pytest.mark.parametrize(
    "G, order, associative",
    [(cyclic_table(2), 4, True), (cyclic_table(3), 6, True), (symmetric_table(3), 12, False)],
)
def test_chein_double(G, order, associative):
    M = chein_double(G)
    assert M.order == order
    assert ip_oracle(M.table)
    assert is_associative(M.table) == associative
    assert (M.associator_witness() is None) == associative


def test_chein_double_of_s3_is_moufang():
    T = chein_double(symmetric_table(3)).table
    n = range(len(T))
    assert all(T[z][T[x][T[z][y]]] == T[T[T[z][x]][z]][y] for x in n for y in n for z in n)


def test_chein_double_witness_is_a_real_associator():
    M = chein_double(symmetric_table(3))
    a, b, c = M.associator_witness()
    assert M.mul(M.mul(a, b), c) != M.mul(a, M.mul(b, c))


def test_chein_double_needs_a_group():
    with pytest.raises(AssociativityFailure):
        chein_double(chein_double(symmetric_table(3)))


# -- fixtures and serialization -------------------------------------------------------


@pytest.mark.parametrize("name, built", [("c2", cyclic_table(2)), ("c3", cyclic_table(3)), ("s3", symmetric_table(3))])
def test_shipped_tables_match_generators(name, built):
    assert load_table(name).table == built.table
    with pytest.raises(ValueError):
        load_table("nope")


@given(st.sampled_from([cyclic_table(4), symmetric_table(3), chein_double(cyclic_table(3)), non_ip_loop(5)]))
def test_table_json_round_trip(t):
    assert CayleyTable.from_json(t.to_json()) == t


def test_groupoid_json_round_trip_and_validation():
    P = pair_groupoid(3)
    assert GroupoidPresentation.from_json(P.to_json()).to_json() == P.to_json()
    data = P.to_json()
    data["inverse"] = [0] * len(data["inverse"])
    with pytest.raises(InvalidGroupoid):
        GroupoidPresentation.from_json(data)


def test_pair_groupoid_shape():
    P = pair_groupoid(3)
    assert len(P.morphisms) == 9 and len(P.objects) == 3
    for g, f in itertools.product(range(9), repeat=2):
        assert ((g, f) in P.compose) == (P.source[g] == P.target[f])


def test_loopoid_needs_objects_and_ip_loop():
    with pytest.raises(ValueError):
        loopoid_algebra(0, cyclic_table(2))
    with pytest.raises(NotALoop):
        loopoid_algebra(2, non_ip_loop(5))
