from __future__ import annotations

import pytest

from whqlab.generators import (
    chein_double,
    cyclic_table,
    group_algebra,
    groupoid_algebra,
    loop_algebra,
    loopoid_algebra,
    pair_groupoid,
    symmetric_table,
)


@pytest.fixture(scope="session")
def c2():
    return group_algebra(cyclic_table(2))


@pytest.fixture(scope="session")
def s3():
    return group_algebra(symmetric_table(3))


@pytest.fixture(scope="session")
def pair3():
    return groupoid_algebra(pair_groupoid(3))


@pytest.fixture(scope="session")
def m12_table():
    return chein_double(symmetric_table(3))


@pytest.fixture(scope="session")
def m12(m12_table):
    return loop_algebra(m12_table)


@pytest.fixture(scope="session")
def loopoid48(m12_table):
    return loopoid_algebra(2, m12_table)


@pytest.fixture(scope="session")
def four(s3, pair3, m12, loopoid48):
    """The four acceptance structures, keyed by short name."""
    return {"s3": s3, "pair3": pair3, "m12": m12, "loopoid48": loopoid48}


# -- acceptance summary ------------------------------------------------------------

ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion: ``criterion(n, title)`` returns a
    callback taking a detail string; the outcome is the test's outcome."""
    state = {}

    def start(number: int, title: str):
        state.update(number=number, title=title, detail="")

        def note(detail: str):
            state["detail"] = detail

        return note

    yield start
    if state:
        rep = getattr(request.node, "rep_call", None)
        ok = rep is not None and rep.passed
        ACCEPTANCE[state["number"]] = (state["title"], ok, state["detail"])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[n]
        line = f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
