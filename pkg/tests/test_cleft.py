from __future__ import annotations

import pytest

from whqlab.cleft import (
    CleftWitness,
    check_c2_equivalence,
    check_c4_equivalence,
    check_cleft,
    check_cleft_hq,
    cleft_from_galois,
    cleft_properties,
    corollary_hq,
    galois_from_cleft,
    roundtrip,
)
from whqlab.errors import NotAHopfQuasigroup
from whqlab.factorization import invert
from whqlab.galois import (
    ComoduleMagma,
    canonical_gamma,
    coinvariants,
    is_galois,
    nabla,
    tensor_over_coinvariants,
)
from whqlab.tensor import compose_all, tensor, zero
from whqlab.whq import UnitalMagma

T, C = tensor, compose_all

NAMES = ["c2", "s3", "pair3", "m12", "loopoid48"]


def setup(H):
    cm = ComoduleMagma.of_whq(H)
    coinv = coinvariants(cm)
    nab = nabla(cm)
    toc = tensor_over_coinvariants(cm, coinv)
    gd = canonical_gamma(cm, coinv, nab, toc)
    return cm, coinv, nab, toc, gd


@pytest.fixture(scope="module", params=NAMES)
def regular(request):
    H = request.getfixturevalue(request.param)
    return request.param, setup(H)


def failed(rep):
    return {c.name for c in rep.failures}


def test_regular_witness_is_cleft(regular):
    _, (cm, coinv, *_rest) = regular
    w = CleftWitness.regular(cm)
    rep = check_cleft(cm, w)
    assert rep.passed and rep.names() == ["h-comodule", "c1", "c2", "c3", "c4"]
    props = cleft_properties(cm, coinv, w)
    assert props.report.passed, props.report.summary()
    assert props.pA is not None
    assert {"i-h-hinv", "i-qA", "ii", "iii-left", "iii-right", "iv-left", "iv-right", "v", "vi"} == set(props.report.names())


def test_equivalence_pairs_on_regular_witness(regular):
    _, (cm, coinv, *_rest) = regular
    w = CleftWitness.regular(cm)
    assert check_c2_equivalence(cm, w).values == (True, True)
    assert check_c4_equivalence(cm, coinv, w).values == (True, True)


def test_galois_from_cleft_matches_exact_inverse(regular):
    _, (cm, coinv, nab, toc, gd) = regular
    gfc = galois_from_cleft(cm, coinv, toc, nab, CleftWitness.regular(cm), gd)
    assert gfc.passed, gfc.report.summary()
    assert gfc.galois.gamma_inv == invert(gd.gamma)
    assert gfc.normal_basis_report.passed


def test_cleft_from_galois_rebuilds_a_cleft_witness(regular):
    _, (cm, coinv, nab, toc, gd) = regular
    gfc = galois_from_cleft(cm, coinv, toc, nab, CleftWitness.regular(cm), gd)
    back = cleft_from_galois(cm, coinv, toc, nab, is_galois(gd), gfc.normal_basis)
    assert back.passed, back.report.summary() + back.cleft_report.summary()


@pytest.mark.parametrize("start", ["cleft", "galois"])
def test_roundtrip_both_directions(regular, start):
    name, (cm, *_rest) = regular
    rt = roundtrip(cm, start)
    assert rt.roundtrip, [r.summary() for r in rt.reports if not r.passed]
    doc = rt.to_json()
    assert doc["direction"] == start and doc["roundtrip"] is True


# -- mutations ---------------------------------------------------------------------


def test_zero_inverse_fails_c1(c2):
    cm = ComoduleMagma.of_whq(c2)
    w = CleftWitness(cm.idH, zero(cm.Hsig, cm.Asig, cm.field))
    assert "c1" in failed(check_cleft(cm, w))


def test_h_through_target_fails_iv(pair3):
    cm, coinv, *_ = setup(pair3)
    H = pair3
    w = CleftWitness(C(H.id, H.piL), H.lam)
    props = cleft_properties(cm, coinv, w)
    assert failed(props.report) & {"iv-left", "iv-right"}


@pytest.mark.parametrize("name", ["s3", "pair3", "m12"])
def test_equivalence_sides_agree_on_perturbed_inverse(name, request):
    H = request.getfixturevalue(name)
    cm, coinv, *_ = setup(H)
    w = CleftWitness(H.id, H.id)
    c2 = check_c2_equivalence(cm, w)
    assert c2.values == (False, False)
    assert not c2.as_check().passed and c2.as_check().witness["side"] == "c2"
    assert check_c4_equivalence(cm, coinv, w).agree


def test_regular_witness_needs_regular_comodule(m12):
    cm = ComoduleMagma(m12, UnitalMagma(m12.eta, m12.mu), T(m12.id, m12.eta))
    with pytest.raises(ValueError):
        CleftWitness.regular(cm)
    with pytest.raises(ValueError):
        roundtrip(ComoduleMagma.of_whq(m12), "sideways")


# -- Hopf quasigroups ----------------------------------------------------------------


@pytest.mark.parametrize("name", ["c2", "s3", "m12"])
def test_corollary_on_hopf_quasigroups(name, request):
    cm = ComoduleMagma.of_whq(request.getfixturevalue(name))
    rep = corollary_hq(cm)
    assert rep.passed, rep.summary()
    assert {"nabla-identity", "omega-identity", "b-unit", "hinv-h", "h-hinv"} <= set(rep.names())
    assert check_cleft_hq(cm, CleftWitness.regular(cm)).passed


def test_corollary_rejects_weak_structures(pair3):
    with pytest.raises(NotAHopfQuasigroup):
        corollary_hq(ComoduleMagma.of_whq(pair3))
