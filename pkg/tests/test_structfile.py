from __future__ import annotations

import json

import pytest

from whqlab.errors import StructureFileError
from whqlab.field import GF
from whqlab.galois import (
    ComoduleMagma,
    canonical_gamma,
    check_normal_basis,
    coinvariants,
    example_normal_basis,
    gamma_inv_formula,
    nabla,
    tensor_over_coinvariants,
)
from whqlab.generators import cyclic_table, group_algebra, pair_groupoid
from whqlab.structfile import (
    FORMAT,
    StructureFile,
    from_whq,
    galois_witness_from_lift,
    gamma_inv_from_lift,
    normal_basis_from_lifts,
)


@pytest.mark.parametrize("name", ["c2", "s3", "pair3", "m12", "loopoid48"])
def test_dump_load_dump_is_byte_identical(name, request):
    sf = from_whq(request.getfixturevalue(name), metadata={"family": name})
    text = sf.dumps()
    again = StructureFile.loads(text)
    assert again.dumps() == text
    H = again.whq()
    assert H.mu == sf.whq().mu and H.lam == sf.whq().lam


def test_file_round_trip_over_prime_field(tmp_path):
    H = group_algebra(cyclic_table(3), GF(7))
    sf = from_whq(H)
    path = tmp_path / "c3.json"
    sf.write(path)
    back = StructureFile.read(path)
    assert back.field == GF(7)
    assert back.whq().mu == H.mu
    assert '"1 mod 7"' in path.read_text(encoding="utf-8")


def test_file_keeps_tables_and_groupoids(m12_table, pair3):
    sf = from_whq(pair3, groupoid=pair_groupoid(3), cayley=m12_table)
    back = StructureFile.loads(sf.dumps())
    assert back.cayley == m12_table
    assert back.groupoid.to_json() == pair_groupoid(3).to_json()


@pytest.mark.parametrize("name", ["s3", "pair3", "loopoid48"])
def test_lifted_witnesses_reproduce_the_regular_ones(name, request):
    H = request.getfixturevalue(name)
    sf = from_whq(H)
    cm = sf.comodule()
    assert cm.regular
    coinv = coinvariants(cm)
    nab = nabla(cm)
    toc = tensor_over_coinvariants(cm, coinv)
    lift = sf.bound("galois", "gamma_inv_lift")
    assert gamma_inv_from_lift(toc, nab, lift) == gamma_inv_formula(cm, toc, nab)
    gd = canonical_gamma(cm, coinv, nab, toc)
    assert galois_witness_from_lift(gd.gamma, toc, nab, lift).check().passed
    nbw, rep = normal_basis_from_lifts(cm, coinv, sf.bound("normal_basis", "Omega_lift"), sf.bound("normal_basis", "b_lift"))
    assert rep.passed and nbw is not None
    assert check_normal_basis(cm, coinv, nbw).passed
    ref = example_normal_basis(cm, coinv)
    assert nbw.Omega == ref.Omega and nbw.b == ref.b


def test_lifts_that_leave_the_coinvariants_are_reported(pair3):
    sf = from_whq(pair3)
    cm = sf.comodule()
    coinv = coinvariants(cm)
    om = sf.bound("normal_basis", "Omega_lift")
    nbw, rep = normal_basis_from_lifts(cm, coinv, om, cm.rho)
    assert nbw is None and "b-lift-closed" in {c.name for c in rep.failures}


def test_files_without_witnesses(c2):
    sf = from_whq(c2, witnesses=False)
    assert set(sf.bindings) == {"whq"}
    assert sf.maybe("cleft", "h") is None
    with pytest.raises(StructureFileError):
        sf.bound("cleft", "h")


def _doc(c2):
    return json.loads(from_whq(c2).dumps())


@pytest.mark.parametrize(
    "mutate, message",
    [
        (lambda d: d.update(format="other/1"), "unsupported format"),
        (lambda d: d.update(field="GF(4)"), "not prime"),
        (lambda d: d["spaces"].append({"name": "H", "dim": 2}), "duplicate space"),
        (lambda d: d["morphisms"]["mu"].update(dom=["Z"]), "undeclared space"),
        (lambda d: d["morphisms"]["mu"]["entries"].append([0, 99, "1"]), "morphism 'mu'"),
        (lambda d: d["morphisms"]["mu"]["entries"].append([0, 0, "1/0"]), "bad entry"),
        (lambda d: d["bindings"]["whq"].update(mu="nope"), "unknown morphism"),
        (lambda d: d.update(basis={"H": ["a"]}), "basis"),
        (lambda d: d.update(cayley={"table": 3}), "table or groupoid"),
    ],
)
def test_malformed_files_are_rejected(c2, mutate, message):
    d = _doc(c2)
    mutate(d)
    with pytest.raises(StructureFileError) as exc:
        StructureFile.from_json(d)
    assert message in str(exc.value)


def test_unreadable_inputs(tmp_path):
    with pytest.raises(StructureFileError):
        StructureFile.loads("{not json")
    with pytest.raises(StructureFileError):
        StructureFile.loads("[]")
    with pytest.raises(StructureFileError):
        StructureFile.read(tmp_path / "missing.json")


def test_mistyped_bindings(c2):
    d = _doc(c2)
    d["bindings"]["whq"]["mu"] = "delta"
    with pytest.raises(StructureFileError):
        StructureFile.from_json(d).whq()


def test_format_tag(c2):
    assert _doc(c2)["format"] == FORMAT


def test_comodule_binding_overrides_the_regular_coaction(c2):
    sf = from_whq(c2)
    sf.bindings["comodule"] = {"eta": "eta", "mu": "mu", "rho": "delta"}
    cm = sf.comodule()
    assert not cm.regular and cm.rho == c2.delta
    assert ComoduleMagma.of_whq(c2).regular
